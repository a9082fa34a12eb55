// Copyright 2026 The Prerank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRERANK_ERRORS_H_
#define PRERANK_ERRORS_H_

#include <stdexcept>
#include <string>

namespace prerank {

// Malformed or inconsistent input data: bad boxes, dimension mismatches,
// records that cannot be partitioned, missing images.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation produced non-finite values or otherwise failed numerically.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A metric is undefined for the given input (e.g. no groundtruth objects).
class UndefinedMetricError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace prerank

#endif  // PRERANK_ERRORS_H_
