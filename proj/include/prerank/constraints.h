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

#ifndef PRERANK_CONSTRAINTS_H_
#define PRERANK_CONSTRAINTS_H_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "prerank/dataset.h"
#include "prerank/training_config.h"

namespace prerank {

// Top-k positives and capped bottom negatives of one image, as candidate
// indices in ranking order.
struct ConstraintPartition {
  std::vector<std::size_t> positives;
  std::vector<std::size_t> negatives;
};

// Size of the negative set for n candidates and top-k positives.
std::size_t NegativesCap(std::size_t n, std::size_t k);

// Positives are the k highest iou_labels and negatives the
// NegativesCap(n, k) lowest, both with a stable tie-break on candidate
// position. Throws DataError naming the image when n <= k.
ConstraintPartition BuildPartialConstraints(const ImageRecord& record,
                                            const TrainingConfig& config);

// Every (better, worse) pair of the descending-label order, as original
// candidate indices: n(n-1)/2 pairs.
std::vector<std::pair<std::size_t, std::size_t>> BuildFullConstraints(
    const ImageRecord& record);

struct ConstraintCount {
  std::uint64_t partial = 0;  // k(n-k), without the negatives cap
  std::uint64_t full = 0;     // n(n-1)/2
};

// Throws DataError unless 1 <= k < n.
ConstraintCount CountConstraints(std::uint64_t n, std::uint64_t k);

}  // namespace prerank

#endif  // PRERANK_CONSTRAINTS_H_
