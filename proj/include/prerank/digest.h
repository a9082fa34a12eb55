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

#ifndef PRERANK_DIGEST_H_
#define PRERANK_DIGEST_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace prerank {

// 64-bit FNV-1a. Used to fingerprint datasets and configs in provenance
// records; not a cryptographic hash.
std::uint64_t Fnv1a64(std::string_view bytes);

// Fnv1a64 rendered as 16 lowercase hex digits.
std::string DigestHex(std::string_view bytes);

}  // namespace prerank

#endif  // PRERANK_DIGEST_H_
