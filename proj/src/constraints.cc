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

#include "prerank/constraints.h"

#include <algorithm>

#include <fmt/format.h>

#include "prerank/errors.h"

namespace prerank {

namespace {

void RequireLabels(const ImageRecord& record) {
  for (std::size_t i = 0; i < record.candidates.size(); ++i) {
    if (!record.candidates[i].iou_label) {
      throw DataError(fmt::format("image '{}': candidate {} has no iou_label",
                                  record.image_id, i));
    }
  }
}

}  // namespace

std::size_t NegativesCap(std::size_t n, std::size_t k) {
  return n <= k ? 0 : std::min(n - k, 2 * k);
}

ConstraintPartition BuildPartialConstraints(const ImageRecord& record,
                                            const TrainingConfig& config) {
  if (config.k < 1) throw DataError("k must be at least 1");
  const std::size_t k = static_cast<std::size_t>(config.k);
  const std::size_t n = record.candidates.size();
  if (n <= k) {
    throw DataError(fmt::format(
        "image '{}': {} candidates cannot be split with k = {} (need n > k)",
        record.image_id, n, k));
  }
  RequireLabels(record);
  const Permutation order = RankByLabel(record);
  ConstraintPartition partition;
  partition.positives.assign(order.begin(), order.begin() + k);
  partition.negatives.assign(order.end() - NegativesCap(n, k), order.end());
  return partition;
}

std::vector<std::pair<std::size_t, std::size_t>> BuildFullConstraints(
    const ImageRecord& record) {
  RequireLabels(record);
  const Permutation order = RankByLabel(record);
  const std::size_t n = order.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(order[a], order[b]);
  }
  return pairs;
}

ConstraintCount CountConstraints(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || k >= n) {
    throw DataError(fmt::format("constraint count needs 1 <= k < n (got n = {}, k = {})", n, k));
  }
  return ConstraintCount{k * (n - k), n * (n - 1) / 2};
}

}  // namespace prerank
