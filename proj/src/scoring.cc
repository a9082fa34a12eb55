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

#include "prerank/scoring.h"

#include <numeric>

#include <fmt/format.h>

#include "prerank/errors.h"

namespace prerank {

std::vector<double> Score(std::span<const double> weights,
                          const ImageRecord& record) {
  std::vector<double> scores;
  scores.reserve(record.candidates.size());
  for (std::size_t i = 0; i < record.candidates.size(); ++i) {
    const auto& f = record.candidates[i].features;
    if (!f) {
      throw DataError(fmt::format("image '{}': candidate {} has no features",
                                  record.image_id, i));
    }
    if (f->size() != weights.size()) {
      throw DataError(fmt::format(
          "image '{}': candidate {} has feature dimension {}, model expects {}",
          record.image_id, i, f->size(), weights.size()));
    }
    scores.push_back(std::inner_product(f->begin(), f->end(), weights.begin(), 0.0));
  }
  return scores;
}

std::vector<double> Score(const TrainedModel& model, const ImageRecord& record) {
  return Score(model.weights, record);
}

Permutation Rerank(std::span<const double> weights, const ImageRecord& record) {
  return ArgsortDescending(Score(weights, record));
}

Permutation Rerank(const TrainedModel& model, const ImageRecord& record) {
  return Rerank(model.weights, record);
}

Dataset RerankDataset(const TrainedModel& model, const Dataset& dataset) {
  Dataset out;
  out.feature_dim = dataset.feature_dim;
  out.records.reserve(dataset.records.size());
  for (const auto& record : dataset.records) {
    out.records.push_back(ApplyPermutation(record, Rerank(model, record)));
  }
  return out;
}

}  // namespace prerank
