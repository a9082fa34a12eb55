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

#ifndef PRERANK_SCORING_H_
#define PRERANK_SCORING_H_

#include <span>
#include <vector>

#include "prerank/dataset.h"
#include "prerank/model.h"

namespace prerank {

// Candidate scores w.x_i in candidate order. Throws DataError when a
// candidate lacks features or their dimension differs from w.
std::vector<double> Score(std::span<const double> weights,
                          const ImageRecord& record);
std::vector<double> Score(const TrainedModel& model, const ImageRecord& record);

// Candidate indices by descending score, ties in original order.
Permutation Rerank(std::span<const double> weights, const ImageRecord& record);
Permutation Rerank(const TrainedModel& model, const ImageRecord& record);

// Reorders every record by Rerank, recording original positions.
Dataset RerankDataset(const TrainedModel& model, const Dataset& dataset);

}  // namespace prerank

#endif  // PRERANK_SCORING_H_
