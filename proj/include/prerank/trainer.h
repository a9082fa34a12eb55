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

#ifndef PRERANK_TRAINER_H_
#define PRERANK_TRAINER_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "prerank/dataset.h"
#include "prerank/model.h"
#include "prerank/training_config.h"

namespace prerank {

// How well a weight vector satisfies the partial constraints of a dataset.
struct ViolationReport {
  std::size_t images = 0;
  // Top-k vs. bottom pairs whose scores are not strictly ordered.
  std::size_t order_violations = 0;
  std::size_t images_with_order_violations = 0;
  // Margin constraints (w.x_p >= +1, w.x_q <= -1) with positive hinge.
  std::size_t margin_violations = 0;
  double max_hinge = 0.0;
  // min over images of (min positive score - max negative score).
  double min_score_gap = 0.0;
};

ViolationReport CheckPartialConstraints(std::span<const double> w,
                                        const Dataset& dataset,
                                        const TrainingConfig& config);

struct TrainResult {
  TrainedModel model;
  double initial_objective = 0.0;  // objective at w = 0
  // Objective of the iterate at the end of each epoch, and the best value
  // seen so far (the returned model is the best iterate).
  std::vector<double> objective_trace;
  std::vector<double> best_trace;
  int epochs_run = 0;
  bool converged = false;
  // Partial-constraint check of the returned weights (partial objective
  // only; the full-pairs baseline reports it when k < n holds everywhere).
  std::optional<ViolationReport> violations;
};

// Called after every epoch with (epoch, objective, best objective).
using EpochCallback = std::function<void(int, double, double)>;

// Deterministic incremental subgradient descent on the regularized hinge
// objective selected by `config.objective`. Starting from w = 0, each epoch
// visits the images in a fixed seed-derived order; visit t applies
//   w <- w - eta_t * (w / N + C_eff * g_j),  eta_t = eta0 / (1 + decay * t),
// with g_j a subgradient of image j's loss (its most violated constraint
// under shared slack). Throws DataError on an empty or unfeaturized dataset
// and NumericError if the iterates stop being finite.
TrainResult Train(const Dataset& dataset, const TrainingConfig& config,
                  const EpochCallback& on_epoch = nullptr);

// Train with the partial top-k objective.
TrainResult TrainSoftMargin(const Dataset& dataset, TrainingConfig config,
                            const EpochCallback& on_epoch = nullptr);

// Train with one hinge per ranked pair (the full-ranking baseline).
TrainResult TrainFullRankBaseline(const Dataset& dataset, TrainingConfig config,
                                  const EpochCallback& on_epoch = nullptr);

}  // namespace prerank

#endif  // PRERANK_TRAINER_H_
