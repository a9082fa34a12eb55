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

#include "prerank/trainer.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "prerank/constraints.h"
#include "prerank/dataset_io.h"
#include "prerank/digest.h"
#include "prerank/errors.h"
#include "prerank/objective.h"
#include "prerank/rng.h"

namespace prerank {

namespace {

// Stream id reserved for the image visiting order.
constexpr std::uint64_t kOrderStream = 0x6F72646572ULL;

std::vector<std::size_t> VisitOrder(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  CounterRng rng(seed, kOrderStream);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[rng.Below(i)]);
  }
  return order;
}

void CheckTrainable(const Dataset& dataset) {
  if (dataset.records.empty()) throw DataError("cannot train on an empty dataset");
  for (const auto& r : dataset.records) {
    for (std::size_t i = 0; i < r.candidates.size(); ++i) {
      const auto& f = r.candidates[i].features;
      if (!f) {
        throw DataError(fmt::format("image '{}': candidate {} has no features",
                                    r.image_id, i));
      }
      for (double v : *f) {
        if (!std::isfinite(v)) {
          throw DataError(fmt::format(
              "image '{}': candidate {} has a non-finite feature value",
              r.image_id, i));
        }
      }
    }
  }
}

TrainResult Solve(const RankingProblem& problem, const Dataset& dataset,
                  const TrainingConfig& config, const EpochCallback& on_epoch) {
  const std::size_t dim = problem.dim();
  const std::size_t num_images = problem.num_images();
  const double c = problem.C();
  const double eta0 = config.eta0 > 0.0 ? config.eta0 : 1.0 / (c * num_images);
  const double inv_n = 1.0 / static_cast<double>(num_images);
  const std::vector<std::size_t> order = VisitOrder(num_images, config.seed);

  TrainResult result;
  WeightVector w(dim, 0.0);
  WeightVector best_w = w;
  double best = problem.Objective(w);
  result.initial_objective = best;

  std::vector<double> grad(dim);
  double prev = best;
  int quiet_epochs = 0;
  std::uint64_t t = 0;
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    for (std::size_t j : order) {
      const double eta = eta0 / (1.0 + config.decay * static_cast<double>(t));
      for (std::size_t i = 0; i < dim; ++i) grad[i] = w[i] * inv_n;
      problem.AddLossSubgradient(j, w, c, grad);
      for (std::size_t i = 0; i < dim; ++i) w[i] -= eta * grad[i];
      ++t;
    }
    const double f = problem.Objective(w);
    if (!std::isfinite(f)) {
      throw NumericError(fmt::format("objective became non-finite in epoch {}", epoch));
    }
    if (f < best) {
      best = f;
      best_w = w;
    }
    result.objective_trace.push_back(f);
    result.best_trace.push_back(best);
    result.epochs_run = epoch;
    if (on_epoch) on_epoch(epoch, f, best);

    if (config.convergence_tol > 0.0) {
      const double rel = std::abs(f - prev) / std::max(std::abs(prev), 1e-12);
      quiet_epochs = rel < config.convergence_tol ? quiet_epochs + 1 : 0;
      if (quiet_epochs >= config.patience) {
        result.converged = true;
        break;
      }
    }
    prev = f;
  }

  TrainedModel& model = result.model;
  model.weights = std::move(best_w);
  model.feature_dim = dim;
  model.config = config;
  model.final_objective = best;
  model.provenance.dataset_digest = DigestHex(DatasetToJsonl(dataset));
  model.provenance.created = NowIso8601();
  return result;
}

bool AllRecordsSplittable(const Dataset& dataset, int k) {
  return std::all_of(dataset.records.begin(), dataset.records.end(),
                     [&](const ImageRecord& r) {
                       return r.candidates.size() > static_cast<std::size_t>(k);
                     });
}

}  // namespace

ViolationReport CheckPartialConstraints(std::span<const double> w,
                                        const Dataset& dataset,
                                        const TrainingConfig& config) {
  ViolationReport report;
  report.min_score_gap = std::numeric_limits<double>::infinity();
  for (const auto& record : dataset.records) {
    const ConstraintPartition part = BuildPartialConstraints(record, config);
    auto score = [&](std::size_t idx) {
      const auto& f = record.candidates[idx].features;
      if (!f || f->size() != w.size()) {
        throw DataError(fmt::format(
            "image '{}': candidate {} features do not match the weights",
            record.image_id, idx));
      }
      return std::inner_product(f->begin(), f->end(), w.begin(), 0.0);
    };
    std::vector<double> pos, neg;
    for (std::size_t p : part.positives) pos.push_back(score(p));
    for (std::size_t q : part.negatives) neg.push_back(score(q));

    std::size_t bad = 0;
    for (double sp : pos) {
      for (double sq : neg) bad += sp > sq ? 0 : 1;
    }
    report.order_violations += bad;
    report.images_with_order_violations += bad > 0 ? 1 : 0;
    for (double sp : pos) {
      const double h = 1.0 - sp;
      if (h > 0.0) ++report.margin_violations;
      report.max_hinge = std::max(report.max_hinge, h);
    }
    for (double sq : neg) {
      const double h = 1.0 + sq;
      if (h > 0.0) ++report.margin_violations;
      report.max_hinge = std::max(report.max_hinge, h);
    }
    if (!pos.empty() && !neg.empty()) {
      const double gap = *std::min_element(pos.begin(), pos.end()) -
                         *std::max_element(neg.begin(), neg.end());
      report.min_score_gap = std::min(report.min_score_gap, gap);
    }
    ++report.images;
  }
  report.max_hinge = std::max(report.max_hinge, 0.0);
  return report;
}

TrainResult Train(const Dataset& dataset, const TrainingConfig& config,
                  const EpochCallback& on_epoch) {
  config.Validate();
  CheckTrainable(dataset);
  TrainResult result;
  if (config.objective == RankingObjective::kPartial) {
    result = Solve(RankingProblem::Partial(dataset, config), dataset, config, on_epoch);
    result.violations = CheckPartialConstraints(result.model.weights, dataset, config);
  } else {
    result = Solve(RankingProblem::FullPairs(dataset, config), dataset, config, on_epoch);
    if (AllRecordsSplittable(dataset, config.k)) {
      result.violations = CheckPartialConstraints(result.model.weights, dataset, config);
    }
  }
  return result;
}

TrainResult TrainSoftMargin(const Dataset& dataset, TrainingConfig config,
                            const EpochCallback& on_epoch) {
  config.objective = RankingObjective::kPartial;
  return Train(dataset, config, on_epoch);
}

TrainResult TrainFullRankBaseline(const Dataset& dataset, TrainingConfig config,
                                  const EpochCallback& on_epoch) {
  config.objective = RankingObjective::kFullPairs;
  return Train(dataset, config, on_epoch);
}

}  // namespace prerank
