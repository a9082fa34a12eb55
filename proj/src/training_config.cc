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

#include "prerank/training_config.h"

#include <cmath>

#include <fmt/format.h>

#include "prerank/errors.h"

namespace prerank {

void TrainingConfig::Validate() const {
  auto positive_finite = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (k < 1) throw DataError(fmt::format("k must be at least 1 (got {})", k));
  if (!positive_finite(C)) throw DataError(fmt::format("C must be positive (got {})", C));
  if (epochs < 1) throw DataError(fmt::format("epochs must be at least 1 (got {})", epochs));
  if (!(std::isfinite(eta0) && eta0 >= 0.0)) throw DataError("eta0 must be >= 0");
  if (!(std::isfinite(decay) && decay >= 0.0)) throw DataError("decay must be >= 0");
  if (!positive_finite(hard_mode_C)) throw DataError("hard_mode_C must be positive");
  if (!(std::isfinite(convergence_tol) && convergence_tol >= 0.0)) {
    throw DataError("convergence_tol must be >= 0");
  }
  if (patience < 1) throw DataError("patience must be at least 1");
}

std::string ToString(TrainingMode mode) {
  return mode == TrainingMode::kHard ? "hard" : "soft";
}

std::string ToString(SlackMode mode) {
  return mode == SlackMode::kShared ? "shared" : "per_constraint";
}

std::string ToString(RankingObjective objective) {
  return objective == RankingObjective::kPartial ? "partial" : "full";
}

TrainingMode ParseTrainingMode(const std::string& s) {
  if (s == "soft") return TrainingMode::kSoft;
  if (s == "hard") return TrainingMode::kHard;
  throw DataError(fmt::format("unknown training mode '{}'", s));
}

SlackMode ParseSlackMode(const std::string& s) {
  if (s == "shared") return SlackMode::kShared;
  if (s == "per_constraint") return SlackMode::kPerConstraint;
  throw DataError(fmt::format("unknown slack mode '{}'", s));
}

RankingObjective ParseRankingObjective(const std::string& s) {
  if (s == "partial") return RankingObjective::kPartial;
  if (s == "full") return RankingObjective::kFullPairs;
  throw DataError(fmt::format("unknown ranking objective '{}'", s));
}

nlohmann::json TrainingConfigToJson(const TrainingConfig& c) {
  return {{"k", c.k},
          {"C", c.C},
          {"epochs", c.epochs},
          {"eta0", c.eta0},
          {"decay", c.decay},
          {"seed", c.seed},
          {"mode", ToString(c.mode)},
          {"hard_mode_C", c.hard_mode_C},
          {"convergence_tol", c.convergence_tol},
          {"patience", c.patience},
          {"slack", ToString(c.slack)},
          {"objective", ToString(c.objective)},
          {"negatives_cap", "min(n-k,2k)"}};
}

TrainingConfig TrainingConfigFromJson(const nlohmann::json& j) {
  TrainingConfig c;
  try {
    c.k = j.value("k", c.k);
    c.C = j.value("C", c.C);
    c.epochs = j.value("epochs", c.epochs);
    c.eta0 = j.value("eta0", c.eta0);
    c.decay = j.value("decay", c.decay);
    c.seed = j.value("seed", c.seed);
    c.mode = ParseTrainingMode(j.value("mode", ToString(c.mode)));
    c.hard_mode_C = j.value("hard_mode_C", c.hard_mode_C);
    c.convergence_tol = j.value("convergence_tol", c.convergence_tol);
    c.patience = j.value("patience", c.patience);
    c.slack = ParseSlackMode(j.value("slack", ToString(c.slack)));
    c.objective = ParseRankingObjective(j.value("objective", ToString(c.objective)));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(fmt::format("bad training config: {}", e.what()));
  }
  c.Validate();
  return c;
}

}  // namespace prerank
