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

#ifndef PRERANK_TRAINING_CONFIG_H_
#define PRERANK_TRAINING_CONFIG_H_

#include <cstdint>
#include <string>

#include "json.hpp"

namespace prerank {

enum class TrainingMode { kSoft, kHard };

// How one image's constraints share slack. kShared uses a single slack per
// image (the tightest one satisfying all of its constraints, i.e. the max
// hinge); kPerConstraint sums the hinges.
enum class SlackMode { kShared, kPerConstraint };

enum class RankingObjective { kPartial, kFullPairs };

struct TrainingConfig {
  int k = 20;
  double C = 1.0;
  int epochs = 1000;
  // Initial step size; 0 selects 1 / (C_eff * N).
  double eta0 = 0.0;
  // Step decay: eta_t = eta0 / (1 + decay * t), t counting image visits.
  double decay = 1e-2;
  std::uint64_t seed = 0;
  TrainingMode mode = TrainingMode::kSoft;
  double hard_mode_C = 1e6;
  // Stop once the per-epoch relative objective change stays below this for
  // `patience` consecutive epochs. 0 disables early stopping.
  double convergence_tol = 1e-6;
  int patience = 10;
  SlackMode slack = SlackMode::kShared;
  RankingObjective objective = RankingObjective::kPartial;

  // The trade-off weight actually used: C in soft mode, hard_mode_C in hard
  // mode.
  double EffectiveC() const {
    return mode == TrainingMode::kHard ? hard_mode_C : C;
  }

  // Throws DataError on out-of-range values.
  void Validate() const;
};

nlohmann::json TrainingConfigToJson(const TrainingConfig& config);
TrainingConfig TrainingConfigFromJson(const nlohmann::json& j);

std::string ToString(TrainingMode mode);
std::string ToString(SlackMode mode);
std::string ToString(RankingObjective objective);
TrainingMode ParseTrainingMode(const std::string& s);
SlackMode ParseSlackMode(const std::string& s);
RankingObjective ParseRankingObjective(const std::string& s);

}  // namespace prerank

#endif  // PRERANK_TRAINING_CONFIG_H_
