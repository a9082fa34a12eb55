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

#ifndef PRERANK_MODEL_H_
#define PRERANK_MODEL_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "prerank/hog.h"
#include "prerank/objective.h"
#include "prerank/training_config.h"

namespace prerank {

struct Provenance {
  std::string dataset_digest;  // hex
  std::string created;         // ISO 8601, UTC
};

// A learned linear scoring function f(x) = w.x with its training metadata.
struct TrainedModel {
  WeightVector weights;
  std::size_t feature_dim = 0;
  TrainingConfig config;
  double final_objective = 0.0;
  std::optional<HogConfig> hog_config;
  Provenance provenance;
};

// Model file layout:
//   {"weights": [...], "feature_dim": int, "config": {...},
//    "final_objective": float, "hog_config": {...}?,
//    "provenance": {"dataset_digest": hex, "created": iso8601}}
// Doubles are written in shortest round-trip form, so weights reload
// bit-identically.
nlohmann::json ModelToJson(const TrainedModel& model);
TrainedModel ModelFromJson(const nlohmann::json& j);

void SaveModel(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel LoadModel(const std::filesystem::path& path);

// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string NowIso8601();

}  // namespace prerank

#endif  // PRERANK_MODEL_H_
