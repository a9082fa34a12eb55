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

#include "prerank/model.h"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>

#include <fmt/format.h>

#include "prerank/errors.h"

namespace prerank {

using nlohmann::json;

json ModelToJson(const TrainedModel& model) {
  json j = {{"weights", model.weights},
            {"feature_dim", model.feature_dim},
            {"config", TrainingConfigToJson(model.config)},
            {"final_objective", model.final_objective},
            {"provenance",
             {{"dataset_digest", model.provenance.dataset_digest},
              {"created", model.provenance.created}}}};
  if (model.hog_config) j["hog_config"] = HogConfigToJson(*model.hog_config);
  return j;
}

TrainedModel ModelFromJson(const json& j) {
  TrainedModel model;
  try {
    model.weights = j.at("weights").get<WeightVector>();
    model.feature_dim = j.at("feature_dim").get<std::size_t>();
    model.config = TrainingConfigFromJson(j.at("config"));
    model.final_objective = j.at("final_objective").get<double>();
    if (auto it = j.find("hog_config"); it != j.end() && !it->is_null()) {
      model.hog_config = HogConfigFromJson(*it);
    }
    if (auto it = j.find("provenance"); it != j.end()) {
      model.provenance.dataset_digest = it->value("dataset_digest", "");
      model.provenance.created = it->value("created", "");
    }
  } catch (const json::exception& e) {
    throw DataError(fmt::format("malformed model: {}", e.what()));
  }
  if (model.weights.size() != model.feature_dim) {
    throw DataError(fmt::format("model has {} weights but feature_dim {}",
                                model.weights.size(), model.feature_dim));
  }
  for (double v : model.weights) {
    if (!std::isfinite(v)) throw DataError("model has non-finite weights");
  }
  return model;
}

void SaveModel(const TrainedModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError(fmt::format("cannot write model '{}'", path.string()));
  out << ModelToJson(model).dump(2) << '\n';
}

TrainedModel LoadModel(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(fmt::format("cannot open model '{}'", path.string()));
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw DataError(fmt::format("{}: malformed JSON: {}", path.string(), e.what()));
  }
  return ModelFromJson(j);
}

std::string NowIso8601() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace prerank
