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

#ifndef PRERANK_SYNTH_H_
#define PRERANK_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "prerank/dataset.h"
#include "prerank/objective.h"

namespace prerank {

enum class SynthMode { kFeatureOnly, kGeometric };

// Width of the geometric-mode feature embedding:
//   [y, y^2, sqrt(y), x_min/W, y_min/H, w/W, h/H, 1]
// with y the candidate's IoU label and Gaussian noise on all but the last
// (constant) component. It is IoU-informative by construction so that a
// linear model can rank by overlap; it does not model HOG.
inline constexpr std::size_t kGeometricFeatureDim = 8;

struct SynthConfig {
  std::uint64_t seed = 0;
  int num_images = 100;
  int candidates_per_image = 50;
  SynthMode mode = SynthMode::kFeatureOnly;
  double noise_sigma = 0.0;
  std::string id_prefix = "img";

  // Feature-only mode.
  int feature_dim = 16;
  std::optional<WeightVector> planted_weight;

  // Geometric mode.
  int image_width = 500;
  int image_height = 375;
  int min_objects = 1;
  int max_objects = 3;
  int num_classes = 3;
  // Jittered copies generated per groundtruth object; the remaining
  // candidates are uniform random boxes.
  int copies_per_object = 6;
  // Copy k gets a jitter magnitude s ~ U[0, jitter]; its corners move by up
  // to s times the object size. 0 yields exact copies.
  double jitter = 0.25;

  // Throws DataError on invalid values.
  void Validate() const;
};

nlohmann::json SynthConfigToJson(const SynthConfig& config);
SynthMode ParseSynthMode(const std::string& s);
std::string ToString(SynthMode mode);

struct FeatureDataset {
  Dataset dataset;
  WeightVector planted;  // unit norm
};

// Planted linear model: w* (unit norm, drawn from the seed unless given) and,
// per candidate, a latent quality y ~ U[0, 1] with
//   x = (y - 1/2) w* + noise_sigma * N(0, I),  iou_label = y.
// Groundtruth lists are empty and boxes are placeholders. With zero noise
// the score w*.x = y - 1/2 orders candidates exactly by label, and a margin
// separating top from bottom candidates is reachable without a bias term.
FeatureDataset GenerateFeatureDataset(const SynthConfig& config);

// Images with 1..3 labelled objects whose candidates are jittered object
// copies plus uniform random boxes, labeled by IoU, embedded as described at
// kGeometricFeatureDim and shuffled.
Dataset GenerateGeometricDataset(const SynthConfig& config);

// Sidecar metadata: config, generator description and constants, and the
// planted weight when present.
nlohmann::json SynthMetadata(const SynthConfig& config,
                             const std::optional<WeightVector>& planted);

}  // namespace prerank

#endif  // PRERANK_SYNTH_H_
