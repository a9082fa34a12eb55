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

#include "prerank/synth.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "prerank/errors.h"
#include "prerank/rng.h"

namespace prerank {

namespace {

// Streams 0..N-1 belong to images; the planted weight uses its own.
constexpr std::uint64_t kPlantedStream = 0x706C616E746564ULL;

std::string ImageId(const SynthConfig& config, int index) {
  return fmt::format("{}_{:06d}", config.id_prefix, index);
}

// Integer-pixel box with both corners inside the image and at least one
// pixel of extent.
Box SnapBox(double x0, double y0, double x1, double y1, int width, int height) {
  auto snap = [](double v, int hi) {
    return std::clamp(std::round(v), 0.0, static_cast<double>(hi));
  };
  Box b{snap(x0, width), snap(y0, height), snap(x1, width), snap(y1, height)};
  if (b.x_max - b.x_min < 1.0) {
    if (b.x_max < width) {
      b.x_max = b.x_min + 1.0;
    } else {
      b.x_min = b.x_max - 1.0;
    }
  }
  if (b.y_max - b.y_min < 1.0) {
    if (b.y_max < height) {
      b.y_max = b.y_min + 1.0;
    } else {
      b.y_min = b.y_max - 1.0;
    }
  }
  return b;
}

Box RandomBox(CounterRng& rng, int width, int height, double min_frac,
              double max_frac) {
  const double w = rng.Uniform(min_frac, max_frac) * width;
  const double h = rng.Uniform(min_frac, max_frac) * height;
  const double x0 = rng.Uniform(0.0, width - w);
  const double y0 = rng.Uniform(0.0, height - h);
  return SnapBox(x0, y0, x0 + w, y0 + h, width, height);
}

Box JitteredCopy(CounterRng& rng, const Box& gt, double jitter, int width,
                 int height) {
  const double s = jitter * rng.Uniform();
  const double w = gt.Width();
  const double h = gt.Height();
  const double x0 = gt.x_min + s * w * rng.Uniform(-1.0, 1.0);
  const double y0 = gt.y_min + s * h * rng.Uniform(-1.0, 1.0);
  const double x1 = gt.x_max + s * w * rng.Uniform(-1.0, 1.0);
  const double y1 = gt.y_max + s * h * rng.Uniform(-1.0, 1.0);
  return SnapBox(std::min(x0, x1), std::min(y0, y1), std::max(x0, x1),
                 std::max(y0, y1), width, height);
}

template <typename T>
void Shuffle(std::vector<T>& v, CounterRng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.Below(i)]);
  }
}

}  // namespace

void SynthConfig::Validate() const {
  if (num_images < 0) throw DataError("num_images must be non-negative");
  if (candidates_per_image < 1) throw DataError("candidates_per_image must be positive");
  if (!(std::isfinite(noise_sigma) && noise_sigma >= 0.0)) {
    throw DataError("noise_sigma must be finite and non-negative");
  }
  if (id_prefix.empty()) throw DataError("id_prefix must be non-empty");
  if (image_width < 2 || image_height < 2) throw DataError("image size must be at least 2x2");
  if (mode == SynthMode::kFeatureOnly) {
    if (feature_dim < 1) throw DataError("feature_dim must be positive");
    if (planted_weight) {
      if (planted_weight->size() != static_cast<std::size_t>(feature_dim)) {
        throw DataError(fmt::format("planted weight has {} entries, feature_dim is {}",
                                    planted_weight->size(), feature_dim));
      }
      double norm = 0.0;
      for (double v : *planted_weight) {
        if (!std::isfinite(v)) throw DataError("planted weight must be finite");
        norm += v * v;
      }
      if (norm == 0.0) throw DataError("planted weight must be non-zero");
    }
  } else {
    if (min_objects < 1 || max_objects < min_objects) {
      throw DataError("objects per image must satisfy 1 <= min <= max");
    }
    if (num_classes < 1) throw DataError("num_classes must be positive");
    if (copies_per_object < 0) throw DataError("copies_per_object must be non-negative");
    if (!(std::isfinite(jitter) && jitter >= 0.0)) {
      throw DataError("jitter must be finite and non-negative");
    }
  }
}

std::string ToString(SynthMode mode) {
  return mode == SynthMode::kFeatureOnly ? "feature_only" : "geometric";
}

SynthMode ParseSynthMode(const std::string& s) {
  if (s == "feature_only") return SynthMode::kFeatureOnly;
  if (s == "geometric") return SynthMode::kGeometric;
  throw DataError(fmt::format("unknown synth mode '{}'", s));
}

nlohmann::json SynthConfigToJson(const SynthConfig& c) {
  nlohmann::json j = {{"seed", c.seed},
                      {"num_images", c.num_images},
                      {"candidates_per_image", c.candidates_per_image},
                      {"mode", ToString(c.mode)},
                      {"noise_sigma", c.noise_sigma},
                      {"id_prefix", c.id_prefix},
                      {"image_width", c.image_width},
                      {"image_height", c.image_height}};
  if (c.mode == SynthMode::kFeatureOnly) {
    j["feature_dim"] = c.feature_dim;
    if (c.planted_weight) j["planted_weight"] = *c.planted_weight;
  } else {
    j["min_objects"] = c.min_objects;
    j["max_objects"] = c.max_objects;
    j["num_classes"] = c.num_classes;
    j["copies_per_object"] = c.copies_per_object;
    j["jitter"] = c.jitter;
  }
  return j;
}

FeatureDataset GenerateFeatureDataset(const SynthConfig& config) {
  config.Validate();
  if (config.mode != SynthMode::kFeatureOnly) {
    throw DataError("GenerateFeatureDataset needs mode feature_only");
  }
  const std::size_t d = static_cast<std::size_t>(config.feature_dim);
  FeatureDataset out;
  if (config.planted_weight) {
    out.planted = *config.planted_weight;
  } else {
    CounterRng rng(config.seed, kPlantedStream);
    out.planted.resize(d);
    for (double& v : out.planted) v = rng.Normal();
  }
  double norm = 0.0;
  for (double v : out.planted) norm += v * v;
  norm = std::sqrt(norm);
  if (norm == 0.0) throw NumericError("planted weight drew the zero vector");
  for (double& v : out.planted) v /= norm;

  out.dataset.feature_dim = d;
  for (int j = 0; j < config.num_images; ++j) {
    CounterRng rng(config.seed, static_cast<std::uint64_t>(j));
    ImageRecord record;
    record.image_id = ImageId(config, j);
    record.width = config.image_width;
    record.height = config.image_height;
    for (int i = 0; i < config.candidates_per_image; ++i) {
      Candidate c;
      const double y = rng.Uniform();
      c.iou_label = y;
      FeatureVector x(d);
      for (std::size_t f = 0; f < d; ++f) {
        x[f] = (y - 0.5) * out.planted[f];
        if (config.noise_sigma > 0.0) x[f] += config.noise_sigma * rng.Normal();
      }
      c.features = std::move(x);
      c.box = RandomBox(rng, config.image_width, config.image_height, 0.05, 0.6);
      record.candidates.push_back(std::move(c));
    }
    out.dataset.records.push_back(std::move(record));
  }
  return out;
}

Dataset GenerateGeometricDataset(const SynthConfig& config) {
  config.Validate();
  if (config.mode != SynthMode::kGeometric) {
    throw DataError("GenerateGeometricDataset needs mode geometric");
  }
  const int width = config.image_width;
  const int height = config.image_height;
  const int n = config.candidates_per_image;

  Dataset dataset;
  dataset.feature_dim = kGeometricFeatureDim;
  for (int j = 0; j < config.num_images; ++j) {
    CounterRng rng(config.seed, static_cast<std::uint64_t>(j));
    ImageRecord record;
    record.image_id = ImageId(config, j);
    record.width = width;
    record.height = height;

    const int span = config.max_objects - config.min_objects + 1;
    const int objects = config.min_objects + static_cast<int>(rng.Below(span));
    for (int o = 0; o < objects; ++o) {
      GroundTruthObject gt;
      gt.class_label = fmt::format("class_{}", rng.Below(config.num_classes));
      gt.box = RandomBox(rng, width, height, 0.15, 0.5);
      record.groundtruth.push_back(std::move(gt));
    }

    for (const auto& gt : record.groundtruth) {
      for (int c = 0; c < config.copies_per_object; ++c) {
        if (static_cast<int>(record.candidates.size()) >= n) break;
        Candidate cand;
        cand.box = JitteredCopy(rng, gt.box, config.jitter, width, height);
        record.candidates.push_back(std::move(cand));
      }
    }
    while (static_cast<int>(record.candidates.size()) < n) {
      Candidate cand;
      cand.box = RandomBox(rng, width, height, 0.05, 0.6);
      record.candidates.push_back(std::move(cand));
    }

    record = LabelCandidates(record);
    for (auto& cand : record.candidates) {
      const double y = *cand.iou_label;
      const Box& b = cand.box;
      FeatureVector x = {y,
                         y * y,
                         std::sqrt(y),
                         b.x_min / width,
                         b.y_min / height,
                         b.Width() / width,
                         b.Height() / height,
                         1.0};
      if (config.noise_sigma > 0.0) {
        for (std::size_t f = 0; f + 1 < x.size(); ++f) {
          x[f] += config.noise_sigma * rng.Normal();
        }
      }
      cand.features = std::move(x);
    }
    Shuffle(record.candidates, rng);
    dataset.records.push_back(std::move(record));
  }
  return dataset;
}

nlohmann::json SynthMetadata(const SynthConfig& config,
                             const std::optional<WeightVector>& planted) {
  nlohmann::json j = {
      {"config", SynthConfigToJson(config)},
      {"generator",
       {{"name", "counter-splitmix64"},
        {"description",
         "draw i of stream s: mix(key + i*golden), key = mix(seed ^ mix(s + salt)); "
         "uniform = (u64 >> 11) * 2^-53; normal = Box-Muller"},
        {"golden", fmt::format("0x{:016X}", CounterRng::kGolden)},
        {"salt", fmt::format("0x{:016X}", CounterRng::kStreamSalt)},
        {"mix1", fmt::format("0x{:016X}", CounterRng::kMix1)},
        {"mix2", fmt::format("0x{:016X}", CounterRng::kMix2)},
        {"planted_stream", fmt::format("0x{:X}", kPlantedStream)},
        {"image_stream", "image index"}}}};
  if (config.mode == SynthMode::kGeometric) {
    j["feature_embedding"] =
        "[y, y^2, sqrt(y), x_min/W, y_min/H, w/W, h/H, 1] + noise on the first 7";
  } else {
    j["feature_model"] = "x = (y - 1/2) * w_planted + noise_sigma * N(0, I)";
  }
  if (planted) j["planted_weight"] = *planted;
  return j;
}

}  // namespace prerank
