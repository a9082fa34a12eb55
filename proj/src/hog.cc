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

#include "prerank/hog.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

#include <fmt/format.h>

#include "prerank/errors.h"

namespace prerank {

namespace {

constexpr double kNormEpsilon = 1e-10;

void L2Normalize(std::span<double> v) {
  double ss = 0.0;
  for (double x : v) ss += x * x;
  const double inv = 1.0 / (std::sqrt(ss) + kNormEpsilon);
  for (double& x : v) x *= inv;
}

}  // namespace

std::size_t HogConfig::Dimension() const {
  return static_cast<std::size_t>(BlocksX()) * BlocksY() * block_size *
         block_size * orientation_bins;
}

void HogConfig::Validate() const {
  if (resize_w <= 0 || resize_h <= 0 || cell_size <= 0 ||
      orientation_bins <= 0 || block_size <= 0 || block_stride <= 0) {
    throw DataError("HOG parameters must be positive");
  }
  if (!(clip_value > 0.0) || !std::isfinite(clip_value)) {
    throw DataError("HOG clip value must be positive and finite");
  }
  if (CellsX() < block_size || CellsY() < block_size) {
    throw DataError(fmt::format(
        "HOG cell grid {}x{} is smaller than a {}x{} block", CellsX(), CellsY(),
        block_size, block_size));
  }
}

nlohmann::json HogConfigToJson(const HogConfig& c) {
  return {{"resize_w", c.resize_w},         {"resize_h", c.resize_h},
          {"cell_size", c.cell_size},       {"orientation_bins", c.orientation_bins},
          {"block_size", c.block_size},     {"block_stride", c.block_stride},
          {"clip_value", c.clip_value}};
}

HogConfig HogConfigFromJson(const nlohmann::json& j) {
  HogConfig c;
  try {
    c.resize_w = j.value("resize_w", c.resize_w);
    c.resize_h = j.value("resize_h", c.resize_h);
    c.cell_size = j.value("cell_size", c.cell_size);
    c.orientation_bins = j.value("orientation_bins", c.orientation_bins);
    c.block_size = j.value("block_size", c.block_size);
    c.block_stride = j.value("block_stride", c.block_stride);
    c.clip_value = j.value("clip_value", c.clip_value);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(fmt::format("bad HOG config: {}", e.what()));
  }
  c.Validate();
  return c;
}

GrayImage CropAndResize(const GrayImage& image, const Box& box,
                        const HogConfig& config) {
  ValidateBox(box, "crop");
  if (!box.InBounds(image.width(), image.height())) {
    throw DataError(fmt::format("crop box {} lies outside the {}x{} image",
                                box.ToString(), image.width(), image.height()));
  }
  const int out_w = config.resize_w;
  const int out_h = config.resize_h;
  const double sx = box.Width() / out_w;
  const double sy = box.Height() / out_h;
  const double max_x = image.width() - 1;
  const double max_y = image.height() - 1;

  GrayImage patch(out_w, out_h);
  for (int v = 0; v < out_h; ++v) {
    const double fy = std::clamp(box.y_min + (v + 0.5) * sy - 0.5, 0.0, max_y);
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, image.height() - 1);
    const double wy = fy - y0;
    for (int u = 0; u < out_w; ++u) {
      const double fx = std::clamp(box.x_min + (u + 0.5) * sx - 0.5, 0.0, max_x);
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, image.width() - 1);
      const double wx = fx - x0;
      const double top = (1.0 - wx) * image.at(x0, y0) + wx * image.at(x1, y0);
      const double bottom = (1.0 - wx) * image.at(x0, y1) + wx * image.at(x1, y1);
      patch.set(u, v, (1.0 - wy) * top + wy * bottom);
    }
  }
  return patch;
}

std::vector<double> CellHistograms(const GrayImage& patch,
                                   const HogConfig& config) {
  config.Validate();
  if (patch.width() != config.resize_w || patch.height() != config.resize_h) {
    throw DataError(fmt::format("HOG patch is {}x{}, expected {}x{}",
                                patch.width(), patch.height(), config.resize_w,
                                config.resize_h));
  }
  const int cells_x = config.CellsX();
  const int cells_y = config.CellsY();
  const int bins = config.orientation_bins;
  const int w = patch.width();
  const int h = patch.height();
  // Bin b is centred on b * (180 / bins) degrees, so a purely horizontal
  // gradient lands entirely in bin 0.
  const double bin_width = std::numbers::pi / bins;

  std::vector<double> hist(static_cast<std::size_t>(cells_x) * cells_y * bins, 0.0);
  for (int y = 0; y < cells_y * config.cell_size; ++y) {
    const int cy = y / config.cell_size;
    for (int x = 0; x < cells_x * config.cell_size; ++x) {
      const int cx = x / config.cell_size;
      const double gx = patch.at(std::min(x + 1, w - 1), y) - patch.at(std::max(x - 1, 0), y);
      const double gy = patch.at(x, std::min(y + 1, h - 1)) - patch.at(x, std::max(y - 1, 0));
      const double mag = std::hypot(gx, gy);
      if (mag == 0.0) continue;
      double angle = std::atan2(gy, gx);
      if (angle < 0.0) angle += std::numbers::pi;
      if (angle >= std::numbers::pi) angle -= std::numbers::pi;
      const double pos = angle / bin_width;
      int lo = static_cast<int>(std::floor(pos));
      const double frac = pos - lo;
      lo %= bins;
      const int hi = (lo + 1) % bins;
      double* cell = &hist[(static_cast<std::size_t>(cy) * cells_x + cx) * bins];
      cell[lo] += mag * (1.0 - frac);
      cell[hi] += mag * frac;
    }
  }
  return hist;
}

FeatureVector ComputeHog(const GrayImage& patch, const HogConfig& config) {
  const std::vector<double> hist = CellHistograms(patch, config);
  const int cells_x = config.CellsX();
  const int bins = config.orientation_bins;
  const int bs = config.block_size;
  const std::size_t block_len = static_cast<std::size_t>(bs) * bs * bins;

  FeatureVector out;
  out.reserve(config.Dimension());
  std::vector<double> block(block_len);
  for (int by = 0; by < config.BlocksY(); ++by) {
    for (int bx = 0; bx < config.BlocksX(); ++bx) {
      std::size_t k = 0;
      for (int dy = 0; dy < bs; ++dy) {
        for (int dx = 0; dx < bs; ++dx) {
          const int cy = by * config.block_stride + dy;
          const int cx = bx * config.block_stride + dx;
          const double* cell = &hist[(static_cast<std::size_t>(cy) * cells_x + cx) * bins];
          for (int b = 0; b < bins; ++b) block[k++] = cell[b];
        }
      }
      // L2-hys: normalize, clip, renormalize.
      L2Normalize(block);
      for (double& v : block) v = std::min(v, config.clip_value);
      L2Normalize(block);
      out.insert(out.end(), block.begin(), block.end());
    }
  }
  return out;
}

ImageSource PgmDirectorySource(std::filesystem::path dir) {
  return [dir = std::move(dir)](const std::string& id) -> std::optional<GrayImage> {
    const auto path = dir / (id + ".pgm");
    if (!std::filesystem::exists(path)) return std::nullopt;
    return ReadPgm(path);
  };
}

FeaturizeResult FeaturizeDataset(const Dataset& dataset,
                                 const ImageSource& images,
                                 const HogConfig& config, bool keep_existing) {
  config.Validate();
  FeaturizeResult result;
  result.dataset = dataset;
  for (auto& record : result.dataset.records) {
    const bool needs_work = std::any_of(
        record.candidates.begin(), record.candidates.end(),
        [&](const Candidate& c) { return !keep_existing || !c.features; });
    if (!needs_work) continue;

    std::optional<GrayImage> image;
    try {
      image = images(record.image_id);
    } catch (const DataError& e) {
      result.failures.push_back(fmt::format("image '{}': {}", record.image_id, e.what()));
      continue;
    }
    if (!image) {
      result.failures.push_back(
          fmt::format("image '{}': image not available", record.image_id));
      continue;
    }
    if (image->width() != record.width || image->height() != record.height) {
      result.failures.push_back(fmt::format(
          "image '{}': pixels are {}x{} but the record declares {}x{}",
          record.image_id, image->width(), image->height(), record.width,
          record.height));
      continue;
    }
    for (auto& c : record.candidates) {
      if (keep_existing && c.features) continue;
      c.features = ComputeHog(CropAndResize(*image, c.box, config), config);
    }
  }
  result.dataset.feature_dim.reset();
  ValidateDataset(result.dataset);
  return result;
}

}  // namespace prerank
