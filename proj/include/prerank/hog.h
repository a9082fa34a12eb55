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

#ifndef PRERANK_HOG_H_
#define PRERANK_HOG_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "prerank/box.h"
#include "prerank/dataset.h"
#include "prerank/gray_image.h"

namespace prerank {

// Histogram-of-oriented-gradients parameters. Candidate boxes are resampled
// to resize_w x resize_h before extraction; pixels beyond the last whole
// cell are ignored.
struct HogConfig {
  int resize_w = 50;
  int resize_h = 60;
  int cell_size = 8;
  int orientation_bins = 9;  // unsigned, over [0, 180) degrees
  int block_size = 2;        // cells per block side
  int block_stride = 1;      // in cells
  double clip_value = 0.2;   // L2-hys clipping threshold

  int CellsX() const { return resize_w / cell_size; }
  int CellsY() const { return resize_h / cell_size; }
  int BlocksX() const { return (CellsX() - block_size) / block_stride + 1; }
  int BlocksY() const { return (CellsY() - block_size) / block_stride + 1; }
  std::size_t Dimension() const;

  // Throws DataError on non-positive parameters or a cell grid smaller
  // than one block.
  void Validate() const;

  friend bool operator==(const HogConfig&, const HogConfig&) = default;
};

nlohmann::json HogConfigToJson(const HogConfig& config);
HogConfig HogConfigFromJson(const nlohmann::json& j);

// Bilinear resampling of `box` to a resize_w x resize_h patch. Output pixel
// centres map onto the box with half-pixel alignment; samples are clamped to
// the image. Throws DataError if the box is invalid or leaves the image.
GrayImage CropAndResize(const GrayImage& image, const Box& box,
                        const HogConfig& config);

// Per-cell orientation histograms, laid out [cell_y][cell_x][bin]. Exposed
// for inspection; ComputeHog is the feature extractor.
std::vector<double> CellHistograms(const GrayImage& patch,
                                   const HogConfig& config);

// Block-normalized HOG descriptor of a resize_w x resize_h patch.
FeatureVector ComputeHog(const GrayImage& patch, const HogConfig& config);

// Resolves an image id to its pixels, or nullopt when unavailable.
using ImageSource =
    std::function<std::optional<GrayImage>(const std::string& image_id)>;

// Loads `<dir>/<image_id>.pgm`.
ImageSource PgmDirectorySource(std::filesystem::path dir);

struct FeaturizeResult {
  Dataset dataset;
  // One message per record that could not be featurized.
  std::vector<std::string> failures;
};

// Attaches HOG features to every candidate. With `keep_existing`, candidates
// that already carry features are left untouched and records needing no work
// skip image loading. Failed records keep their previous state and are
// reported; processing continues.
FeaturizeResult FeaturizeDataset(const Dataset& dataset,
                                 const ImageSource& images,
                                 const HogConfig& config,
                                 bool keep_existing = false);

}  // namespace prerank

#endif  // PRERANK_HOG_H_
