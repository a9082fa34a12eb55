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

#ifndef PRERANK_GRAY_IMAGE_H_
#define PRERANK_GRAY_IMAGE_H_

#include <cstddef>
#include <filesystem>
#include <vector>

namespace prerank {

// Single-channel image with row-major intensities clipped to [0, 1].
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, double fill = 0.0);
  // Throws DataError when `pixels.size() != width * height`.
  GrayImage(int width, int height, std::vector<double> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  const std::vector<double>& pixels() const { return pixels_; }

  double at(int x, int y) const {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }
  void set(int x, int y, double value);

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> pixels_;
};

// Binary 8-bit PGM (P5). Intensities are scaled by 1/maxval.
GrayImage ReadPgm(const std::filesystem::path& path);
void WritePgm(const GrayImage& image, const std::filesystem::path& path);

}  // namespace prerank

#endif  // PRERANK_GRAY_IMAGE_H_
