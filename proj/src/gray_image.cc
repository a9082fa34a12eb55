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

#include "prerank/gray_image.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include <fmt/format.h>

#include "prerank/errors.h"

namespace prerank {

namespace {

double Clip01(double v) {
  if (std::isnan(v)) return 0.0;
  return std::clamp(v, 0.0, 1.0);
}

// Reads the next whitespace-delimited header token, skipping '#' comments.
std::string NextToken(std::istream& in) {
  std::string token;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!token.empty()) break;
      continue;
    }
    token.push_back(static_cast<char>(c));
  }
  return token;
}

int ParseHeaderInt(std::istream& in, const std::filesystem::path& path) {
  const std::string token = NextToken(in);
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size() || v <= 0) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw DataError(
        fmt::format("{}: bad PGM header field '{}'", path.string(), token));
  }
}

}  // namespace

GrayImage::GrayImage(int width, int height, double fill)
    : width_(width), height_(height) {
  if (width < 0 || height < 0) throw DataError("negative image size");
  pixels_.assign(static_cast<std::size_t>(width) * height, Clip01(fill));
}

GrayImage::GrayImage(int width, int height, std::vector<double> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 0 || height < 0) throw DataError("negative image size");
  if (pixels_.size() != static_cast<std::size_t>(width) * height) {
    throw DataError(fmt::format("image buffer holds {} values, expected {}x{}",
                                pixels_.size(), width, height));
  }
  for (double& v : pixels_) v = Clip01(v);
}

void GrayImage::set(int x, int y, double value) {
  pixels_[static_cast<std::size_t>(y) * width_ + x] = Clip01(value);
}

GrayImage ReadPgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(fmt::format("cannot open image '{}'", path.string()));
  if (NextToken(in) != "P5") {
    throw DataError(fmt::format("{}: not a binary PGM (P5) file", path.string()));
  }
  const int width = ParseHeaderInt(in, path);
  const int height = ParseHeaderInt(in, path);
  const int maxval = ParseHeaderInt(in, path);
  if (maxval > 255) {
    throw DataError(fmt::format("{}: only 8-bit PGM is supported", path.string()));
  }
  std::vector<unsigned char> raw(static_cast<std::size_t>(width) * height);
  in.read(reinterpret_cast<char*>(raw.data()),
          static_cast<std::streamsize>(raw.size()));
  if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
    throw DataError(fmt::format("{}: truncated pixel data", path.string()));
  }
  std::vector<double> pixels(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    pixels[i] = static_cast<double>(raw[i]) / maxval;
  }
  return GrayImage(width, height, std::move(pixels));
}

void WritePgm(const GrayImage& image, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(fmt::format("cannot write '{}'", path.string()));
  out << "P5\n" << image.width() << ' ' << image.height() << "\n255\n";
  for (double v : image.pixels()) {
    out.put(static_cast<char>(static_cast<unsigned char>(std::lround(v * 255.0))));
  }
}

}  // namespace prerank
