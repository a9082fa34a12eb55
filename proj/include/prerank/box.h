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

#ifndef PRERANK_BOX_H_
#define PRERANK_BOX_H_

#include <string>

namespace prerank {

// Axis-aligned rectangle in pixel coordinates. For pixel-set comparisons the
// box covers the half-open range [x_min, x_max) x [y_min, y_max).
struct Box {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  double Width() const { return x_max - x_min; }
  double Height() const { return y_max - y_min; }
  double Area() const { return Width() * Height(); }

  // Finite coordinates and strictly positive extent in both axes.
  bool IsValid() const;

  // True when the box lies inside [0, width] x [0, height].
  bool InBounds(double width, double height) const;

  std::string ToString() const;

  friend bool operator==(const Box&, const Box&) = default;
};

// Throws DataError when `box` is not valid. `context` prefixes the message.
void ValidateBox(const Box& box, const std::string& context = "");

// Intersection over union using continuous rectangle areas. Symmetric;
// returns 0 for disjoint boxes and 1 for identical ones. Throws DataError on
// invalid input.
double Iou(const Box& a, const Box& b);

}  // namespace prerank

#endif  // PRERANK_BOX_H_
