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

#include "prerank/box.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "prerank/errors.h"

namespace prerank {

bool Box::IsValid() const {
  return std::isfinite(x_min) && std::isfinite(y_min) &&
         std::isfinite(x_max) && std::isfinite(y_max) && x_max > x_min &&
         y_max > y_min;
}

bool Box::InBounds(double width, double height) const {
  return x_min >= 0.0 && y_min >= 0.0 && x_max <= width && y_max <= height;
}

std::string Box::ToString() const {
  return fmt::format("[{}, {}, {}, {}]", x_min, y_min, x_max, y_max);
}

void ValidateBox(const Box& box, const std::string& context) {
  if (!box.IsValid()) {
    throw DataError(fmt::format("{}{}invalid box {} (needs finite coordinates "
                                "with x_max > x_min and y_max > y_min)",
                                context, context.empty() ? "" : ": ",
                                box.ToString()));
  }
}

double Iou(const Box& a, const Box& b) {
  ValidateBox(a);
  ValidateBox(b);
  const double iw = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
  const double ih = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
  if (iw <= 0.0 || ih <= 0.0) return 0.0;
  const double inter = iw * ih;
  // Union is computed the same way regardless of argument order so that the
  // result is bitwise symmetric.
  const double uni = (a.Area() + b.Area()) - inter;
  return std::clamp(inter / uni, 0.0, 1.0);
}

}  // namespace prerank
