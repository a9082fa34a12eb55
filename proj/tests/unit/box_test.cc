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

#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "prerank/errors.h"

namespace prerank {
namespace {

Box RandomIntBox(std::mt19937_64& rng, int limit) {
  std::uniform_int_distribution<int> coord(0, limit);
  int x0 = coord(rng), x1 = coord(rng), y0 = coord(rng), y1 = coord(rng);
  if (x0 == x1) ++x1;
  if (y0 == y1) ++y1;
  return Box{static_cast<double>(std::min(x0, x1)), static_cast<double>(std::min(y0, y1)),
             static_cast<double>(std::max(x0, x1)), static_cast<double>(std::max(y0, y1))};
}

TEST(IouTest, IdenticalBoxes) {
  const Box b{3.5, 1.0, 17.25, 9.0};
  EXPECT_EQ(Iou(b, b), 1.0);
}

TEST(IouTest, DisjointBoxes) {
  EXPECT_EQ(Iou({0, 0, 10, 10}, {20, 20, 30, 30}), 0.0);
}

TEST(IouTest, TouchingEdgesDoNotOverlap) {
  EXPECT_EQ(Iou({0, 0, 10, 10}, {10, 0, 20, 10}), 0.0);
}

TEST(IouTest, HalfShiftedSquare) {
  // Pixel enumeration: 50 shared pixels out of 150.
  EXPECT_DOUBLE_EQ(oracle::PixelIou(0, 0, 10, 10, 5, 0, 15, 10), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(Iou({0, 0, 10, 10}, {5, 0, 15, 10}), 1.0 / 3.0);
}

TEST(IouTest, RejectsDegenerateBoxes) {
  EXPECT_THROW(Iou({0, 0, 0, 10}, {0, 0, 5, 5}), DataError);
  EXPECT_THROW(Iou({0, 0, 5, 5}, {3, 3, 2, 9}), DataError);
  EXPECT_THROW(Iou({0, 0, std::numeric_limits<double>::infinity(), 5}, {0, 0, 5, 5}),
               DataError);
  EXPECT_THROW(Iou({0, 0, std::nan(""), 5}, {0, 0, 5, 5}), DataError);
}

TEST(IouTest, MatchesPixelEnumerationOnIntegerGrids) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Box a = RandomIntBox(rng, 64);
    const Box b = RandomIntBox(rng, 64);
    const double expected = oracle::PixelIou(
        static_cast<int>(a.x_min), static_cast<int>(a.y_min), static_cast<int>(a.x_max),
        static_cast<int>(a.y_max), static_cast<int>(b.x_min), static_cast<int>(b.y_min),
        static_cast<int>(b.x_max), static_cast<int>(b.y_max));
    ASSERT_NEAR(Iou(a, b), expected, 1e-15) << a.ToString() << " vs " << b.ToString();
  }
}

TEST(IouTest, SymmetricBoundedAndTranslationInvariant) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  std::uniform_real_distribution<double> extent(0.1, 80.0);
  for (int trial = 0; trial < 5000; ++trial) {
    const double ax = coord(rng), ay = coord(rng), bx = coord(rng), by = coord(rng);
    const Box a{ax, ay, ax + extent(rng), ay + extent(rng)};
    const Box b{bx, by, bx + extent(rng), by + extent(rng)};
    const double v = Iou(a, b);
    ASSERT_EQ(v, Iou(b, a));
    ASSERT_GE(v, 0.0);
    ASSERT_LE(v, 1.0);
    const double tx = coord(rng), ty = coord(rng);
    const Box at{a.x_min + tx, a.y_min + ty, a.x_max + tx, a.y_max + ty};
    const Box bt{b.x_min + tx, b.y_min + ty, b.x_max + tx, b.y_max + ty};
    ASSERT_NEAR(Iou(at, bt), v, 1e-12);
    if (!(a == b)) ASSERT_LT(v, 1.0);
  }
}

TEST(BoxTest, InBounds) {
  const Box b{0, 0, 10, 20};
  EXPECT_TRUE(b.InBounds(10, 20));
  EXPECT_FALSE(b.InBounds(9, 20));
  EXPECT_FALSE((Box{-1, 0, 5, 5}).InBounds(10, 10));
}

}  // namespace
}  // namespace prerank
