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

#include "prerank/constraints.h"

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.h"
#include "prerank/errors.h"

namespace prerank {
namespace {

ImageRecord Labeled(const std::vector<double>& labels) {
  ImageRecord r;
  r.image_id = "img";
  r.width = 10;
  r.height = 10;
  for (double y : labels) r.candidates.push_back({Box{0, 0, 1, 1}, y, std::nullopt, std::nullopt});
  return r;
}

TrainingConfig WithK(int k) {
  TrainingConfig c;
  c.k = k;
  return c;
}

TEST(PartialConstraintsTest, SmallExample) {
  const auto p = BuildPartialConstraints(Labeled({0.9, 0.1, 0.5, 0.3, 0.7}), WithK(2));
  EXPECT_EQ(p.positives, (std::vector<std::size_t>{0, 4}));
  EXPECT_EQ(p.negatives, (std::vector<std::size_t>{2, 3, 1}));
}

TEST(PartialConstraintsTest, NegativesAreCappedAtTwiceK) {
  std::vector<double> labels(1000);
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = (i * 7919 % 1000) / 1000.0;
  const auto p = BuildPartialConstraints(Labeled(labels), WithK(20));
  EXPECT_EQ(p.positives.size(), 20u);
  EXPECT_EQ(p.negatives.size(), 40u);
  const auto order = oracle::StableDescendingOrder(labels);
  EXPECT_TRUE(std::equal(p.positives.begin(), p.positives.end(), order.begin()));
  EXPECT_TRUE(std::equal(p.negatives.begin(), p.negatives.end(), order.end() - 40));
}

TEST(PartialConstraintsTest, TiesBreakOnCandidatePosition) {
  const auto p = BuildPartialConstraints(Labeled({0.5, 0.5, 0.5, 0.5}), WithK(1));
  EXPECT_EQ(p.positives, (std::vector<std::size_t>{0}));
  EXPECT_EQ(p.negatives, (std::vector<std::size_t>{2, 3}));
}

TEST(PartialConstraintsTest, TooFewCandidatesNamesTheImage) {
  try {
    BuildPartialConstraints(Labeled({0.2, 0.4}), WithK(2));
    FAIL();
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("img"), std::string::npos);
  }
}

TEST(PartialConstraintsTest, RequiresLabels) {
  ImageRecord r = Labeled({0.2, 0.4, 0.1});
  r.candidates[1].iou_label.reset();
  EXPECT_THROW(BuildPartialConstraints(r, WithK(1)), DataError);
}

TEST(PartialConstraintsTest, SetsAreDisjointAndOrdered) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> level(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 60;
    const int k = 1 + trial % (n - 1);
    std::vector<double> labels(n);
    for (double& y : labels) y = level(rng) / 5.0;
    const auto p = BuildPartialConstraints(Labeled(labels), WithK(k));
    ASSERT_EQ(p.positives.size(), static_cast<std::size_t>(k));
    ASSERT_EQ(p.negatives.size(), NegativesCap(n, k));
    std::set<std::size_t> pos(p.positives.begin(), p.positives.end());
    for (std::size_t q : p.negatives) {
      EXPECT_FALSE(pos.count(q));
      for (std::size_t i : p.positives) EXPECT_GE(labels[i], labels[q]);
    }
  }
}

TEST(FullConstraintsTest, EnumeratesAllRankedPairs) {
  const std::vector<double> labels{0.2, 0.8, 0.5, 0.8};
  const auto pairs = BuildFullConstraints(Labeled(labels));
  ASSERT_EQ(pairs.size(), 6u);
  // Ranked order is 1, 3, 2, 0.
  const std::vector<std::pair<std::size_t, std::size_t>> expected{
      {1, 3}, {1, 2}, {1, 0}, {3, 2}, {3, 0}, {2, 0}};
  EXPECT_EQ(pairs, expected);
}

TEST(FullConstraintsTest, PartialPairsAreASubsetOfFullPairs) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> labels(30);
  for (double& y : labels) y = u(rng);
  const ImageRecord r = Labeled(labels);
  const auto full = BuildFullConstraints(r);
  const std::set<std::pair<std::size_t, std::size_t>> all(full.begin(), full.end());
  const auto p = BuildPartialConstraints(r, WithK(4));
  for (std::size_t i : p.positives)
    for (std::size_t q : p.negatives) EXPECT_TRUE(all.count({i, q}));
}

TEST(CountConstraintsTest, ReferenceValues) {
  const auto c = CountConstraints(1000, 20);
  EXPECT_EQ(c.partial, 19600u);
  EXPECT_EQ(c.full, 499500u);
  EXPECT_EQ(CountConstraints(2, 1).partial, 1u);
  EXPECT_EQ(CountConstraints(2, 1).full, 1u);
}

TEST(CountConstraintsTest, PartialIsSmallerBelowTheDiagonal) {
  for (std::uint64_t n = 2; n <= 200; ++n) {
    for (std::uint64_t k = 1; k < n; ++k) {
      const auto c = CountConstraints(n, k);
      ASSERT_EQ(c.partial, k * (n - k));
      ASSERT_EQ(c.full, n * (n - 1) / 2);
      if (n >= 3 && k <= n - 2) ASSERT_LT(c.partial, c.full) << n << " " << k;
    }
  }
}

TEST(CountConstraintsTest, RejectsOutOfRangeK) {
  EXPECT_THROW(CountConstraints(5, 0), DataError);
  EXPECT_THROW(CountConstraints(5, 5), DataError);
  EXPECT_THROW(CountConstraints(1, 1), DataError);
}

}  // namespace
}  // namespace prerank
