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

#include "prerank/scoring.h"

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "oracles.h"
#include "prerank/errors.h"

namespace prerank {
namespace {

ImageRecord RandomRecord(std::mt19937_64& rng, int n, int dim) {
  std::normal_distribution<double> g(0, 1);
  std::vector<fixture::Rows> rows(1);
  for (int i = 0; i < n; ++i) {
    FeatureVector x(dim);
    for (double& v : x) v = g(rng);
    rows[0].push_back({0.5, x});
  }
  return fixture::FromRows(rows).records[0];
}

TEST(ScoreTest, IsTheDotProduct) {
  const ImageRecord r = fixture::FromRows({{{0.1, {1.0, 2.0}}, {0.2, {-3.0, 0.5}}}}).records[0];
  EXPECT_EQ(Score(std::vector<double>{2.0, -1.0}, r), (std::vector<double>{0.0, -6.5}));
}

TEST(ScoreTest, RejectsMissingOrMismatchedFeatures) {
  ImageRecord r = fixture::FromRows({{{0.1, {1.0, 2.0}}}}).records[0];
  EXPECT_THROW(Score(std::vector<double>{1.0}, r), DataError);
  r.candidates[0].features.reset();
  EXPECT_THROW(Score(std::vector<double>{1.0, 1.0}, r), DataError);
}

TEST(RerankTest, ZeroWeightsGiveIdentity) {
  std::mt19937_64 rng(1);
  const ImageRecord r = RandomRecord(rng, 25, 4);
  Permutation id(25);
  std::iota(id.begin(), id.end(), std::size_t{0});
  EXPECT_EQ(Rerank(std::vector<double>(4, 0.0), r), id);
}

TEST(RerankTest, InvariantToPositiveScaling) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const ImageRecord r = RandomRecord(rng, 40, 3);
    const std::vector<double> w{g(rng), g(rng), g(rng)};
    const Permutation base = Rerank(w, r);
    for (double alpha : {0.5, 1.0, 3.0, 100.0}) {
      std::vector<double> scaled = w;
      for (double& v : scaled) v *= alpha;
      EXPECT_EQ(Rerank(scaled, r), base) << alpha;
    }
  }
}

TEST(RerankTest, TiesAreStable) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> level(-3, 3), n_d(1, 60);
  for (int trial = 0; trial < 1000; ++trial) {
    // One-hot-free 1-D features with coarse values so that scores tie.
    const int n = n_d(rng);
    std::vector<fixture::Rows> rows(1);
    std::vector<double> scores;
    for (int i = 0; i < n; ++i) {
      const double v = level(rng);
      rows[0].push_back({0.0, {v}});
      scores.push_back(v);
    }
    const ImageRecord r = fixture::FromRows(rows).records[0];
    ASSERT_EQ(Rerank(std::vector<double>{1.0}, r), oracle::StableDescendingOrder(scores));
  }
}

TEST(RerankDatasetTest, ReordersCandidatesAndRecordsOrigin) {
  const Dataset d = fixture::FromRows({{{0.1, {1.0}}, {0.2, {3.0}}, {0.3, {2.0}}}});
  TrainedModel model;
  model.weights = {1.0};
  model.feature_dim = 1;
  const Dataset out = RerankDataset(model, d);
  const auto& c = out.records[0].candidates;
  EXPECT_EQ(*c[0].original_index, 1u);
  EXPECT_EQ(*c[1].original_index, 2u);
  EXPECT_EQ(*c[2].original_index, 0u);
  EXPECT_EQ(*c[0].iou_label, 0.2);
}

TEST(RerankDatasetTest, DimensionMismatchIsAnError) {
  const Dataset d = fixture::FromRows({{{0.1, {1.0, 1.0}}}});
  TrainedModel model;
  model.weights = {1.0};
  model.feature_dim = 1;
  EXPECT_THROW(RerankDataset(model, d), DataError);
}

}  // namespace
}  // namespace prerank
