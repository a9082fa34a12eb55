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

#include "fixtures.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace prerank::fixture {

Dataset FromRows(const std::vector<Rows>& images) {
  Dataset d;
  for (std::size_t j = 0; j < images.size(); ++j) {
    ImageRecord r;
    r.image_id = "im" + std::to_string(j);
    r.width = 10;
    r.height = 10;
    for (const auto& [y, x] : images[j]) {
      r.candidates.push_back({Box{0, 0, 1, 1}, y, x, std::nullopt});
    }
    d.records.push_back(std::move(r));
  }
  ValidateDataset(d);
  return d;
}

TinyInstance RandomTiny(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim_d(1, 3), img_d(1, 3), k_d(1, 2);
  std::uniform_real_distribution<double> u(0, 1);
  std::normal_distribution<double> g(0, 1);
  TinyInstance t;
  const int dim = dim_d(rng);
  const int images = img_d(rng);
  t.k = k_d(rng);
  t.C = std::pow(10.0, u(rng) * 2.0 - 1.0);
  std::uniform_int_distribution<int> n_d(t.k + 1, 6);
  std::vector<Rows> all(images);
  for (auto& rows : all) {
    const int n = n_d(rng);
    for (int i = 0; i < n; ++i) {
      FeatureVector x(dim);
      for (double& v : x) v = g(rng);
      rows.push_back({u(rng), x});
    }
  }
  t.dataset = FromRows(all);
  return t;
}

MetricInstance RandomMetricInstance(std::uint64_t seed, int max_images,
                                    int max_candidates) {
  std::mt19937_64 rng(seed);
  const int width = 64, height = 48;
  auto random_box = [&]() {
    std::uniform_int_distribution<int> xd(0, width - 1), yd(0, height - 1);
    int x0 = xd(rng), x1 = xd(rng), y0 = yd(rng), y1 = yd(rng);
    if (x0 > x1) std::swap(x0, x1);
    if (y0 > y1) std::swap(y0, y1);
    return Box{static_cast<double>(x0), static_cast<double>(y0),
               static_cast<double>(x1 + 1), static_cast<double>(y1 + 1)};
  };
  std::uniform_int_distribution<int> img_d(1, max_images), cand_d(0, max_candidates);
  std::uniform_int_distribution<int> gt_d(0, 3), cls_d(0, 2);
  MetricInstance inst;
  const int images = img_d(rng);
  for (int j = 0; j < images; ++j) {
    ImageRecord r;
    r.image_id = "r" + std::to_string(j);
    r.width = width;
    r.height = height;
    const int gts = gt_d(rng);
    for (int g = 0; g < gts; ++g) {
      r.groundtruth.push_back({"c" + std::to_string(cls_d(rng)), random_box()});
    }
    const int n = cand_d(rng);
    for (int i = 0; i < n; ++i) {
      // Some candidates copy a groundtruth box so overlaps of exactly 1 and
      // exact threshold hits occur.
      Box b = random_box();
      if (!r.groundtruth.empty() && i % 7 == 3) b = r.groundtruth[i % r.groundtruth.size()].box;
      r.candidates.push_back({b, std::nullopt, std::nullopt, std::nullopt});
    }
    Permutation order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    inst.rankings.push_back(std::move(order));
    inst.dataset.records.push_back(LabelCandidates(r));
  }
  ValidateDataset(inst.dataset);
  return inst;
}

}  // namespace prerank::fixture
