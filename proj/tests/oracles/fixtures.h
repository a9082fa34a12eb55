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

#ifndef PRERANK_TESTS_ORACLES_FIXTURES_H_
#define PRERANK_TESTS_ORACLES_FIXTURES_H_

// Seeded random inputs shared by the unit tests and the acceptance run.

#include <cstdint>
#include <utility>
#include <vector>

#include "prerank/dataset.h"
#include "prerank/metrics.h"

namespace prerank::fixture {

// One image per entry; each candidate is (iou_label, features).
using Rows = std::vector<std::pair<double, FeatureVector>>;

// Builds a validated dataset of unit boxes in 10x10 images.
Dataset FromRows(const std::vector<Rows>& images);

// A random soft-margin instance with d <= 3, N <= 3, n <= 6, k <= 2 and C
// log-uniform in [0.1, 10].
struct TinyInstance {
  Dataset dataset;
  int k = 1;
  double C = 1.0;
};
TinyInstance RandomTiny(std::uint64_t seed);

// A random labeled detection dataset with up to `max_images` images and up
// to `max_candidates` integer boxes each, three classes, and a random
// ranking per image. Some images have no groundtruth or no candidates.
struct MetricInstance {
  Dataset dataset;
  Rankings rankings;
};
MetricInstance RandomMetricInstance(std::uint64_t seed, int max_images = 20,
                                    int max_candidates = 30);

}  // namespace prerank::fixture

#endif  // PRERANK_TESTS_ORACLES_FIXTURES_H_
