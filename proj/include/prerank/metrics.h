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

#ifndef PRERANK_METRICS_H_
#define PRERANK_METRICS_H_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "prerank/dataset.h"

namespace prerank {

// Whether an object counts as detected when its best overlap is strictly
// above the threshold (the default) or at least the threshold.
enum class ThresholdRule { kStrict, kInclusive };

struct EvalConfig {
  std::vector<double> iou_thresholds = {0.5, 0.7, 0.9};
  std::vector<std::size_t> proposal_budgets = {1, 10, 50, 100, 200, 500, 800, 1000};
  ThresholdRule rule = ThresholdRule::kStrict;

  // Thresholds in (0, 1]; budgets positive and strictly increasing.
  void Validate() const;
};

// One ranking per record of a dataset.
using Rankings = std::vector<Permutation>;

// The ingestion order of every record.
Rankings IdentityRankings(const Dataset& dataset);

// Max IoU between `gt` and the first min(m, n) candidates of `ranking`;
// 0 when the record has no candidates. Throws DataError if m == 0 or the
// ranking is not a permutation of the record's candidates.
double BestOverlap(const GroundTruthObject& gt, const ImageRecord& record,
                   const Permutation& ranking, std::size_t m);

struct DetectionCount {
  std::size_t covered = 0;
  std::size_t total = 0;
};

DetectionCount CountDetections(const Dataset& dataset, const Rankings& rankings,
                               double delta, std::size_t m,
                               ThresholdRule rule = ThresholdRule::kStrict);

// 100 * covered / total. Throws UndefinedMetricError without groundtruth.
double DetectionRate(const Dataset& dataset, const Rankings& rankings,
                     double delta, std::size_t m,
                     ThresholdRule rule = ThresholdRule::kStrict);

struct AboResult {
  // Mean best overlap per class, over classes with at least one object.
  std::map<std::string, double> abo;
  std::map<std::string, std::size_t> counts;
  // Unweighted mean of `abo`.
  double mabo = 0.0;
};

AboResult Mabo(const Dataset& dataset, const Rankings& rankings, std::size_t m);

// All metrics of one ranking source over the configured grid.
struct EvalReport {
  std::string source;
  std::string dataset_digest;
  std::map<std::pair<double, std::size_t>, double> dr;  // (delta, m) -> %
  std::map<std::pair<std::string, std::size_t>, double> abo;
  std::map<std::size_t, double> mabo;
  std::map<std::string, std::size_t> counts;
};

EvalReport Evaluate(const Dataset& dataset, const Rankings& rankings,
                    const EvalConfig& config, const std::string& source);

}  // namespace prerank

#endif  // PRERANK_METRICS_H_
