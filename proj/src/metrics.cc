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

#include "prerank/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "prerank/box.h"
#include "prerank/dataset_io.h"
#include "prerank/digest.h"
#include "prerank/errors.h"

namespace prerank {

namespace {

void CheckRankings(const Dataset& dataset, const Rankings& rankings) {
  if (rankings.size() != dataset.records.size()) {
    throw DataError(fmt::format("{} rankings for {} records", rankings.size(),
                                dataset.records.size()));
  }
  for (std::size_t j = 0; j < rankings.size(); ++j) {
    const auto& r = dataset.records[j];
    ValidatePermutation(rankings[j], r.candidates.size(),
                        fmt::format("image '{}'", r.image_id));
  }
}

bool Covers(double overlap, double delta, ThresholdRule rule) {
  return rule == ThresholdRule::kStrict ? overlap > delta : overlap >= delta;
}

// Running max of IoU(gt, candidate) along the ranking.
std::vector<double> PrefixBestOverlap(const GroundTruthObject& gt,
                                      const ImageRecord& record,
                                      const Permutation& ranking) {
  std::vector<double> prefix(ranking.size());
  double best = 0.0;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    best = std::max(best, Iou(gt.box, record.candidates[ranking[i]].box));
    prefix[i] = best;
  }
  return prefix;
}

double AtBudget(const std::vector<double>& prefix, std::size_t m) {
  if (prefix.empty()) return 0.0;
  return prefix[std::min(m, prefix.size()) - 1];
}

}  // namespace

void EvalConfig::Validate() const {
  if (iou_thresholds.empty()) throw DataError("no IoU thresholds configured");
  for (double d : iou_thresholds) {
    if (!(d > 0.0 && d <= 1.0)) {
      throw DataError(fmt::format("IoU threshold {} outside (0, 1]", d));
    }
  }
  if (proposal_budgets.empty()) throw DataError("no proposal budgets configured");
  for (std::size_t i = 0; i < proposal_budgets.size(); ++i) {
    if (proposal_budgets[i] == 0) throw DataError("proposal budgets must be positive");
    if (i > 0 && proposal_budgets[i] <= proposal_budgets[i - 1]) {
      throw DataError("proposal budgets must be strictly increasing");
    }
  }
}

Rankings IdentityRankings(const Dataset& dataset) {
  Rankings rankings;
  rankings.reserve(dataset.records.size());
  for (const auto& r : dataset.records) {
    Permutation p(r.candidates.size());
    std::iota(p.begin(), p.end(), std::size_t{0});
    rankings.push_back(std::move(p));
  }
  return rankings;
}

double BestOverlap(const GroundTruthObject& gt, const ImageRecord& record,
                   const Permutation& ranking, std::size_t m) {
  if (m == 0) throw DataError("proposal budget must be at least 1");
  ValidatePermutation(ranking, record.candidates.size(),
                      fmt::format("image '{}'", record.image_id));
  const std::size_t limit = std::min(m, ranking.size());
  double best = 0.0;
  for (std::size_t i = 0; i < limit; ++i) {
    best = std::max(best, Iou(gt.box, record.candidates[ranking[i]].box));
  }
  return best;
}

DetectionCount CountDetections(const Dataset& dataset, const Rankings& rankings,
                               double delta, std::size_t m, ThresholdRule rule) {
  if (m == 0) throw DataError("proposal budget must be at least 1");
  CheckRankings(dataset, rankings);
  DetectionCount count;
  for (std::size_t j = 0; j < dataset.records.size(); ++j) {
    const auto& record = dataset.records[j];
    for (const auto& gt : record.groundtruth) {
      ++count.total;
      if (Covers(BestOverlap(gt, record, rankings[j], m), delta, rule)) ++count.covered;
    }
  }
  return count;
}

double DetectionRate(const Dataset& dataset, const Rankings& rankings,
                     double delta, std::size_t m, ThresholdRule rule) {
  const DetectionCount count = CountDetections(dataset, rankings, delta, m, rule);
  if (count.total == 0) {
    throw UndefinedMetricError("detection rate is undefined without groundtruth objects");
  }
  return 100.0 * static_cast<double>(count.covered) / static_cast<double>(count.total);
}

AboResult Mabo(const Dataset& dataset, const Rankings& rankings, std::size_t m) {
  if (m == 0) throw DataError("proposal budget must be at least 1");
  CheckRankings(dataset, rankings);
  std::map<std::string, double> sums;
  AboResult result;
  for (std::size_t j = 0; j < dataset.records.size(); ++j) {
    const auto& record = dataset.records[j];
    for (const auto& gt : record.groundtruth) {
      sums[gt.class_label] += BestOverlap(gt, record, rankings[j], m);
      ++result.counts[gt.class_label];
    }
  }
  if (sums.empty()) {
    throw UndefinedMetricError("MABO is undefined without groundtruth objects");
  }
  double total = 0.0;
  for (const auto& [cls, sum] : sums) {
    const double abo = sum / static_cast<double>(result.counts[cls]);
    result.abo[cls] = abo;
    total += abo;
  }
  result.mabo = total / static_cast<double>(result.abo.size());
  return result;
}

EvalReport Evaluate(const Dataset& dataset, const Rankings& rankings,
                    const EvalConfig& config, const std::string& source) {
  config.Validate();
  CheckRankings(dataset, rankings);

  EvalReport report;
  report.source = source;
  report.dataset_digest = DigestHex(DatasetToJsonl(dataset));

  const auto& budgets = config.proposal_budgets;
  const auto& deltas = config.iou_thresholds;
  std::map<std::pair<double, std::size_t>, std::size_t> covered;
  std::map<std::pair<std::string, std::size_t>, double> overlap_sums;
  std::size_t total = 0;
  for (std::size_t j = 0; j < dataset.records.size(); ++j) {
    const auto& record = dataset.records[j];
    for (const auto& gt : record.groundtruth) {
      ++total;
      ++report.counts[gt.class_label];
      const std::vector<double> prefix = PrefixBestOverlap(gt, record, rankings[j]);
      for (std::size_t m : budgets) {
        const double best = AtBudget(prefix, m);
        overlap_sums[{gt.class_label, m}] += best;
        for (double d : deltas) {
          if (Covers(best, d, config.rule)) ++covered[{d, m}];
        }
      }
    }
  }
  if (total == 0) {
    throw UndefinedMetricError("metrics are undefined without groundtruth objects");
  }
  for (double d : deltas) {
    for (std::size_t m : budgets) {
      report.dr[{d, m}] = 100.0 * static_cast<double>(covered[{d, m}]) /
                          static_cast<double>(total);
    }
  }
  for (std::size_t m : budgets) {
    double sum = 0.0;
    for (const auto& [cls, count] : report.counts) {
      const double abo = overlap_sums[{cls, m}] / static_cast<double>(count);
      report.abo[{cls, m}] = abo;
      sum += abo;
    }
    report.mabo[m] = sum / static_cast<double>(report.counts.size());
  }
  return report;
}

}  // namespace prerank
