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

#ifndef PRERANK_REPORT_H_
#define PRERANK_REPORT_H_

#include <iosfwd>
#include <string>

#include "prerank/dataset.h"
#include "prerank/metrics.h"

namespace prerank {

// Two ranking sources evaluated on the same grid: typically the ingestion
// order ("input") against a re-ranked order ("reranked").
struct ComparisonReport {
  EvalConfig config;
  EvalReport first;
  EvalReport second;
};

ComparisonReport CompareRankings(const Dataset& dataset_a,
                                 const Rankings& rankings_a,
                                 const Dataset& dataset_b,
                                 const Rankings& rankings_b,
                                 const EvalConfig& config,
                                 const std::string& source_a = "input",
                                 const std::string& source_b = "reranked");

ComparisonReport CompareRankings(const Dataset& dataset,
                                 const Rankings& rankings_a,
                                 const Rankings& rankings_b,
                                 const EvalConfig& config,
                                 const std::string& source_a = "input",
                                 const std::string& source_b = "reranked");

// CSV with header `metric,delta,budget,source,value`. DR rows carry the
// threshold; MABO rows leave the delta column empty. Values use six
// decimals.
std::string FormatCsv(const ComparisonReport& report);

// Parses FormatCsv output back into tables (ABO and counts are not part of
// the CSV and come back empty). Throws DataError on malformed input.
ComparisonReport ParseCsv(std::istream& in);

// One detection-rate table per threshold and a MABO table: budgets as
// columns, one row per source. DR has two decimals, MABO four.
std::string FormatText(const ComparisonReport& report);

}  // namespace prerank

#endif  // PRERANK_REPORT_H_
