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

#include "prerank/report.h"

#include <algorithm>
#include <istream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "prerank/errors.h"

namespace prerank {

namespace {

std::string FormatDelta(double d) { return fmt::format("{}", d); }

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string Render(const Table& t) {
  std::vector<std::size_t> widths(t.header.size(), 0);
  for (std::size_t c = 0; c < t.header.size(); ++c) widths[c] = t.header[c].size();
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out = t.title + "\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c == 0) {
        out += fmt::format("{:<{}}", cells[c], widths[c]);
      } else {
        out += fmt::format("  {:>{}}", cells[c], widths[c]);
      }
    }
    out += "\n";
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
  return out;
}

std::vector<std::string> Header(const EvalConfig& config) {
  std::vector<std::string> h = {"ranking"};
  for (std::size_t m : config.proposal_budgets) h.push_back(std::to_string(m));
  return h;
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

ComparisonReport CompareRankings(const Dataset& dataset_a,
                                 const Rankings& rankings_a,
                                 const Dataset& dataset_b,
                                 const Rankings& rankings_b,
                                 const EvalConfig& config,
                                 const std::string& source_a,
                                 const std::string& source_b) {
  ComparisonReport report;
  report.config = config;
  report.first = Evaluate(dataset_a, rankings_a, config, source_a);
  report.second = Evaluate(dataset_b, rankings_b, config, source_b);
  return report;
}

ComparisonReport CompareRankings(const Dataset& dataset,
                                 const Rankings& rankings_a,
                                 const Rankings& rankings_b,
                                 const EvalConfig& config,
                                 const std::string& source_a,
                                 const std::string& source_b) {
  return CompareRankings(dataset, rankings_a, dataset, rankings_b, config,
                         source_a, source_b);
}

std::string FormatCsv(const ComparisonReport& report) {
  std::string out = "metric,delta,budget,source,value\n";
  for (const EvalReport* r : {&report.first, &report.second}) {
    for (double d : report.config.iou_thresholds) {
      for (std::size_t m : report.config.proposal_budgets) {
        out += fmt::format("dr,{},{},{},{:.6f}\n", FormatDelta(d), m, r->source,
                           r->dr.at({d, m}));
      }
    }
    for (std::size_t m : report.config.proposal_budgets) {
      out += fmt::format("mabo,,{},{},{:.6f}\n", m, r->source, r->mabo.at(m));
    }
  }
  return out;
}

ComparisonReport ParseCsv(std::istream& in) {
  ComparisonReport report;
  report.config.iou_thresholds.clear();
  report.config.proposal_budgets.clear();
  std::vector<std::string> sources;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "metric,delta,budget,source,value") {
        throw DataError(fmt::format("line {}: unexpected CSV header", line_no));
      }
      header_seen = true;
      continue;
    }
    const auto cells = SplitCsvLine(line);
    if (cells.size() != 5) {
      throw DataError(fmt::format("line {}: expected 5 fields", line_no));
    }
    try {
      const std::size_t m = std::stoul(cells[2]);
      const double value = std::stod(cells[4]);
      const std::string& source = cells[3];
      if (std::find(sources.begin(), sources.end(), source) == sources.end()) {
        if (sources.size() == 2) {
          throw DataError(fmt::format("line {}: more than two sources", line_no));
        }
        sources.push_back(source);
      }
      EvalReport& target = source == sources[0] ? report.first : report.second;
      target.source = source;
      auto& budgets = report.config.proposal_budgets;
      if (std::find(budgets.begin(), budgets.end(), m) == budgets.end()) budgets.push_back(m);
      if (cells[0] == "dr") {
        const double d = std::stod(cells[1]);
        auto& deltas = report.config.iou_thresholds;
        if (std::find(deltas.begin(), deltas.end(), d) == deltas.end()) deltas.push_back(d);
        target.dr[{d, m}] = value;
      } else if (cells[0] == "mabo") {
        target.mabo[m] = value;
      } else {
        throw DataError(fmt::format("line {}: unknown metric '{}'", line_no, cells[0]));
      }
    } catch (const std::logic_error&) {
      throw DataError(fmt::format("line {}: malformed number", line_no));
    }
  }
  if (sources.size() != 2) throw DataError("report CSV must hold exactly two sources");
  std::sort(report.config.proposal_budgets.begin(), report.config.proposal_budgets.end());
  report.config.Validate();
  for (const EvalReport* r : {&report.first, &report.second}) {
    for (std::size_t m : report.config.proposal_budgets) {
      if (!r->mabo.count(m)) {
        throw DataError(fmt::format("source '{}' lacks MABO at budget {}", r->source, m));
      }
      for (double d : report.config.iou_thresholds) {
        if (!r->dr.count({d, m})) {
          throw DataError(fmt::format("source '{}' lacks DR at ({}, {})", r->source,
                                      FormatDelta(d), m));
        }
      }
    }
  }
  return report;
}

std::string FormatText(const ComparisonReport& report) {
  std::string out;
  for (double d : report.config.iou_thresholds) {
    Table t;
    t.title = fmt::format(
        "Detection rate (%) at IoU {} {} by proposal budget",
        report.config.rule == ThresholdRule::kInclusive ? ">=" : ">",
        FormatDelta(d));
    t.header = Header(report.config);
    for (const EvalReport* r : {&report.first, &report.second}) {
      std::vector<std::string> row = {r->source};
      for (std::size_t m : report.config.proposal_budgets) {
        row.push_back(fmt::format("{:.2f}", r->dr.at({d, m})));
      }
      t.rows.push_back(std::move(row));
    }
    out += Render(t) + "\n";
  }
  Table t;
  t.title = "MABO by proposal budget";
  t.header = Header(report.config);
  for (const EvalReport* r : {&report.first, &report.second}) {
    std::vector<std::string> row = {r->source};
    for (std::size_t m : report.config.proposal_budgets) {
      row.push_back(fmt::format("{:.4f}", r->mabo.at(m)));
    }
    t.rows.push_back(std::move(row));
  }
  out += Render(t);
  return out;
}

}  // namespace prerank
