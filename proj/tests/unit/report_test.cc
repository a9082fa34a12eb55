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

#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "prerank/errors.h"

namespace prerank {
namespace {

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> Cells(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; in >> cell;) out.push_back(cell);
  return out;
}

ComparisonReport RandomComparison(std::uint64_t seed, const EvalConfig& cfg = EvalConfig{}) {
  auto inst = fixture::RandomMetricInstance(seed);
  while (inst.dataset.NumGroundTruth() == 0) inst = fixture::RandomMetricInstance(++seed);
  return CompareRankings(inst.dataset, IdentityRankings(inst.dataset), inst.rankings, cfg);
}

TEST(FormatTextTest, LayoutHasOneTablePerThresholdAndMabo) {
  const ComparisonReport rep = RandomComparison(1);
  const auto lines = Lines(FormatText(rep));
  // Four tables of title + header + two rows, separated by blank lines.
  ASSERT_EQ(lines.size(), 4u * 4u + 3u);
  const std::regex dr_cell(R"(\d+\.\d{2})"), mabo_cell(R"(\d\.\d{4})");
  for (int t = 0; t < 4; ++t) {
    const std::size_t base = t * 5;
    if (t < 3) {
      EXPECT_NE(lines[base].find("Detection rate"), std::string::npos);
    } else {
      EXPECT_NE(lines[base].find("MABO"), std::string::npos);
    }
    EXPECT_EQ(Cells(lines[base + 1]),
              (std::vector<std::string>{"ranking", "1", "10", "50", "100", "200", "500", "800", "1000"}));
    const auto first = Cells(lines[base + 2]), second = Cells(lines[base + 3]);
    EXPECT_EQ(first[0], "input");
    EXPECT_EQ(second[0], "reranked");
    ASSERT_EQ(first.size(), 9u);
    for (std::size_t c = 1; c < first.size(); ++c) {
      EXPECT_TRUE(std::regex_match(first[c], t < 3 ? dr_cell : mabo_cell)) << first[c];
    }
    // Every line of a table has the same width: columns are right-aligned.
    EXPECT_EQ(lines[base + 1].size(), lines[base + 2].size());
    EXPECT_EQ(lines[base + 2].size(), lines[base + 3].size());
    if (t < 3) EXPECT_TRUE(lines[base + 4].empty());
  }
  EXPECT_NE(lines[0].find("0.5"), std::string::npos);
  EXPECT_NE(lines[5].find("0.7"), std::string::npos);
  EXPECT_NE(lines[10].find("0.9"), std::string::npos);
}

TEST(FormatTextTest, SingleBudgetGivesSingleColumn) {
  EvalConfig cfg;
  cfg.proposal_budgets = {1};
  const auto lines = Lines(FormatText(RandomComparison(2, cfg)));
  EXPECT_EQ(Cells(lines[1]), (std::vector<std::string>{"ranking", "1"}));
  EXPECT_EQ(Cells(lines[2]).size(), 2u);
}

TEST(FormatTextTest, IdenticalRankingsGiveIdenticalRows) {
  auto inst = fixture::RandomMetricInstance(3);
  const auto rep = CompareRankings(inst.dataset, inst.rankings, inst.rankings, EvalConfig{});
  const auto lines = Lines(FormatText(rep));
  for (int t = 0; t < 4; ++t) {
    auto a = Cells(lines[t * 5 + 2]), b = Cells(lines[t * 5 + 3]);
    a.erase(a.begin());
    b.erase(b.begin());
    EXPECT_EQ(a, b);
  }
}

TEST(FormatTextTest, InclusiveRuleIsVisibleInTitles) {
  EvalConfig cfg;
  cfg.rule = ThresholdRule::kInclusive;
  EXPECT_NE(FormatText(RandomComparison(4, cfg)).find("IoU >= 0.5"), std::string::npos);
  EXPECT_NE(FormatText(RandomComparison(4)).find("IoU > 0.5"), std::string::npos);
}

TEST(CsvTest, RowsAndHeader) {
  const ComparisonReport rep = RandomComparison(5);
  const auto lines = Lines(FormatCsv(rep));
  EXPECT_EQ(lines[0], "metric,delta,budget,source,value");
  // (3 thresholds + MABO) x 8 budgets x 2 sources.
  EXPECT_EQ(lines.size(), 1u + 4u * 8u * 2u);
  EXPECT_TRUE(std::regex_match(lines[1], std::regex(R"(dr,0\.5,1,input,\d+\.\d{6})")));
  EXPECT_TRUE(std::regex_match(lines.back(), std::regex(R"(mabo,,1000,reranked,\d\.\d{6})")));
}

TEST(CsvTest, RoundTripReproducesTheText) {
  const ComparisonReport rep = RandomComparison(6);
  std::istringstream in(FormatCsv(rep));
  const ComparisonReport back = ParseCsv(in);
  EXPECT_EQ(back.config.iou_thresholds, rep.config.iou_thresholds);
  EXPECT_EQ(back.config.proposal_budgets, rep.config.proposal_budgets);
  EXPECT_EQ(FormatText(back), FormatText(rep));
  EXPECT_EQ(FormatCsv(back), FormatCsv(rep));
}

TEST(CsvTest, MalformedInputIsRejected) {
  std::istringstream bad_header("a,b\n");
  EXPECT_THROW(ParseCsv(bad_header), DataError);
  std::istringstream bad_number("metric,delta,budget,source,value\ndr,0.5,x,input,1\n");
  EXPECT_THROW(ParseCsv(bad_number), DataError);
  std::istringstream one_source("metric,delta,budget,source,value\nmabo,,1,input,0.5\n");
  EXPECT_THROW(ParseCsv(one_source), DataError);
  std::istringstream incomplete(
      "metric,delta,budget,source,value\nmabo,,1,a,0.5\nmabo,,1,b,0.5\ndr,0.5,1,a,10\n");
  EXPECT_THROW(ParseCsv(incomplete), DataError);
}

}  // namespace
}  // namespace prerank
