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

#include "prerank/objective.h"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "prerank/errors.h"

namespace prerank {

namespace {

std::size_t ResolveDim(const Dataset& dataset) {
  if (dataset.feature_dim) return *dataset.feature_dim;
  for (const auto& r : dataset.records) {
    for (const auto& c : r.candidates) {
      if (c.features) return c.features->size();
    }
  }
  throw DataError("dataset has no feature vectors");
}

void AppendRow(ImageConstraints& image, const ImageRecord& record,
               std::size_t index, std::size_t dim) {
  const auto& f = record.candidates.at(index).features;
  if (!f) {
    throw DataError(fmt::format("image '{}': candidate {} has no features",
                                record.image_id, index));
  }
  if (f->size() != dim) {
    throw DataError(fmt::format(
        "image '{}': candidate {} has feature dimension {}, expected {}",
        record.image_id, index, f->size(), dim));
  }
  image.features.insert(image.features.end(), f->begin(), f->end());
  ++image.num_rows;
}

double Dot(const double* a, std::span<const double> w) {
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += a[i] * w[i];
  return s;
}

double Margin(const HingeConstraint& c, const std::vector<double>& scores) {
  const double plus = c.plus >= 0 ? scores[c.plus] : 0.0;
  const double minus = c.minus >= 0 ? scores[c.minus] : 0.0;
  return plus - minus;
}

}  // namespace

RankingProblem RankingProblem::Partial(
    const Dataset& dataset, const std::vector<ConstraintPartition>& partitions,
    const TrainingConfig& config) {
  if (partitions.size() != dataset.records.size()) {
    throw DataError(fmt::format("{} partitions for {} records",
                                partitions.size(), dataset.records.size()));
  }
  RankingProblem problem(ResolveDim(dataset), config.EffectiveC(), config.slack);
  problem.images_.reserve(dataset.records.size());
  for (std::size_t j = 0; j < dataset.records.size(); ++j) {
    const ImageRecord& record = dataset.records[j];
    const ConstraintPartition& part = partitions[j];
    ImageConstraints image;
    image.image_id = record.image_id;
    for (std::size_t p : part.positives) {
      image.constraints.push_back({static_cast<std::int32_t>(image.num_rows), -1});
      AppendRow(image, record, p, problem.dim_);
    }
    for (std::size_t q : part.negatives) {
      image.constraints.push_back({-1, static_cast<std::int32_t>(image.num_rows)});
      AppendRow(image, record, q, problem.dim_);
    }
    problem.images_.push_back(std::move(image));
  }
  return problem;
}

RankingProblem RankingProblem::Partial(const Dataset& dataset,
                                       const TrainingConfig& config) {
  std::vector<ConstraintPartition> partitions;
  partitions.reserve(dataset.records.size());
  for (const auto& r : dataset.records) {
    partitions.push_back(BuildPartialConstraints(r, config));
  }
  return Partial(dataset, partitions, config);
}

RankingProblem RankingProblem::FullPairs(const Dataset& dataset,
                                         const TrainingConfig& config) {
  RankingProblem problem(ResolveDim(dataset), config.EffectiveC(),
                         SlackMode::kPerConstraint);
  problem.images_.reserve(dataset.records.size());
  for (const auto& record : dataset.records) {
    ImageConstraints image;
    image.image_id = record.image_id;
    for (std::size_t i = 0; i < record.candidates.size(); ++i) {
      AppendRow(image, record, i, problem.dim_);
    }
    for (const auto& [p, q] : BuildFullConstraints(record)) {
      image.constraints.push_back(
          {static_cast<std::int32_t>(p), static_cast<std::int32_t>(q)});
    }
    problem.images_.push_back(std::move(image));
  }
  return problem;
}

std::size_t RankingProblem::NumConstraints() const {
  std::size_t total = 0;
  for (const auto& im : images_) total += im.constraints.size();
  return total;
}

void RankingProblem::CheckWeights(std::span<const double> w) const {
  if (w.size() != dim_) {
    throw DataError(fmt::format("weight vector has dimension {}, features have {}",
                                w.size(), dim_));
  }
}

void RankingProblem::ImageScores(std::size_t j, std::span<const double> w,
                                 std::vector<double>& scores) const {
  const ImageConstraints& im = images_[j];
  scores.resize(im.num_rows);
  for (std::size_t r = 0; r < im.num_rows; ++r) {
    scores[r] = Dot(&im.features[r * dim_], w);
  }
}

double RankingProblem::ImageLoss(std::size_t j, std::span<const double> w) const {
  CheckWeights(w);
  std::vector<double> scores;
  ImageScores(j, w, scores);
  double loss = 0.0;
  for (const auto& c : images_[j].constraints) {
    const double hinge = 1.0 - Margin(c, scores);
    if (slack_ == SlackMode::kShared) {
      loss = std::max(loss, hinge);
    } else if (hinge > 0.0) {
      loss += hinge;
    }
  }
  return loss;
}

double RankingProblem::Objective(std::span<const double> w) const {
  CheckWeights(w);
  double reg = 0.0;
  for (double v : w) reg += v * v;
  double loss = 0.0;
  for (std::size_t j = 0; j < images_.size(); ++j) loss += ImageLoss(j, w);
  return 0.5 * reg + c_ * loss;
}

void RankingProblem::AddLossSubgradient(std::size_t j, std::span<const double> w,
                                        double scale, std::span<double> out) const {
  const ImageConstraints& im = images_[j];
  std::vector<double> scores;
  ImageScores(j, w, scores);

  // d(hinge)/dw = -(x_plus - x_minus); accumulate per-row coefficients first.
  std::vector<double> coef(im.num_rows, 0.0);
  auto add = [&](const HingeConstraint& c) {
    if (c.plus >= 0) coef[c.plus] -= 1.0;
    if (c.minus >= 0) coef[c.minus] += 1.0;
  };
  if (slack_ == SlackMode::kShared) {
    double worst = 0.0;
    const HingeConstraint* active = nullptr;
    for (const auto& c : im.constraints) {
      const double hinge = 1.0 - Margin(c, scores);
      if (hinge > worst) {
        worst = hinge;
        active = &c;
      }
    }
    if (active == nullptr) return;
    add(*active);
  } else {
    for (const auto& c : im.constraints) {
      if (1.0 - Margin(c, scores) > 0.0) add(c);
    }
  }
  for (std::size_t r = 0; r < im.num_rows; ++r) {
    if (coef[r] == 0.0) continue;
    const double a = scale * coef[r];
    const double* x = &im.features[r * dim_];
    for (std::size_t i = 0; i < dim_; ++i) out[i] += a * x[i];
  }
}

double PartialObjective(std::span<const double> w, const Dataset& dataset,
                        const std::vector<ConstraintPartition>& partitions,
                        const TrainingConfig& config) {
  return RankingProblem::Partial(dataset, partitions, config).Objective(w);
}

double FullPairsObjective(std::span<const double> w, const Dataset& dataset,
                          const TrainingConfig& config) {
  return RankingProblem::FullPairs(dataset, config).Objective(w);
}

}  // namespace prerank
