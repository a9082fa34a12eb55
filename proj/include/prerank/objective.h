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

#ifndef PRERANK_OBJECTIVE_H_
#define PRERANK_OBJECTIVE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prerank/constraints.h"
#include "prerank/dataset.h"
#include "prerank/training_config.h"

namespace prerank {

using WeightVector = std::vector<double>;

// One large-margin constraint on the scores s of an image's rows:
//   s[plus] - s[minus] >= 1,
// where a negative index stands for a zero score. Positives of the partial
// model are {p, -1} (w.x_p >= +1), negatives {-1, q} (w.x_q <= -1), and a
// full-ranking pair is {p, q}.
struct HingeConstraint {
  std::int32_t plus = -1;
  std::int32_t minus = -1;
};

// The feature rows and constraints contributed by one image.
struct ImageConstraints {
  std::string image_id;
  std::size_t num_rows = 0;
  std::vector<double> features;  // num_rows x dim, row-major
  std::vector<HingeConstraint> constraints;
};

// A regularized hinge problem
//   1/2 |w|^2 + C * sum_j loss_j(w)
// where loss_j is either the max hinge over image j's constraints (shared
// slack) or their sum (per-constraint slack).
class RankingProblem {
 public:
  // Partial top-k vs. bottom constraints from precomputed partitions.
  static RankingProblem Partial(const Dataset& dataset,
                                const std::vector<ConstraintPartition>& partitions,
                                const TrainingConfig& config);
  // Partial constraints built from the dataset labels.
  static RankingProblem Partial(const Dataset& dataset,
                                const TrainingConfig& config);
  // Every ordered pair of each image, one slack per pair.
  static RankingProblem FullPairs(const Dataset& dataset,
                                  const TrainingConfig& config);

  std::size_t dim() const { return dim_; }
  std::size_t num_images() const { return images_.size(); }
  double C() const { return c_; }
  SlackMode slack() const { return slack_; }
  const ImageConstraints& image(std::size_t j) const { return images_[j]; }
  std::size_t NumConstraints() const;

  double Objective(std::span<const double> w) const;
  // loss_j(w) >= 0.
  double ImageLoss(std::size_t j, std::span<const double> w) const;
  // Adds `scale` times a subgradient of loss_j at w into `out`. For shared
  // slack the active constraint is the most violated one, lowest index on
  // ties; nothing is added when loss_j(w) = 0.
  void AddLossSubgradient(std::size_t j, std::span<const double> w,
                          double scale, std::span<double> out) const;

  // Scores of image j's rows.
  void ImageScores(std::size_t j, std::span<const double> w,
                   std::vector<double>& scores) const;

 private:
  RankingProblem(std::size_t dim, double c, SlackMode slack)
      : dim_(dim), c_(c), slack_(slack) {}
  void CheckWeights(std::span<const double> w) const;

  std::size_t dim_ = 0;
  double c_ = 1.0;
  SlackMode slack_ = SlackMode::kShared;
  std::vector<ImageConstraints> images_;
};

// 1/2 |w|^2 + C_eff * sum_j xi_j with xi_j the tightest slack meeting all of
// image j's partial constraints (or the per-constraint sum when configured).
// Throws DataError when w or any referenced feature has the wrong dimension.
double PartialObjective(std::span<const double> w, const Dataset& dataset,
                        const std::vector<ConstraintPartition>& partitions,
                        const TrainingConfig& config);

// 1/2 |w|^2 + C_eff * sum over all ranked pairs of max(0, 1 - w.(x_p - x_q)).
double FullPairsObjective(std::span<const double> w, const Dataset& dataset,
                          const TrainingConfig& config);

}  // namespace prerank

#endif  // PRERANK_OBJECTIVE_H_
