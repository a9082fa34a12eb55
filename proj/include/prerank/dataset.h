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

#ifndef PRERANK_DATASET_H_
#define PRERANK_DATASET_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prerank/box.h"

namespace prerank {

using FeatureVector = std::vector<double>;

// Indices into a record's candidate list, best first.
using Permutation = std::vector<std::size_t>;

struct GroundTruthObject {
  std::string class_label;
  Box box;
};

struct Candidate {
  Box box;
  // IoU with the best-matching groundtruth object; unset until labeled.
  std::optional<double> iou_label;
  std::optional<FeatureVector> features;
  // Position in the ingestion order; set when a dataset is re-ranked.
  std::optional<std::size_t> original_index;
};

// One image: its groundtruth objects and the ordered candidate list. The
// candidate order is the upstream generator's ranking and is never changed
// implicitly.
struct ImageRecord {
  std::string image_id;
  int width = 0;
  int height = 0;
  std::vector<GroundTruthObject> groundtruth;
  std::vector<Candidate> candidates;

  std::size_t size() const { return candidates.size(); }
};

struct Dataset {
  std::vector<ImageRecord> records;
  std::optional<std::size_t> feature_dim;

  std::size_t NumCandidates() const;
  std::size_t NumGroundTruth() const;
};

// Checks the structural invariants of a record: non-empty id, positive image
// size, valid in-bounds boxes, labels in [0, 1], finite features, non-empty
// class labels. Throws DataError naming the image.
void ValidateRecord(const ImageRecord& record);

// ValidateRecord on every record plus unique image ids and a consistent
// feature dimension. Fills in `feature_dim` when it is unset and at least one
// candidate carries features.
void ValidateDataset(Dataset& dataset);

// Sets each candidate's iou_label to the max IoU over the groundtruth
// objects (0 when there are none). Candidate order is unchanged.
ImageRecord LabelCandidates(const ImageRecord& record);
Dataset LabelDataset(const Dataset& dataset);

// Stable argsort by descending value: ties keep their original order.
Permutation ArgsortDescending(std::span<const double> values);

// Candidate indices sorted by descending iou_label (unlabeled counts as 0).
Permutation RankByLabel(const ImageRecord& record);

// Returns the record with candidates reordered by `order`, recording each
// candidate's original position (keeping an existing one).
ImageRecord ApplyPermutation(const ImageRecord& record,
                             const Permutation& order);

// Throws DataError unless `order` is a permutation of [0, n).
void ValidatePermutation(const Permutation& order, std::size_t n,
                         const std::string& context = "");

}  // namespace prerank

#endif  // PRERANK_DATASET_H_
