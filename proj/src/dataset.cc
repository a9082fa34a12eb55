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

#include "prerank/dataset.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include <fmt/format.h>

#include "prerank/errors.h"

namespace prerank {

std::size_t Dataset::NumCandidates() const {
  std::size_t total = 0;
  for (const auto& r : records) total += r.candidates.size();
  return total;
}

std::size_t Dataset::NumGroundTruth() const {
  std::size_t total = 0;
  for (const auto& r : records) total += r.groundtruth.size();
  return total;
}

void ValidateRecord(const ImageRecord& record) {
  if (record.image_id.empty()) throw DataError("record with empty image_id");
  const std::string ctx = fmt::format("image '{}'", record.image_id);
  if (record.width <= 0 || record.height <= 0) {
    throw DataError(fmt::format("{}: non-positive image size {}x{}", ctx,
                                record.width, record.height));
  }
  auto check_box = [&](const Box& box, const std::string& what) {
    ValidateBox(box, fmt::format("{}: {}", ctx, what));
    if (!box.InBounds(record.width, record.height)) {
      throw DataError(fmt::format("{}: {} {} lies outside the {}x{} image", ctx,
                                  what, box.ToString(), record.width,
                                  record.height));
    }
  };
  for (std::size_t g = 0; g < record.groundtruth.size(); ++g) {
    const auto& gt = record.groundtruth[g];
    if (gt.class_label.empty()) {
      throw DataError(
          fmt::format("{}: groundtruth {} has an empty class label", ctx, g));
    }
    check_box(gt.box, fmt::format("groundtruth {}", g));
  }
  for (std::size_t i = 0; i < record.candidates.size(); ++i) {
    const auto& c = record.candidates[i];
    check_box(c.box, fmt::format("candidate {}", i));
    if (c.iou_label &&
        !(std::isfinite(*c.iou_label) && *c.iou_label >= 0.0 &&
          *c.iou_label <= 1.0)) {
      throw DataError(fmt::format("{}: candidate {} iou_label {} outside [0, 1]",
                                  ctx, i, *c.iou_label));
    }
    if (c.features) {
      for (double v : *c.features) {
        if (!std::isfinite(v)) {
          throw DataError(fmt::format(
              "{}: candidate {} has a non-finite feature value", ctx, i));
        }
      }
    }
  }
}

void ValidateDataset(Dataset& dataset) {
  std::unordered_set<std::string> seen;
  std::optional<std::size_t> dim = dataset.feature_dim;
  for (const auto& record : dataset.records) {
    ValidateRecord(record);
    if (!seen.insert(record.image_id).second) {
      throw DataError(
          fmt::format("duplicate image_id '{}'", record.image_id));
    }
    for (std::size_t i = 0; i < record.candidates.size(); ++i) {
      const auto& f = record.candidates[i].features;
      if (!f) continue;
      if (!dim) dim = f->size();
      if (f->size() != *dim) {
        throw DataError(fmt::format(
            "image '{}': candidate {} has feature dimension {}, expected {}",
            record.image_id, i, f->size(), *dim));
      }
    }
  }
  if (dim && *dim == 0) throw DataError("feature dimension must be positive");
  dataset.feature_dim = dim;
}

ImageRecord LabelCandidates(const ImageRecord& record) {
  ImageRecord out = record;
  for (auto& c : out.candidates) {
    double best = 0.0;
    for (const auto& gt : out.groundtruth) best = std::max(best, Iou(c.box, gt.box));
    c.iou_label = best;
  }
  return out;
}

Dataset LabelDataset(const Dataset& dataset) {
  Dataset out;
  out.feature_dim = dataset.feature_dim;
  out.records.reserve(dataset.records.size());
  for (const auto& r : dataset.records) out.records.push_back(LabelCandidates(r));
  return out;
}

Permutation ArgsortDescending(std::span<const double> values) {
  Permutation order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return values[a] > values[b];
                   });
  return order;
}

Permutation RankByLabel(const ImageRecord& record) {
  std::vector<double> labels;
  labels.reserve(record.candidates.size());
  for (const auto& c : record.candidates) labels.push_back(c.iou_label.value_or(0.0));
  return ArgsortDescending(labels);
}

ImageRecord ApplyPermutation(const ImageRecord& record,
                             const Permutation& order) {
  ValidatePermutation(order, record.candidates.size(),
                      fmt::format("image '{}'", record.image_id));
  ImageRecord out = record;
  out.candidates.clear();
  out.candidates.reserve(order.size());
  for (std::size_t idx : order) {
    Candidate c = record.candidates[idx];
    if (!c.original_index) c.original_index = idx;
    out.candidates.push_back(std::move(c));
  }
  return out;
}

void ValidatePermutation(const Permutation& order, std::size_t n,
                         const std::string& context) {
  const std::string prefix = context.empty() ? "" : context + ": ";
  if (order.size() != n) {
    throw DataError(fmt::format("{}ranking has {} entries for {} candidates",
                                prefix, order.size(), n));
  }
  std::vector<bool> hit(n, false);
  for (std::size_t idx : order) {
    if (idx >= n || hit[idx]) {
      throw DataError(fmt::format("{}ranking is not a permutation", prefix));
    }
    hit[idx] = true;
  }
}

}  // namespace prerank
