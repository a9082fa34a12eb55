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

#ifndef PRERANK_DATASET_IO_H_
#define PRERANK_DATASET_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "prerank/dataset.h"

namespace prerank {

// JSON Lines dataset format, one image per line:
//   {"image_id": str, "width": int, "height": int,
//    "groundtruth": [{"class": str, "box": [x0, y0, x1, y1]}],
//    "candidates": [{"box": [...], "iou_label": float?, "features": [...]?,
//                    "original_index": int?}]}
// Field order is free and unknown fields are ignored. Blank lines are
// skipped. Parse and validation failures throw DataError citing the line.
Dataset ReadDatasetJsonl(std::istream& in);
Dataset ReadDatasetJsonl(const std::filesystem::path& path);

void WriteDatasetJsonl(const Dataset& dataset, std::ostream& out);
std::string DatasetToJsonl(const Dataset& dataset);

nlohmann::json RecordToJson(const ImageRecord& record);
ImageRecord RecordFromJson(const nlohmann::json& j);

nlohmann::json BoxToJson(const Box& box);
Box BoxFromJson(const nlohmann::json& j);

}  // namespace prerank

#endif  // PRERANK_DATASET_IO_H_
