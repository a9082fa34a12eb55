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

#include "prerank/dataset_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "prerank/errors.h"

namespace prerank {

using nlohmann::json;

json BoxToJson(const Box& box) {
  return json::array({box.x_min, box.y_min, box.x_max, box.y_max});
}

Box BoxFromJson(const json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw DataError("box must be an array of 4 numbers");
  }
  for (const auto& v : j) {
    if (!v.is_number()) throw DataError("box must be an array of 4 numbers");
  }
  return Box{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
             j[3].get<double>()};
}

json RecordToJson(const ImageRecord& record) {
  json gts = json::array();
  for (const auto& gt : record.groundtruth) {
    gts.push_back({{"class", gt.class_label}, {"box", BoxToJson(gt.box)}});
  }
  json cands = json::array();
  for (const auto& c : record.candidates) {
    json jc = {{"box", BoxToJson(c.box)}};
    if (c.iou_label) jc["iou_label"] = *c.iou_label;
    if (c.features) jc["features"] = *c.features;
    if (c.original_index) jc["original_index"] = *c.original_index;
    cands.push_back(std::move(jc));
  }
  return json{{"image_id", record.image_id},
              {"width", record.width},
              {"height", record.height},
              {"groundtruth", std::move(gts)},
              {"candidates", std::move(cands)}};
}

namespace {

const json& Require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw DataError(fmt::format("missing field '{}'", key));
  return *it;
}

int RequireInt(const json& j, const char* key) {
  const json& v = Require(j, key);
  if (!v.is_number_integer()) {
    throw DataError(fmt::format("field '{}' must be an integer", key));
  }
  return v.get<int>();
}

}  // namespace

ImageRecord RecordFromJson(const json& j) {
  if (!j.is_object()) throw DataError("record must be a JSON object");
  ImageRecord record;
  const json& id = Require(j, "image_id");
  if (!id.is_string()) throw DataError("field 'image_id' must be a string");
  record.image_id = id.get<std::string>();
  record.width = RequireInt(j, "width");
  record.height = RequireInt(j, "height");

  if (auto it = j.find("groundtruth"); it != j.end()) {
    if (!it->is_array()) throw DataError("field 'groundtruth' must be an array");
    for (const auto& jg : *it) {
      if (!jg.is_object()) throw DataError("groundtruth entry must be an object");
      GroundTruthObject gt;
      const json& cls = Require(jg, "class");
      if (!cls.is_string()) throw DataError("groundtruth 'class' must be a string");
      gt.class_label = cls.get<std::string>();
      gt.box = BoxFromJson(Require(jg, "box"));
      record.groundtruth.push_back(std::move(gt));
    }
  }

  const json& jcands = Require(j, "candidates");
  if (!jcands.is_array()) throw DataError("field 'candidates' must be an array");
  record.candidates.reserve(jcands.size());
  for (const auto& jc : jcands) {
    if (!jc.is_object()) throw DataError("candidate entry must be an object");
    Candidate c;
    c.box = BoxFromJson(Require(jc, "box"));
    if (auto it = jc.find("iou_label"); it != jc.end() && !it->is_null()) {
      if (!it->is_number()) throw DataError("candidate 'iou_label' must be a number");
      c.iou_label = it->get<double>();
    }
    if (auto it = jc.find("features"); it != jc.end() && !it->is_null()) {
      if (!it->is_array()) throw DataError("candidate 'features' must be an array");
      FeatureVector f;
      f.reserve(it->size());
      for (const auto& v : *it) {
        if (!v.is_number()) throw DataError("candidate 'features' must hold numbers");
        f.push_back(v.get<double>());
      }
      c.features = std::move(f);
    }
    if (auto it = jc.find("original_index"); it != jc.end() && !it->is_null()) {
      if (!it->is_number_unsigned()) {
        throw DataError("candidate 'original_index' must be a non-negative integer");
      }
      c.original_index = it->get<std::size_t>();
    }
    record.candidates.push_back(std::move(c));
  }
  return record;
}

Dataset ReadDatasetJsonl(std::istream& in) {
  Dataset dataset;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      ImageRecord record = RecordFromJson(json::parse(line));
      ValidateRecord(record);
      dataset.records.push_back(std::move(record));
    } catch (const json::exception& e) {
      throw DataError(fmt::format("line {}: malformed JSON: {}", line_no, e.what()));
    } catch (const DataError& e) {
      throw DataError(fmt::format("line {}: {}", line_no, e.what()));
    }
  }
  ValidateDataset(dataset);
  return dataset;
}

Dataset ReadDatasetJsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(fmt::format("cannot open dataset '{}'", path.string()));
  try {
    return ReadDatasetJsonl(in);
  } catch (const DataError& e) {
    throw DataError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

void WriteDatasetJsonl(const Dataset& dataset, std::ostream& out) {
  for (const auto& record : dataset.records) {
    out << RecordToJson(record).dump() << '\n';
  }
}

std::string DatasetToJsonl(const Dataset& dataset) {
  std::ostringstream out;
  WriteDatasetJsonl(dataset, out);
  return out.str();
}

}  // namespace prerank
