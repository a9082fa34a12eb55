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

#include "prerank/cli.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "prerank/dataset_io.h"
#include "prerank/digest.h"
#include "prerank/errors.h"
#include "prerank/hog.h"
#include "prerank/metrics.h"
#include "prerank/model.h"
#include "prerank/report.h"
#include "prerank/scoring.h"
#include "prerank/synth.h"
#include "prerank/trainer.h"

#ifndef PRERANK_VERSION
#define PRERANK_VERSION "0.0.0"
#endif

namespace prerank {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(fmt::format("cannot write '{}'", path.string()));
  out << contents;
  if (!out) throw DataError(fmt::format("failed writing '{}'", path.string()));
}

fs::path Sidecar(const fs::path& path, const std::string& suffix) {
  return fs::path(path.string() + suffix);
}

// The HOG parameters a featurized dataset was produced with, if recorded.
fs::path HogSidecar(const fs::path& dataset) { return Sidecar(dataset, ".hog.json"); }

// Collects what a run read and wrote; written next to the primary output.
class RunManifest {
 public:
  RunManifest(std::string command, const std::vector<std::string>& args)
      : start_(std::chrono::steady_clock::now()) {
    j_["command"] = std::move(command);
    j_["args"] = args;
    j_["version"] = PRERANK_VERSION;
    j_["inputs"] = json::object();
    j_["outputs"] = json::array();
    j_["configs"] = json::object();
  }

  void Input(const fs::path& path, const std::string& bytes) {
    j_["inputs"][path.string()] = DigestHex(bytes);
  }
  void Config(const std::string& name, const json& config) {
    j_["configs"][name] = {{"digest", DigestHex(config.dump())}, {"value", config}};
  }
  void Output(const fs::path& path) { j_["outputs"].push_back(path.string()); }
  void Note(const std::string& key, json value) { j_[key] = std::move(value); }

  void Write(const fs::path& primary_output) {
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
    j_["wall_time_s"] = secs;
    j_["created"] = NowIso8601();
    WriteFile(Sidecar(primary_output, ".manifest.json"), j_.dump(2) + "\n");
  }

 private:
  std::chrono::steady_clock::time_point start_;
  json j_;
};

Dataset LoadDataset(const fs::path& path, RunManifest& manifest) {
  const std::string bytes = ReadFile(path);
  manifest.Input(path, bytes);
  std::istringstream in(bytes);
  try {
    return ReadDatasetJsonl(in);
  } catch (const DataError& e) {
    throw DataError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

// Out-of-range flag values are usage errors, not data errors.
template <typename F>
void ValidateFlags(F&& check) {
  try {
    check();
  } catch (const DataError& e) {
    throw CLI::ValidationError(e.what());
  }
}

template <typename T>
std::vector<T> ParseList(const std::string& text, const char* what) {
  std::vector<T> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    T v{};
    if (!(is >> v) || !(is >> std::ws).eof()) {
      throw CLI::ValidationError(fmt::format("bad {} value '{}'", what, item));
    }
    values.push_back(v);
  }
  return values;
}

struct HogOptions {
  HogConfig config;
  void Register(CLI::App* cmd) {
    cmd->add_option("--hog-width", config.resize_w, "HOG patch width")->capture_default_str();
    cmd->add_option("--hog-height", config.resize_h, "HOG patch height")->capture_default_str();
    cmd->add_option("--hog-cell", config.cell_size, "HOG cell size in pixels")->capture_default_str();
    cmd->add_option("--hog-bins", config.orientation_bins, "HOG orientation bins")->capture_default_str();
    cmd->add_option("--hog-block", config.block_size, "HOG block size in cells")->capture_default_str();
    cmd->add_option("--hog-stride", config.block_stride, "HOG block stride in cells")->capture_default_str();
    cmd->add_option("--hog-clip", config.clip_value, "HOG L2-hys clip value")->capture_default_str();
  }
};

// ---------------------------------------------------------------- label

struct LabelArgs {
  std::string in, out, images;
  bool keep_existing = false;
  HogOptions hog;
};

int RunLabel(const LabelArgs& a, const std::vector<std::string>& argv,
             std::ostream& out, std::ostream& err) {
  RunManifest manifest("label", argv);
  Dataset dataset = LabelDataset(LoadDataset(a.in, manifest));

  std::vector<std::string> failures;
  if (!a.images.empty()) {
    ValidateFlags([&] { a.hog.config.Validate(); });
    manifest.Config("hog", HogConfigToJson(a.hog.config));
    FeaturizeResult fr = FeaturizeDataset(dataset, PgmDirectorySource(a.images),
                                          a.hog.config, a.keep_existing);
    dataset = std::move(fr.dataset);
    failures = std::move(fr.failures);
    for (const auto& f : failures) err << "warning: " << f << '\n';
  }

  WriteFile(a.out, DatasetToJsonl(dataset));
  manifest.Output(a.out);
  if (!a.images.empty()) {
    WriteFile(HogSidecar(a.out), HogConfigToJson(a.hog.config).dump(2) + "\n");
    manifest.Output(HogSidecar(a.out));
  } else if (fs::exists(HogSidecar(a.in))) {
    // Relabeling keeps the record of how existing features were computed.
    const std::string bytes = ReadFile(HogSidecar(a.in));
    manifest.Input(HogSidecar(a.in), bytes);
    WriteFile(HogSidecar(a.out), bytes);
    manifest.Output(HogSidecar(a.out));
  }
  manifest.Note("featurize_failures", failures);
  manifest.Write(a.out);
  out << fmt::format("labeled {} images, {} objects, {} candidates\n",
                     dataset.records.size(), dataset.NumGroundTruth(),
                     dataset.NumCandidates());
  return kExitOk;
}

// ---------------------------------------------------------------- train

struct TrainArgs {
  std::string in, out, baseline = "partial", mode = "soft", slack = "shared";
  TrainingConfig config;
  int log_every = 100;
};

int RunTrain(TrainArgs a, const std::vector<std::string>& argv,
             std::ostream& out, std::ostream& err) {
  RunManifest manifest("train", argv);
  TrainingConfig config = a.config;
  config.mode = ParseTrainingMode(a.mode);
  config.slack = ParseSlackMode(a.slack);
  config.objective = ParseRankingObjective(a.baseline);
  ValidateFlags([&] { config.Validate(); });
  manifest.Config("training", TrainingConfigToJson(config));

  const Dataset dataset = LoadDataset(a.in, manifest);
  std::optional<HogConfig> hog;
  if (fs::exists(HogSidecar(a.in))) {
    const std::string bytes = ReadFile(HogSidecar(a.in));
    manifest.Input(HogSidecar(a.in), bytes);
    try {
      hog = HogConfigFromJson(json::parse(bytes));
    } catch (const json::exception& e) {
      throw DataError(fmt::format("{}: {}", HogSidecar(a.in).string(), e.what()));
    }
  }

  const int log_every = std::max(1, a.log_every);
  TrainResult result = Train(dataset, config, [&](int epoch, double f, double best) {
    if (epoch % log_every == 0 || epoch == 1) {
      err << fmt::format("epoch {:6d}  objective {:.9g}  best {:.9g}\n", epoch, f, best);
    }
  });
  result.model.hog_config = hog;

  SaveModel(result.model, a.out);
  manifest.Output(a.out);
  json summary = {{"epochs_run", result.epochs_run},
                  {"converged", result.converged},
                  {"initial_objective", result.initial_objective},
                  {"final_objective", result.model.final_objective}};
  out << fmt::format("{} model: {} epochs, objective {:.9g} (at w=0: {:.9g})\n",
                     ToString(config.objective), result.epochs_run,
                     result.model.final_objective, result.initial_objective);
  if (result.violations) {
    const ViolationReport& v = *result.violations;
    out << fmt::format(
        "violations: order {} ({} images), margin {}, max hinge {:.9g}, "
        "min score gap {:.9g}\n",
        v.order_violations, v.images_with_order_violations, v.margin_violations,
        v.max_hinge, v.min_score_gap);
    summary["violations"] = {{"order", v.order_violations},
                             {"images_with_order_violations", v.images_with_order_violations},
                             {"margin", v.margin_violations},
                             {"max_hinge", v.max_hinge},
                             {"min_score_gap", v.min_score_gap}};
  }
  manifest.Note("training", summary);
  manifest.Write(a.out);
  return kExitOk;
}

// ---------------------------------------------------------------- rerank

struct RerankArgs {
  std::string in, model, out;
};

int RunRerank(const RerankArgs& a, const std::vector<std::string>& argv,
              std::ostream& out, std::ostream&) {
  RunManifest manifest("rerank", argv);
  const std::string model_bytes = ReadFile(a.model);
  manifest.Input(a.model, model_bytes);
  TrainedModel model;
  try {
    model = ModelFromJson(json::parse(model_bytes));
  } catch (const json::exception& e) {
    throw DataError(fmt::format("{}: malformed JSON: {}", a.model, e.what()));
  }
  const Dataset dataset = LoadDataset(a.in, manifest);
  if (dataset.feature_dim && *dataset.feature_dim != model.feature_dim) {
    throw DataError(fmt::format("dataset feature dimension {} does not match model dimension {}",
                                *dataset.feature_dim, model.feature_dim));
  }
  const Dataset reranked = RerankDataset(model, dataset);
  WriteFile(a.out, DatasetToJsonl(reranked));
  manifest.Output(a.out);
  manifest.Write(a.out);
  out << fmt::format("reranked {} images\n", reranked.records.size());
  return kExitOk;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string in, reranked, out, out_text;
  std::string deltas = "0.5,0.7,0.9";
  std::string budgets = "1,10,50,100,200,500,800,1000";
  bool inclusive = false;
};

// Reorders `other` to follow the record order of `reference`. Throws
// DataError listing ids present in one dataset only.
Dataset AlignRecords(const Dataset& reference, const Dataset& other) {
  std::map<std::string, const ImageRecord*> by_id;
  for (const auto& r : other.records) by_id[r.image_id] = &r;
  std::set<std::string> ref_ids;
  std::vector<std::string> missing, extra;
  Dataset aligned;
  aligned.feature_dim = other.feature_dim;
  for (const auto& r : reference.records) {
    ref_ids.insert(r.image_id);
    auto it = by_id.find(r.image_id);
    if (it == by_id.end()) {
      missing.push_back(r.image_id);
    } else {
      aligned.records.push_back(*it->second);
    }
  }
  for (const auto& r : other.records) {
    if (!ref_ids.count(r.image_id)) extra.push_back(r.image_id);
  }
  if (!missing.empty() || !extra.empty()) {
    throw DataError(fmt::format(
        "image ids differ between datasets; missing from reranked: [{}]; "
        "missing from original: [{}]",
        fmt::join(missing, ", "), fmt::join(extra, ", ")));
  }
  return aligned;
}

int RunEval(const EvalArgs& a, const std::vector<std::string>& argv,
            std::ostream& out, std::ostream&) {
  RunManifest manifest("eval", argv);
  EvalConfig config;
  config.iou_thresholds = ParseList<double>(a.deltas, "delta");
  config.proposal_budgets = ParseList<std::size_t>(a.budgets, "budget");
  config.rule = a.inclusive ? ThresholdRule::kInclusive : ThresholdRule::kStrict;
  ValidateFlags([&] { config.Validate(); });
  manifest.Config("eval", {{"deltas", config.iou_thresholds},
                           {"budgets", config.proposal_budgets},
                           {"rule", a.inclusive ? "inclusive" : "strict"}});

  const Dataset original = LoadDataset(a.in, manifest);
  const Dataset reranked = AlignRecords(original, LoadDataset(a.reranked, manifest));
  const ComparisonReport report =
      CompareRankings(original, IdentityRankings(original), reranked,
                      IdentityRankings(reranked), config);
  const std::string text = FormatText(report);
  const fs::path text_path = a.out_text.empty() ? Sidecar(a.out, ".txt") : fs::path(a.out_text);

  WriteFile(a.out, FormatCsv(report));
  WriteFile(text_path, text);
  manifest.Output(a.out);
  manifest.Output(text_path);
  manifest.Write(a.out);
  out << text;
  return kExitOk;
}

// ---------------------------------------------------------------- synth

struct SynthArgs {
  std::string out, mode = "feature_only";
  SynthConfig config;
};

int RunSynth(SynthArgs a, const std::vector<std::string>& argv,
             std::ostream& out, std::ostream&) {
  RunManifest manifest("synth", argv);
  SynthConfig config = a.config;
  config.mode = ParseSynthMode(a.mode);
  ValidateFlags([&] { config.Validate(); });
  manifest.Config("synth", SynthConfigToJson(config));

  Dataset dataset;
  std::optional<WeightVector> planted;
  if (config.mode == SynthMode::kFeatureOnly) {
    FeatureDataset fd = GenerateFeatureDataset(config);
    dataset = std::move(fd.dataset);
    planted = std::move(fd.planted);
  } else {
    dataset = GenerateGeometricDataset(config);
  }
  ValidateDataset(dataset);

  fs::path meta = fs::path(a.out).replace_extension(".meta.json");
  WriteFile(a.out, DatasetToJsonl(dataset));
  WriteFile(meta, SynthMetadata(config, planted).dump(2) + "\n");
  manifest.Output(a.out);
  manifest.Output(meta);
  manifest.Write(a.out);
  out << fmt::format("generated {} images, {} candidates ({})\n",
                     dataset.records.size(), dataset.NumCandidates(), a.mode);
  return kExitOk;
}

// ---------------------------------------------------------------- report

struct ReportArgs {
  std::string in, out;
};

int RunReport(const ReportArgs& a, const std::vector<std::string>& argv,
              std::ostream& out, std::ostream&) {
  RunManifest manifest("report", argv);
  const std::string bytes = ReadFile(a.in);
  manifest.Input(a.in, bytes);
  std::istringstream in(bytes);
  ComparisonReport report;
  try {
    report = ParseCsv(in);
  } catch (const DataError& e) {
    throw DataError(fmt::format("{}: {}", a.in, e.what()));
  }
  const std::string text = FormatText(report);
  if (!a.out.empty()) {
    WriteFile(a.out, text);
    manifest.Output(a.out);
    manifest.Write(a.out);
  }
  out << text;
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Partial top-k re-ranking of object proposals", "prerank"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PRERANK_VERSION);

  LabelArgs label;
  auto* label_cmd = app.add_subcommand("label", "Fill candidate IoU labels (and optionally HOG features)");
  label_cmd->add_option("--in", label.in, "Input dataset (JSON Lines)")->required();
  label_cmd->add_option("--out", label.out, "Output dataset path")->required();
  label_cmd->add_option("--images", label.images, "Directory of <image_id>.pgm files; enables HOG featurization");
  label_cmd->add_flag("--keep-existing", label.keep_existing, "Keep features already present");
  label.hog.Register(label_cmd);

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train a linear ranking model");
  train_cmd->add_option("--in", train.in, "Labeled, featurized dataset")->required();
  train_cmd->add_option("--out", train.out, "Output model path")->required();
  train_cmd->add_option("--k", train.config.k, "Top-k positives per image")->capture_default_str();
  train_cmd->add_option("--C", train.config.C, "Soft-margin trade-off")->capture_default_str();
  train_cmd->add_option("--mode", train.mode, "soft or hard")->check(CLI::IsMember({"soft", "hard"}))->capture_default_str();
  train_cmd->add_option("--hard-C", train.config.hard_mode_C, "Trade-off used in hard mode")->capture_default_str();
  train_cmd->add_option("--epochs", train.config.epochs, "Maximum epochs")->capture_default_str();
  train_cmd->add_option("--seed", train.config.seed, "Seed for the image visiting order")->capture_default_str();
  train_cmd->add_option("--baseline", train.baseline, "partial (top-k) or full (all pairs)")->check(CLI::IsMember({"partial", "full"}))->capture_default_str();
  train_cmd->add_option("--slack", train.slack, "shared or per_constraint")->check(CLI::IsMember({"shared", "per_constraint"}))->capture_default_str();
  train_cmd->add_option("--eta0", train.config.eta0, "Initial step size (0 = 1/(C N))")->capture_default_str();
  train_cmd->add_option("--decay", train.config.decay, "Step decay rate")->capture_default_str();
  train_cmd->add_option("--tol", train.config.convergence_tol, "Relative objective change for early stopping (0 disables)")->capture_default_str();
  train_cmd->add_option("--patience", train.config.patience, "Quiet epochs before stopping")->capture_default_str();
  train_cmd->add_option("--log-every", train.log_every, "Log the objective every N epochs")->capture_default_str();

  RerankArgs rerank;
  auto* rerank_cmd = app.add_subcommand("rerank", "Reorder candidates by model score");
  rerank_cmd->add_option("--in", rerank.in, "Featurized dataset")->required();
  rerank_cmd->add_option("--model", rerank.model, "Model file")->required();
  rerank_cmd->add_option("--out", rerank.out, "Output dataset path")->required();

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Compare DR and MABO of ingestion order vs. a reranked dataset");
  eval_cmd->add_option("--in", eval.in, "Original dataset (ingestion order)")->required();
  eval_cmd->add_option("--reranked", eval.reranked, "Reranked dataset")->required();
  eval_cmd->add_option("--out", eval.out, "CSV report path")->required();
  eval_cmd->add_option("--out-text", eval.out_text, "Text report path (default <out>.txt)");
  eval_cmd->add_option("--deltas", eval.deltas, "Comma-separated IoU thresholds")->capture_default_str();
  eval_cmd->add_option("--budgets", eval.budgets, "Comma-separated proposal budgets")->capture_default_str();
  eval_cmd->add_flag("--inclusive", eval.inclusive, "Count best overlap >= delta instead of > delta");

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic dataset");
  synth_cmd->add_option("--out", synth.out, "Output dataset path")->required();
  synth_cmd->add_option("--mode", synth.mode, "feature_only or geometric")->check(CLI::IsMember({"feature_only", "geometric"}))->capture_default_str();
  synth_cmd->add_option("--seed", synth.config.seed, "Generator seed")->capture_default_str();
  synth_cmd->add_option("--images", synth.config.num_images, "Number of images")->capture_default_str();
  synth_cmd->add_option("--candidates", synth.config.candidates_per_image, "Candidates per image")->capture_default_str();
  synth_cmd->add_option("--noise", synth.config.noise_sigma, "Feature noise standard deviation")->capture_default_str();
  synth_cmd->add_option("--prefix", synth.config.id_prefix, "Image id prefix")->capture_default_str();
  synth_cmd->add_option("--dim", synth.config.feature_dim, "Feature dimension (feature_only)")->capture_default_str();
  synth_cmd->add_option("--width", synth.config.image_width, "Image width")->capture_default_str();
  synth_cmd->add_option("--height", synth.config.image_height, "Image height")->capture_default_str();
  synth_cmd->add_option("--min-objects", synth.config.min_objects, "Minimum objects per image (geometric)")->capture_default_str();
  synth_cmd->add_option("--max-objects", synth.config.max_objects, "Maximum objects per image (geometric)")->capture_default_str();
  synth_cmd->add_option("--classes", synth.config.num_classes, "Number of classes (geometric)")->capture_default_str();
  synth_cmd->add_option("--copies", synth.config.copies_per_object, "Jittered copies per object (geometric)")->capture_default_str();
  synth_cmd->add_option("--jitter", synth.config.jitter, "Maximum relative jitter of copies (geometric)")->capture_default_str();

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "Render the text tables of an eval CSV");
  report_cmd->add_option("--in", report.in, "CSV written by eval")->required();
  report_cmd->add_option("--out", report.out, "Text output path (stdout only when omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*label_cmd) return RunLabel(label, args, out, err);
    if (*train_cmd) return RunTrain(train, args, out, err);
    if (*rerank_cmd) return RunRerank(rerank, args, out, err);
    if (*eval_cmd) return RunEval(eval, args, out, err);
    if (*synth_cmd) return RunSynth(synth, args, out, err);
    if (*report_cmd) return RunReport(report, args, out, err);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace prerank
