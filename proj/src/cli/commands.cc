/*
 * Copyright 2026 The MIMRF Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mimrf/cli/commands.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mimrf/ea_optimizer.h"
#include "mimrf/error.h"
#include "mimrf/fusion_eval.h"
#include "mimrf/io.h"
#include "mimrf/mil_data.h"
#include "mimrf/objective.h"
#include "mimrf/parallel.h"
#include "mimrf/source_tools.h"
#include "mimrf/synth.h"

namespace mimrf::cli {

using nlohmann::json;

namespace {

constexpr int kModelFormatVersion = 1;

std::string Real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Resolves one setting: explicit flag, then config key, then default.
template <typename T>
T Resolve(const CLI::Option* flag, const T& flag_value, const json& config,
          const char* key, const T& fallback) {
  if (flag->count() > 0) return flag_value;
  if (config.contains(key)) {
    try {
      return config.at(key).get<T>();
    } catch (const json::exception& e) {
      throw ParseError(std::string("config key '") + key + "': " + e.what());
    }
  }
  return fallback;
}

json LoadConfig(const std::string& path, std::initializer_list<const char*> allowed,
                const std::string& command) {
  if (path.empty()) return json::object();
  json doc = ReadJsonFile(path);
  RejectUnknownKeys(doc, allowed, command + " config '" + path + "'");
  return doc;
}

std::string Require(const std::string& value, const char* name) {
  if (value.empty()) throw ContractError(std::string("missing required setting '") + name + "'");
  return value;
}

// Delimited table: '#' lines are comments, the first remaining line is the
// header, fields are comma-separated without quoting.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::vector<std::string> SplitFields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

Table ReadTable(const std::string& path) {
  std::istringstream in(ReadFile(path));
  Table t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = SplitFields(line);
    if (t.header.empty()) {
      t.header = std::move(fields);
      continue;
    }
    if (fields.size() != t.header.size()) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected " +
                       std::to_string(t.header.size()) + " fields, got " +
                       std::to_string(fields.size()));
    }
    t.rows.push_back(std::move(fields));
  }
  if (t.header.empty()) throw ParseError(path + ": missing header row");
  return t;
}

double ParseReal(const std::string& s, const std::string& where) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ParseError(where + ": '" + s + "' is not a number");
  return v;
}

std::size_t Column(const Table& t, const std::string& name, const std::string& path) {
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (t.header[i] == name) return i;
  }
  throw ParseError(path + ": missing column '" + name + "'");
}

// id -> value from a two-column table; duplicate ids are rejected.
std::vector<std::pair<std::string, double>> ReadIdValues(const std::string& path,
                                                         const std::string& value_column) {
  const Table t = ReadTable(path);
  const std::size_t value_col = Column(t, value_column, path);
  std::vector<std::pair<std::string, double>> out;
  std::set<std::string> seen;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const std::string& id = t.rows[r][0];
    if (!seen.insert(id).second) throw ParseError(path + ": duplicate id '" + id + "'");
    out.emplace_back(id, ParseReal(t.rows[r][value_col], path + " row " + std::to_string(r + 1)));
  }
  return out;
}

TruthMap ReadTruthAnyFormat(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) throw ParseError("cannot open truth file '" + path + "'");
  char first = 0;
  probe >> std::ws;
  probe.get(first);
  if (first == '{') return LoadTruth(path);
  TruthMap truth;
  const Table t = ReadTable(path);
  const std::size_t col = Column(t, "truth", path);
  for (const auto& row : t.rows) {
    if (!truth.emplace(row[0], ParseReal(row[col], path)).second) {
      throw ParseError(path + ": duplicate id '" + row[0] + "'");
    }
  }
  return truth;
}

void ApplyThreads(int threads) {
  if (threads > 0) SetMaxThreads(threads);
}

LoadOptions MakeLoadOptions(double fill, bool has_fill) {
  LoadOptions o;
  if (has_fill) o.empty_candidate_fill = fill;
  return o;
}

// ---------------------------------------------------------------- synth

struct SynthArgs {
  std::string config;
  std::string out_dataset;
  std::string out_truth;
  std::string out_measure;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
};

int RunSynth(const SynthArgs& a, std::ostream& out) {
  json doc = ReadJsonFile(Require(a.config, "config"));
  // Output paths may live in the config next to the scenario keys.
  auto take = [&](const char* key, const std::string& flag) {
    std::string v = flag;
    if (doc.is_object() && doc.contains(key)) {
      if (v.empty()) v = doc.at(key).get<std::string>();
      doc.erase(key);
    }
    return v;
  };
  const std::string out_dataset = Require(take("out_dataset", a.out_dataset), "out_dataset");
  const std::string out_truth = Require(take("out_truth", a.out_truth), "out_truth");
  const std::string out_measure = take("out_measure", a.out_measure);

  SynthConfig config = SynthConfigFromJson(doc);
  if (a.seed_opt->count() > 0) {
    config.seed = a.seed;
  } else if (!doc.contains("seed")) {
    throw ContractError("synth requires a seed (--seed or config key 'seed')");
  }
  Rng rng(config.seed);
  const SynthResult result = SynthesizeDataset(config, rng);
  SaveDataset(result.dataset, out_dataset);
  SaveTruth(result.truth, out_truth);
  if (!out_measure.empty()) SaveMeasure(result.generating_measure, out_measure);
  out << "seed " << config.seed << "\n"
      << "bags " << result.dataset.bags.size() << " (positive "
      << result.dataset.num_positive_bags() << ", negative "
      << result.dataset.num_negative_bags() << ")\n"
      << "instances " << result.dataset.num_instances() << "\n";
  return 0;
}

// ---------------------------------------------------------------- train

struct TrainArgs {
  std::string config;
  std::string dataset;
  std::string out;
  std::string trace;
  std::string breakdown;
  EAParams params;
  int threads = 0;
  double fill = 0.0;
  CLI::Option* dataset_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  CLI::Option* trace_opt = nullptr;
  CLI::Option* breakdown_opt = nullptr;
  CLI::Option* population_opt = nullptr;
  CLI::Option* rate_opt = nullptr;
  CLI::Option* variance_opt = nullptr;
  CLI::Option* threshold_opt = nullptr;
  CLI::Option* iterations_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* threads_opt = nullptr;
  CLI::Option* fill_opt = nullptr;
};

json ModelToJson(const TrainResult& r, const EAParams& params, const ObjectiveBreakdown& br) {
  return {{"format_version", kModelFormatVersion},
          {"num_sources", r.measure.num_sources()},
          {"measure", MeasureToJson(r.measure)},
          {"scaler", ScalerToJson(r.scaler)},
          {"params", ParamsToJson(params)},
          {"training",
           {{"objective", r.objective},
            {"negative_term", br.negative_term},
            {"positive_term", br.positive_term},
            {"initial_objective", r.trace.initial_best},
            {"iterations", r.trace.iterations_run()},
            {"converged", r.trace.converged}}}};
}

int RunTrain(const TrainArgs& a, std::ostream& out) {
  const json cfg = LoadConfig(a.config,
                              {"dataset", "out", "trace", "breakdown", "population_size",
                               "small_scale_rate", "mutation_variance", "stop_threshold",
                               "max_iterations", "seed", "threads", "fill_empty"},
                              "train");
  const std::string dataset_path =
      Require(Resolve(a.dataset_opt, a.dataset, cfg, "dataset", std::string()), "dataset");
  const std::string out_path = Require(Resolve(a.out_opt, a.out, cfg, "out", std::string()), "out");
  const std::string trace_path = Resolve(a.trace_opt, a.trace, cfg, "trace", std::string());
  const std::string breakdown_path =
      Resolve(a.breakdown_opt, a.breakdown, cfg, "breakdown", std::string());
  ApplyThreads(Resolve(a.threads_opt, a.threads, cfg, "threads", 0));

  EAParams p;
  p.population_size = Resolve(a.population_opt, a.params.population_size, cfg, "population_size", p.population_size);
  p.small_scale_rate = Resolve(a.rate_opt, a.params.small_scale_rate, cfg, "small_scale_rate", p.small_scale_rate);
  p.mutation_variance = Resolve(a.variance_opt, a.params.mutation_variance, cfg, "mutation_variance", p.mutation_variance);
  p.stop_threshold = Resolve(a.threshold_opt, a.params.stop_threshold, cfg, "stop_threshold", p.stop_threshold);
  p.max_iterations = Resolve(a.iterations_opt, a.params.max_iterations, cfg, "max_iterations", p.max_iterations);
  bool seeded = a.seed_opt->count() > 0 || cfg.contains("seed");
  p.seed = Resolve(a.seed_opt, a.params.seed, cfg, "seed", std::uint64_t{0});
  if (!seeded) {
    std::random_device rd;
    p.seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
    out << "no seed given; using generated seed " << p.seed << "\n";
  }

  const bool has_fill = a.fill_opt->count() > 0 || cfg.contains("fill_empty");
  const double fill = Resolve(a.fill_opt, a.fill, cfg, "fill_empty", 0.0);
  const Dataset dataset = LoadDataset(dataset_path, MakeLoadOptions(fill, has_fill));

  const TrainResult result = Train(dataset, p);
  const Dataset normalized = Normalize(dataset, result.scaler);
  const ObjectiveBreakdown br = normalized.binary_labels()
                                    ? TotalObjective(result.measure, normalized)
                                    : TotalObjectiveGeneral(result.measure, normalized);

  if (!trace_path.empty()) {
    std::ostringstream csv;
    csv << "# seed=" << p.seed << "\n# initial_best=" << Real(result.trace.initial_best) << "\n"
        << "iteration,best_objective,population_min,population_mean,population_max\n";
    for (const IterationStats& s : result.trace.iterations) {
      csv << s.iteration << "," << Real(s.best) << "," << Real(s.population_min) << ","
          << Real(s.population_mean) << "," << Real(s.population_max) << "\n";
    }
    WriteFileAtomic(trace_path, csv.str());
  }
  if (!breakdown_path.empty()) {
    WriteFileAtomic(breakdown_path, BreakdownToJson(br, normalized).dump(2) + "\n");
  }
  WriteFileAtomic(out_path, ModelToJson(result, p, br).dump(2) + "\n");

  out << "final objective " << Real(result.objective) << "\n"
      << "iterations " << result.trace.iterations_run()
      << (result.trace.converged ? " (converged)" : " (iteration budget reached)") << "\n"
      << "wall time " << std::fixed << std::setprecision(3) << result.trace.wall_seconds
      << " s\n";
  return 0;
}

// ---------------------------------------------------------------- fuse

struct Model {
  FuzzyMeasure measure;
  SourceScaler scaler;
};

Model LoadModel(const std::string& path) {
  const json doc = ReadJsonFile(path);
  RejectUnknownKeys(doc, {"format_version", "num_sources", "measure", "scaler", "params", "training"},
                    "model '" + path + "'");
  try {
    if (doc.at("format_version").get<int>() != kModelFormatVersion) {
      throw ParseError("model '" + path + "': unsupported format_version");
    }
    Model m{MeasureFromJson(doc.at("measure")), ScalerFromJson(doc.at("scaler"))};
    if (m.scaler.num_sources() != m.measure.num_sources() ||
        doc.at("num_sources").get<int>() != m.measure.num_sources()) {
      throw ParseError("model '" + path + "': inconsistent number of sources");
    }
    const auto v = Validate(m.measure);
    if (!v.ok()) throw ParseError("model '" + path + "': invalid measure: " + v.Describe());
    return m;
  } catch (const json::exception& e) {
    throw ParseError("model '" + path + "': " + e.what());
  }
}

struct FuseArgs {
  std::string config;
  std::string model;
  std::string dataset;
  std::string mode = "max";
  std::string out;
  int threads = 0;
  double fill = 0.0;
  CLI::Option* model_opt = nullptr;
  CLI::Option* dataset_opt = nullptr;
  CLI::Option* mode_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  CLI::Option* threads_opt = nullptr;
  CLI::Option* fill_opt = nullptr;
};

int RunFuse(const FuseArgs& a, std::ostream& out) {
  const json cfg = LoadConfig(a.config, {"model", "dataset", "mode", "out", "threads", "fill_empty"},
                              "fuse");
  const std::string model_path = Require(Resolve(a.model_opt, a.model, cfg, "model", std::string()), "model");
  const std::string dataset_path =
      Require(Resolve(a.dataset_opt, a.dataset, cfg, "dataset", std::string()), "dataset");
  const std::string out_path = Require(Resolve(a.out_opt, a.out, cfg, "out", std::string()), "out");
  const SelectionMode mode = ParseSelectionMode(Resolve(a.mode_opt, a.mode, cfg, "mode", std::string("max")));
  ApplyThreads(Resolve(a.threads_opt, a.threads, cfg, "threads", 0));
  const bool has_fill = a.fill_opt->count() > 0 || cfg.contains("fill_empty");
  const double fill = Resolve(a.fill_opt, a.fill, cfg, "fill_empty", 0.0);

  const Model model = LoadModel(model_path);
  const Dataset dataset = LoadDataset(dataset_path, MakeLoadOptions(fill, has_fill));
  if (dataset.num_sources != model.measure.num_sources()) {
    throw ContractError("model '" + model_path + "' has " +
                        std::to_string(model.measure.num_sources()) + " sources but dataset '" +
                        dataset_path + "' has " + std::to_string(dataset.num_sources));
  }
  const std::vector<CandidateSet> instances = Instances(dataset);
  const FusionResult result = Fuse(model.measure, model.scaler, instances, mode);

  std::ostringstream csv;
  csv << "# model=" << model_path << "\n# dataset=" << dataset_path
      << "\n# mode=" << SelectionModeName(mode) << "\n"
      << "instance_id,confidence,selected_candidate\n";
  for (const FusedInstance& f : result.instances) {
    csv << f.instance_id << "," << Real(f.confidence) << "," << f.selected_candidate << "\n";
  }
  WriteFileAtomic(out_path, csv.str());
  out << "fused " << result.instances.size() << " instances (mode "
      << SelectionModeName(mode) << ")\n";
  return 0;
}

// ---------------------------------------------------------------- score

struct ScoreArgs {
  std::string config;
  std::string confidences;
  std::string truth;
  double far_cutoff = 0.0;
  std::string roc;
  std::string report;
  CLI::Option* confidences_opt = nullptr;
  CLI::Option* truth_opt = nullptr;
  CLI::Option* far_opt = nullptr;
  CLI::Option* roc_opt = nullptr;
  CLI::Option* report_opt = nullptr;
};

int RunScore(const ScoreArgs& a, std::ostream& out) {
  const json cfg = LoadConfig(a.config, {"confidences", "truth", "far_cutoff", "roc", "report"}, "score");
  const std::string conf_path =
      Require(Resolve(a.confidences_opt, a.confidences, cfg, "confidences", std::string()), "confidences");
  const std::string truth_path = Require(Resolve(a.truth_opt, a.truth, cfg, "truth", std::string()), "truth");
  const std::string roc_path = Resolve(a.roc_opt, a.roc, cfg, "roc", std::string());
  const std::string report_path = Resolve(a.report_opt, a.report, cfg, "report", std::string());
  std::optional<double> cutoff;
  if (a.far_opt->count() > 0 || cfg.contains("far_cutoff")) {
    cutoff = Resolve(a.far_opt, a.far_cutoff, cfg, "far_cutoff", 0.0);
  }

  const auto conf = ReadIdValues(conf_path, "confidence");
  const TruthMap truth = ReadTruthAnyFormat(truth_path);
  std::vector<double> c, y_raw, y_bin;
  std::set<std::string> used;
  for (const auto& [id, value] : conf) {
    const auto it = truth.find(id);
    if (it == truth.end()) {
      throw ContractError("instance id '" + id + "' from '" + conf_path +
                          "' is missing from truth file '" + truth_path + "'");
    }
    used.insert(id);
    c.push_back(value);
    y_raw.push_back(it->second);
    y_bin.push_back(it->second >= 0.5 ? 1.0 : 0.0);
  }
  for (const auto& [id, value] : truth) {
    if (!used.count(id)) {
      throw ContractError("instance id '" + id + "' from truth file '" + truth_path +
                          "' has no confidence in '" + conf_path + "'");
    }
  }

  ScoreReport report = RocAuc(c, y_bin, cutoff);
  report.rmse = Rmse(c, y_raw);

  out << "AUC " << Real(report.auc) << "\n";
  if (report.auc_far) out << "AUC (FAR <= " << Real(*cutoff) << ") " << Real(*report.auc_far) << "\n";
  out << "RMSE " << Real(*report.rmse) << "\n";

  if (!roc_path.empty()) {
    std::ostringstream csv;
    csv << "# confidences=" << conf_path << "\n# truth=" << truth_path << "\n"
        << "false_positive_rate,true_positive_rate\n";
    for (const RocPoint& p : report.roc) csv << Real(p.fpr) << "," << Real(p.tpr) << "\n";
    WriteFileAtomic(roc_path, csv.str());
  }
  if (!report_path.empty()) WriteFileAtomic(report_path, ScoreReportToJson(report).dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------- confidence

struct ConfidenceArgs {
  std::string input;
  std::string out;
  double peak = 0.0;
  CLI::Option* peak_opt = nullptr;
};

int RunConfidence(const ConfidenceArgs& a, std::ostream& out) {
  const Table t = ReadTable(a.input);
  const std::string column = a.peak_opt->count() > 0 ? "value" : "distance";
  const std::size_t col = Column(t, column, a.input);
  std::vector<double> values;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    values.push_back(ParseReal(t.rows[r][col], a.input + " row " + std::to_string(r + 1)));
  }
  const std::vector<double> distances =
      a.peak_opt->count() > 0 ? PeakDistances(values, a.peak) : values;
  const ConfidenceMap map = DistanceConfidence(distances);
  std::ostringstream csv;
  csv << "# transform=" << map.provenance;
  if (a.peak_opt->count() > 0) csv << " peak=" << Real(a.peak);
  csv << "\n" << t.header[0] << ",confidence\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    csv << t.rows[r][0] << "," << Real(map.values[r]) << "\n";
  }
  WriteFileAtomic(a.out, csv.str());
  out << "wrote " << map.values.size() << " confidences\n";
  return 0;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiple instance multi-resolution fusion with the Choquet integral"};
  app.require_subcommand(1);

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic bag dataset with instance truth");
  synth_cmd->add_option("--config", synth.config, "Scenario config (JSON)")->required();
  synth_cmd->add_option("--out-dataset", synth.out_dataset, "Output bag dataset");
  synth_cmd->add_option("--out-truth", synth.out_truth, "Output instance truth (JSON)");
  synth_cmd->add_option("--out-measure", synth.out_measure, "Output generating measure");
  synth.seed_opt = synth_cmd->add_option("--seed", synth.seed, "Random seed");

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Learn a fuzzy measure from a bag dataset");
  train_cmd->add_option("--config", train.config, "Run config (JSON)");
  train.dataset_opt = train_cmd->add_option("--dataset", train.dataset, "Training bag dataset");
  train.out_opt = train_cmd->add_option("--out", train.out, "Output model file");
  train.trace_opt = train_cmd->add_option("--trace", train.trace, "Per-iteration objective CSV");
  train.breakdown_opt = train_cmd->add_option("--breakdown", train.breakdown,
                                              "Objective breakdown with selections (JSON)");
  train.population_opt = train_cmd->add_option("--population", train.params.population_size, "Population size");
  train.rate_opt = train_cmd->add_option("--small-scale-rate", train.params.small_scale_rate,
                                         "Probability of single-element mutation");
  train.variance_opt = train_cmd->add_option("--variance", train.params.mutation_variance, "Mutation variance");
  train.threshold_opt = train_cmd->add_option("--stop-threshold", train.params.stop_threshold,
                                              "Objective change that stops the search");
  train.iterations_opt = train_cmd->add_option("--max-iterations", train.params.max_iterations,
                                               "Iteration budget");
  train.seed_opt = train_cmd->add_option("--seed", train.params.seed, "Random seed");
  train.threads_opt = train_cmd->add_option("--threads", train.threads, "Worker thread cap");
  train.fill_opt = train_cmd->add_option("--fill-empty", train.fill,
                                         "Fill empty candidate sets with this constant");

  FuseArgs fuse;
  auto* fuse_cmd = app.add_subcommand("fuse", "Fuse every instance of a dataset with a trained model");
  fuse_cmd->add_option("--config", fuse.config, "Run config (JSON)");
  fuse.model_opt = fuse_cmd->add_option("--model", fuse.model, "Trained model file");
  fuse.dataset_opt = fuse_cmd->add_option("--dataset", fuse.dataset, "Bag dataset to fuse");
  fuse.mode_opt = fuse_cmd->add_option("--mode", fuse.mode, "Candidate aggregation: max, min or mean");
  fuse.out_opt = fuse_cmd->add_option("--out", fuse.out, "Output confidence CSV");
  fuse.threads_opt = fuse_cmd->add_option("--threads", fuse.threads, "Worker thread cap");
  fuse.fill_opt = fuse_cmd->add_option("--fill-empty", fuse.fill,
                                       "Fill empty candidate sets with this constant");

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "Score confidences against instance truth");
  score_cmd->add_option("--config", score.config, "Run config (JSON)");
  score.confidences_opt = score_cmd->add_option("--confidences", score.confidences, "Confidence CSV");
  score.truth_opt = score_cmd->add_option("--truth", score.truth, "Truth file (JSON object or CSV)");
  score.far_opt = score_cmd->add_option("--far-cutoff", score.far_cutoff,
                                        "Also report the ROC area for FPR up to this value");
  score.roc_opt = score_cmd->add_option("--roc", score.roc, "Output ROC points CSV");
  score.report_opt = score_cmd->add_option("--report", score.report, "Output score report (JSON)");

  ConfidenceArgs conf;
  auto* conf_cmd = app.add_subcommand("confidence", "Map distances (or values and a peak) to exp(-d/2)");
  conf_cmd->add_option("--input", conf.input, "CSV with id and 'distance' (or 'value') columns")->required();
  conf_cmd->add_option("--out", conf.out, "Output CSV")->required();
  conf.peak_opt = conf_cmd->add_option("--peak", conf.peak, "Reference value; distances are |value - peak|");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*synth_cmd) return RunSynth(synth, out);
    if (*train_cmd) return RunTrain(train, out);
    if (*fuse_cmd) return RunFuse(fuse, out);
    if (*score_cmd) return RunScore(score, out);
    if (*conf_cmd) return RunConfidence(conf, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace mimrf::cli
