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

#include "mimrf/fusion_eval.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "mimrf/error.h"

namespace mimrf {

namespace {

FusedInstance FuseOne(const FuzzyMeasure& g, const SourceScaler& scaler,
                      const CandidateSet& set, SelectionMode mode) {
  std::vector<double> x(set.dim());
  FusedInstance out;
  out.instance_id = set.instance_id();
  double sum = 0.0;
  double best_max = 0.0;
  std::size_t arg_max = 0;
  double best_min = 0.0;
  std::size_t arg_min = 0;
  for (std::size_t c = 0; c < set.size(); ++c) {
    const auto row = set.candidate(c);
    std::copy(row.begin(), row.end(), x.begin());
    scaler.ApplyInPlace(x);
    const double ci = internal::ChoquetUnchecked(g, x);
    sum += ci;
    if (c == 0 || ci > best_max) {
      best_max = ci;
      arg_max = c;
    }
    if (c == 0 || ci < best_min) {
      best_min = ci;
      arg_min = c;
    }
  }
  switch (mode) {
    case SelectionMode::kMax:
      out.confidence = best_max;
      out.selected_candidate = arg_max;
      break;
    case SelectionMode::kMin:
      out.confidence = best_min;
      out.selected_candidate = arg_min;
      break;
    case SelectionMode::kMean:
      out.confidence = std::clamp(sum / static_cast<double>(set.size()), 0.0, 1.0);
      out.selected_candidate = arg_max;
      break;
  }
  return out;
}

void CheckFuseInputs(const FuzzyMeasure& g, const SourceScaler& scaler,
                     std::span<const CandidateSet> instances) {
  if (scaler.num_sources() != g.num_sources()) {
    throw ContractError("Fuse: scaler has " + std::to_string(scaler.num_sources()) +
                        " sources, measure has " + std::to_string(g.num_sources()));
  }
  for (const CandidateSet& set : instances) {
    if (set.dim() != g.num_sources()) {
      throw ContractError("Fuse: instance '" + set.instance_id() + "' has " +
                          std::to_string(set.dim()) + " sources, measure has " +
                          std::to_string(g.num_sources()));
    }
  }
}

void CheckAligned(std::span<const double> a, std::span<const double> b, const char* where) {
  if (a.size() != b.size()) {
    std::ostringstream msg;
    msg << where << ": " << a.size() << " confidences but " << b.size() << " truth values";
    throw ContractError(msg.str());
  }
}

double Trapezoid(const RocPoint& a, const RocPoint& b) {
  return (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2.0;
}

}  // namespace

SelectionMode ParseSelectionMode(const std::string& name) {
  if (name == "max") return SelectionMode::kMax;
  if (name == "min") return SelectionMode::kMin;
  if (name == "mean") return SelectionMode::kMean;
  throw ContractError("unknown selection mode '" + name + "' (expected max, min or mean)");
}

std::string SelectionModeName(SelectionMode mode) {
  switch (mode) {
    case SelectionMode::kMax: return "max";
    case SelectionMode::kMin: return "min";
    case SelectionMode::kMean: return "mean";
  }
  return "max";
}

FusionResult Fuse(const FuzzyMeasure& g, const SourceScaler& scaler,
                  std::span<const CandidateSet> instances, SelectionMode mode) {
  CheckFuseInputs(g, scaler, instances);
  FusionResult result;
  result.instances.resize(instances.size());
  const long n = static_cast<long>(instances.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    result.instances[i] = FuseOne(g, scaler, instances[i], mode);
  }
  return result;
}

namespace serial {

FusionResult Fuse(const FuzzyMeasure& g, const SourceScaler& scaler,
                  std::span<const CandidateSet> instances, SelectionMode mode) {
  CheckFuseInputs(g, scaler, instances);
  FusionResult result;
  result.instances.reserve(instances.size());
  for (const CandidateSet& set : instances) result.instances.push_back(FuseOne(g, scaler, set, mode));
  return result;
}

}  // namespace serial

double TruncatedArea(std::span<const RocPoint> roc, double cutoff) {
  if (!(cutoff > 0.0)) throw ContractError("FAR cutoff must be positive");
  double area = 0.0;
  for (std::size_t i = 1; i < roc.size(); ++i) {
    const RocPoint& a = roc[i - 1];
    const RocPoint& b = roc[i];
    if (a.fpr >= cutoff) break;
    if (b.fpr <= cutoff) {
      area += Trapezoid(a, b);
    } else {
      const double t = (cutoff - a.fpr) / (b.fpr - a.fpr);
      area += Trapezoid(a, {cutoff, a.tpr + t * (b.tpr - a.tpr)});
    }
  }
  return area;
}

ScoreReport RocAuc(std::span<const double> conf, std::span<const double> truth,
                   std::optional<double> far_cutoff) {
  CheckAligned(conf, truth, "RocAuc");
  std::size_t positives = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] != 0.0 && truth[i] != 1.0) {
      throw ContractError("RocAuc: truth values must be 0 or 1");
    }
    if (!std::isfinite(conf[i])) throw ContractError("RocAuc: non-finite confidence");
    positives += truth[i] == 1.0;
  }
  const std::size_t negatives = truth.size() - positives;
  if (positives == 0 || negatives == 0) {
    throw ContractError("RocAuc: truth must contain both positive and negative instances");
  }

  std::vector<std::size_t> order(conf.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return conf[a] > conf[b]; });

  ScoreReport report;
  // Threshold +inf: nothing detected.
  report.roc.push_back({0.0, 0.0});
  std::size_t tp = 0, fp = 0;
  for (std::size_t i = 0; i < order.size();) {
    const double threshold = conf[order[i]];
    while (i < order.size() && conf[order[i]] == threshold) {
      (truth[order[i]] == 1.0 ? tp : fp)++;
      ++i;
    }
    report.roc.push_back({static_cast<double>(fp) / negatives,
                          static_cast<double>(tp) / positives});
  }
  // The last group always ends at (1, 1); the -inf threshold adds nothing new.
  for (std::size_t i = 1; i < report.roc.size(); ++i) {
    report.auc += Trapezoid(report.roc[i - 1], report.roc[i]);
  }
  if (far_cutoff) {
    report.far_cutoff = far_cutoff;
    report.auc_far = TruncatedArea(report.roc, *far_cutoff);
  }
  return report;
}

double Rmse(std::span<const double> conf, std::span<const double> truth) {
  CheckAligned(conf, truth, "Rmse");
  if (conf.empty()) throw ContractError("Rmse: empty input");
  double sum = 0.0;
  for (std::size_t i = 0; i < conf.size(); ++i) {
    const double d = conf[i] - truth[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(conf.size()));
}

std::vector<bool> SelectionDiff(const FusionResult& a, const FusionResult& b) {
  if (a.instances.size() != b.instances.size()) {
    throw ContractError("SelectionDiff: results cover " + std::to_string(a.instances.size()) +
                        " and " + std::to_string(b.instances.size()) + " instances");
  }
  std::unordered_map<std::string, std::size_t> reference;
  for (const FusedInstance& f : b.instances) reference.emplace(f.instance_id, f.selected_candidate);
  std::vector<bool> mask;
  mask.reserve(a.instances.size());
  for (const FusedInstance& f : a.instances) {
    const auto it = reference.find(f.instance_id);
    if (it == reference.end()) {
      throw ContractError("SelectionDiff: instance '" + f.instance_id +
                          "' is missing from the reference selections");
    }
    mask.push_back(it->second != f.selected_candidate);
  }
  return mask;
}

ScoreReport MaskedRocAuc(std::span<const double> conf, std::span<const double> truth,
                         const std::vector<bool>& mask, std::optional<double> far_cutoff) {
  CheckAligned(conf, truth, "MaskedRocAuc");
  if (mask.size() != conf.size()) throw ContractError("MaskedRocAuc: mask length differs");
  std::vector<double> c, t;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (!mask[i]) continue;
    c.push_back(conf[i]);
    t.push_back(truth[i]);
  }
  ScoreReport report = RocAuc(c, t, far_cutoff);
  report.rmse = Rmse(c, t);
  return report;
}

nlohmann::json ScoreReportToJson(const ScoreReport& r) {
  nlohmann::json roc = nlohmann::json::array();
  for (const RocPoint& p : r.roc) roc.push_back({p.fpr, p.tpr});
  nlohmann::json doc = {{"auc", r.auc}, {"roc", std::move(roc)}};
  if (r.far_cutoff) doc["far_cutoff"] = *r.far_cutoff;
  if (r.auc_far) doc["auc_far"] = *r.auc_far;
  if (r.rmse) doc["rmse"] = *r.rmse;
  return doc;
}

}  // namespace mimrf
