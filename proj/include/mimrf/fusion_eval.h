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

#ifndef MIMRF_FUSION_EVAL_H_
#define MIMRF_FUSION_EVAL_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "mimrf/choquet.h"
#include "mimrf/fuzzy_measure.h"
#include "mimrf/mil_data.h"

namespace mimrf {

// How an unlabeled instance's candidate integrals are combined at test time.
enum class SelectionMode { kMax, kMin, kMean };

SelectionMode ParseSelectionMode(const std::string& name);
std::string SelectionModeName(SelectionMode mode);

struct FusedInstance {
  std::string instance_id;
  double confidence = 0.0;
  // Candidate attaining the confidence; the argmax in mean mode.
  std::size_t selected_candidate = 0;
};

struct FusionResult {
  std::vector<FusedInstance> instances;
};

// Normalizes every candidate with `scaler` and fuses it with the Choquet
// integral under `measure`. Instances are processed in parallel; the output
// keeps input order.
FusionResult Fuse(const FuzzyMeasure& measure, const SourceScaler& scaler,
                  std::span<const CandidateSet> instances,
                  SelectionMode mode = SelectionMode::kMax);

namespace serial {
FusionResult Fuse(const FuzzyMeasure& measure, const SourceScaler& scaler,
                  std::span<const CandidateSet> instances,
                  SelectionMode mode = SelectionMode::kMax);
}  // namespace serial

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
};

struct ScoreReport {
  std::vector<RocPoint> roc;
  double auc = 0.0;
  std::optional<double> far_cutoff;
  // Raw area under the ROC curve for FPR <= far_cutoff (not rescaled).
  std::optional<double> auc_far;
  std::optional<double> rmse;
};

// ROC from a threshold sweep over the distinct confidence values (tied
// confidences move together), AUC by the trapezoid rule. `truth` must be
// 0 / 1 with both classes present.
ScoreReport RocAuc(std::span<const double> confidences, std::span<const double> truth,
                   std::optional<double> far_cutoff = std::nullopt);

// Trapezoid area under `roc` for FPR in [0, cutoff].
double TruncatedArea(std::span<const RocPoint> roc, double cutoff);

double Rmse(std::span<const double> confidences, std::span<const double> truth);

// true where the two results selected different candidates. Both results
// must cover the same instance ids; the mask follows the order of `a`.
std::vector<bool> SelectionDiff(const FusionResult& a, const FusionResult& b);

// Scores only the entries where `mask` is true.
ScoreReport MaskedRocAuc(std::span<const double> confidences, std::span<const double> truth,
                         const std::vector<bool>& mask,
                         std::optional<double> far_cutoff = std::nullopt);

nlohmann::json ScoreReportToJson(const ScoreReport& report);

}  // namespace mimrf

#endif  // MIMRF_FUSION_EVAL_H_
