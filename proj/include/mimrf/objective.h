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

#ifndef MIMRF_OBJECTIVE_H_
#define MIMRF_OBJECTIVE_H_

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "mimrf/fuzzy_measure.h"
#include "mimrf/mil_data.h"

namespace mimrf {

// An extremum together with the index that attains it (lowest index on ties).
struct Selection {
  double value = 0.0;
  std::size_t index = 0;
};

// Smallest Choquet integral over the candidates of one instance.
Selection InstanceCiNegative(const FuzzyMeasure& measure, const CandidateSet& set);
// Largest Choquet integral over the candidates of one instance.
Selection InstanceCiPositive(const FuzzyMeasure& measure, const CandidateSet& set);

// max over instances of (min-candidate CI)^2. Requires label 0.
Selection BagObjectiveNegative(const FuzzyMeasure& measure, const Bag& bag);
// min over instances of (max-candidate CI - 1)^2. Requires label 1.
Selection BagObjectivePositive(const FuzzyMeasure& measure, const Bag& bag);

struct BagTerm {
  double target = 0.0;
  // Bags with target < 0.5 use min-candidate / max-instance aggregation.
  bool negative_style = true;
  double contribution = 0.0;
  double selected_ci = 0.0;
  std::size_t selected_instance = 0;
  // One entry per instance of the bag.
  std::vector<std::size_t> selected_candidates;
};

struct ObjectiveBreakdown {
  double total = 0.0;
  double negative_term = 0.0;
  double positive_term = 0.0;
  std::vector<BagTerm> bags;
};

// Full objective for 0/1 bag labels. Requires normalized candidates and at
// least one bag of each label. Bags are evaluated in parallel and summed in
// bag order, so the result does not depend on the thread count.
ObjectiveBreakdown TotalObjective(const FuzzyMeasure& measure, const Dataset& dataset);

// Real-valued targets d in [0, 1]: each bag contributes (CI - d)^2 with
// negative-style aggregation when d < 0.5 and positive-style otherwise.
ObjectiveBreakdown TotalObjectiveGeneral(const FuzzyMeasure& measure,
                                         const Dataset& dataset);

// Single-threaded reference implementations of the two kernels above.
namespace serial {
ObjectiveBreakdown TotalObjective(const FuzzyMeasure& measure, const Dataset& dataset);
ObjectiveBreakdown TotalObjectiveGeneral(const FuzzyMeasure& measure,
                                         const Dataset& dataset);
}  // namespace serial

namespace internal {
// Objective value only, no breakdown and no input checks. Used in the
// optimizer's inner loop after the dataset has been checked once.
double ObjectiveValue(const FuzzyMeasure& measure, const Dataset& dataset);
}  // namespace internal

// Throws ContractError unless every candidate value lies in [0, 1].
void RequireNormalized(const Dataset& dataset);

nlohmann::json BreakdownToJson(const ObjectiveBreakdown& breakdown, const Dataset& dataset);

}  // namespace mimrf

#endif  // MIMRF_OBJECTIVE_H_
