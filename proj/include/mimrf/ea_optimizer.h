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

#ifndef MIMRF_EA_OPTIMIZER_H_
#define MIMRF_EA_OPTIMIZER_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "json.hpp"
#include "mimrf/choquet.h"
#include "mimrf/fuzzy_measure.h"
#include "mimrf/mil_data.h"

namespace mimrf {

struct EAParams {
  int population_size = 30;
  // Probability of a small-scale (single element) mutation.
  double small_scale_rate = 0.8;
  double mutation_variance = 0.1;
  // Stop once the best objective is within this distance of the population
  // mean objective.
  double stop_threshold = 1e-4;
  int max_iterations = 5000;
  std::uint64_t seed = 0;

  void Validate() const;
  bool operator==(const EAParams&) const = default;
};

// Share of the pooled 2P parents + children kept by rank each iteration.
inline constexpr double kEliteFraction = 0.25;

nlohmann::json ParamsToJson(const EAParams& params);
// Missing keys keep their defaults; unknown keys are rejected.
EAParams ParamsFromJson(const nlohmann::json& doc, EAParams base = {});

struct IterationStats {
  int iteration = 0;
  double best = 0.0;  // J* after this iteration
  double population_min = 0.0;
  double population_mean = 0.0;
  double population_max = 0.0;
};

struct TrainingTrace {
  double initial_best = 0.0;
  std::vector<IterationStats> iterations;
  bool converged = false;  // stopped by the threshold rather than the budget
  double wall_seconds = 0.0;

  int iterations_run() const { return static_cast<int>(iterations.size()); }
};

struct TrainResult {
  FuzzyMeasure measure;
  SourceScaler scaler;
  double objective = 0.0;
  TrainingTrace trace;
};

// Called once with iteration 0 for the initial population and then after
// each selection step.
using PopulationObserver = std::function<void(
    int iteration, std::span<const FuzzyMeasure> population, std::span<const double> objectives)>;

// Selection probabilities p_i ∝ (max J - J_i + 1e-6); uniform when all
// objectives are equal.
std::vector<double> FitnessFromObjective(std::span<const double> objectives);

// Evolutionary search for the measure minimizing the two-level min/max
// objective. Fits a scaler when the dataset has none and normalizes before
// searching. Deterministic for a fixed seed regardless of thread count: each
// child draws from its own stream derived from (seed, iteration, index).
TrainResult Train(const Dataset& dataset, const EAParams& params,
                  const PopulationObserver& observer = {});

}  // namespace mimrf

#endif  // MIMRF_EA_OPTIMIZER_H_
