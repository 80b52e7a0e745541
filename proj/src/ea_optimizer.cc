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

#include "mimrf/ea_optimizer.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mimrf/error.h"
#include "mimrf/io.h"
#include "mimrf/objective.h"

namespace mimrf {

using nlohmann::json;

namespace {

constexpr double kFitnessFloor = 1e-6;
// Stream ids outside the range used for per-child streams.
constexpr std::uint64_t kSelectionStream = ~std::uint64_t{0};

void EvaluateAll(std::span<const FuzzyMeasure> measures, const Dataset& d,
                 std::span<double> out) {
  const long n = static_cast<long>(measures.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long p = 0; p < n; ++p) out[p] = internal::ObjectiveValue(measures[p], d);
}

void CheckFinite(std::span<const double> objectives, int iteration) {
  for (std::size_t i = 0; i < objectives.size(); ++i) {
    if (!std::isfinite(objectives[i])) {
      std::ostringstream msg;
      msg << "Train: non-finite objective " << objectives[i] << " for measure " << i
          << " at iteration " << iteration;
      throw InternalError(msg.str());
    }
  }
}

IterationStats Stats(int iteration, double best, std::span<const double> objectives) {
  IterationStats s;
  s.iteration = iteration;
  s.best = best;
  const auto [mn, mx] = std::minmax_element(objectives.begin(), objectives.end());
  s.population_min = *mn;
  s.population_max = *mx;
  s.population_mean = std::accumulate(objectives.begin(), objectives.end(), 0.0) /
                      static_cast<double>(objectives.size());
  return s;
}

// Draws `count` distinct indices from `weights` without replacement.
std::vector<std::size_t> MultinomialWithoutReplacement(std::vector<double> weights,
                                                       std::size_t count, Rng& rng) {
  std::vector<std::size_t> picked;
  picked.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    const double u = rng.Uniform() * total;
    double acc = 0.0;
    std::size_t chosen = weights.size();
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] <= 0.0) continue;
      acc += weights[i];
      chosen = i;
      if (u < acc) break;
    }
    picked.push_back(chosen);
    weights[chosen] = 0.0;
  }
  return picked;
}

}  // namespace

void EAParams::Validate() const {
  auto fail = [](const std::string& what) { throw ContractError("EA params: " + what); };
  if (population_size < 2) fail("population_size must be at least 2");
  if (!(small_scale_rate >= 0.0 && small_scale_rate <= 1.0)) fail("small_scale_rate must lie in [0, 1]");
  if (!(mutation_variance > 0.0) || !std::isfinite(mutation_variance)) fail("mutation_variance must be positive");
  if (!(stop_threshold > 0.0) || !std::isfinite(stop_threshold)) fail("stop_threshold must be positive");
  if (max_iterations < 1) fail("max_iterations must be positive");
}

json ParamsToJson(const EAParams& p) {
  return {{"population_size", p.population_size},
          {"small_scale_rate", p.small_scale_rate},
          {"mutation_variance", p.mutation_variance},
          {"stop_threshold", p.stop_threshold},
          {"max_iterations", p.max_iterations},
          {"seed", p.seed}};
}

EAParams ParamsFromJson(const json& doc, EAParams p) {
  RejectUnknownKeys(doc,
                    {"population_size", "small_scale_rate", "mutation_variance",
                     "stop_threshold", "max_iterations", "seed"},
                    "EA params");
  try {
    p.population_size = doc.value("population_size", p.population_size);
    p.small_scale_rate = doc.value("small_scale_rate", p.small_scale_rate);
    p.mutation_variance = doc.value("mutation_variance", p.mutation_variance);
    p.stop_threshold = doc.value("stop_threshold", p.stop_threshold);
    p.max_iterations = doc.value("max_iterations", p.max_iterations);
    p.seed = doc.value("seed", p.seed);
  } catch (const json::exception& e) {
    throw ParseError(std::string("EA params: ") + e.what());
  }
  return p;
}

std::vector<double> FitnessFromObjective(std::span<const double> objectives) {
  if (objectives.empty()) throw ContractError("FitnessFromObjective: no objectives");
  double worst = objectives[0];
  for (double j : objectives) {
    if (!std::isfinite(j)) throw ContractError("FitnessFromObjective: non-finite objective");
    worst = std::max(worst, j);
  }
  std::vector<double> p(objectives.size());
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = worst - objectives[i] + kFitnessFloor;
    total += p[i];
  }
  for (double& v : p) v /= total;
  return p;
}

TrainResult Train(const Dataset& dataset, const EAParams& params,
                  const PopulationObserver& observer) {
  params.Validate();
  const auto start = std::chrono::steady_clock::now();
  CheckDataset(dataset);
  RequireBothClasses(dataset);

  const SourceScaler scaler = dataset.scaler ? *dataset.scaler : FitScaler(dataset);
  const Dataset data = dataset.normalized ? dataset : Normalize(dataset, scaler);
  RequireNormalized(data);

  const int m = data.num_sources;
  const std::size_t pop_size = params.population_size;
  const std::size_t elites = pop_size / 2;

  std::vector<FuzzyMeasure> population;
  population.reserve(pop_size);
  for (std::size_t p = 0; p < pop_size; ++p) {
    Rng rng = Rng::Derive(params.seed, 0, p);
    population.push_back(RandomMonotone(m, rng));
  }
  std::vector<double> objectives(pop_size);
  EvaluateAll(population, data, objectives);
  CheckFinite(objectives, 0);
  if (observer) observer(0, population, objectives);

  std::size_t best_index =
      std::min_element(objectives.begin(), objectives.end()) - objectives.begin();
  FuzzyMeasure best = population[best_index];
  double best_j = objectives[best_index];

  TrainingTrace trace;
  trace.initial_best = best_j;

  std::vector<FuzzyMeasure> pool;
  std::vector<double> pool_j(2 * pop_size);
  for (int t = 1; t <= params.max_iterations; ++t) {
    // Mutation: child p is a mutated copy of parent p.
    pool = population;
    pool.resize(2 * pop_size, population[0]);
    const long n = static_cast<long>(pop_size);
#pragma omp parallel for schedule(static)
    for (long p = 0; p < n; ++p) {
      Rng rng = Rng::Derive(params.seed, static_cast<std::uint64_t>(t), p);
      pool[pop_size + p] =
          Mutate(population[p], params.small_scale_rate, params.mutation_variance, rng);
    }
    std::copy(objectives.begin(), objectives.end(), pool_j.begin());
    EvaluateAll(std::span(pool).subspan(pop_size), data,
                std::span(pool_j).subspan(pop_size));
    CheckFinite(pool_j, t);

    // Selection: the best quarter of the pool by rank, the rest drawn by
    // fitness from the remaining three quarters.
    std::vector<std::size_t> rank(pool.size());
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    std::stable_sort(rank.begin(), rank.end(),
                     [&](std::size_t a, std::size_t b) { return pool_j[a] < pool_j[b]; });
    std::vector<std::size_t> chosen(rank.begin(), rank.begin() + elites);
    std::vector<std::size_t> rest(rank.begin() + elites, rank.end());
    std::vector<double> rest_j(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) rest_j[i] = pool_j[rest[i]];
    Rng select_rng = Rng::Derive(params.seed, static_cast<std::uint64_t>(t), kSelectionStream);
    for (std::size_t i :
         MultinomialWithoutReplacement(FitnessFromObjective(rest_j), pop_size - elites, select_rng)) {
      chosen.push_back(rest[i]);
    }

    std::vector<FuzzyMeasure> next;
    next.reserve(pop_size);
    for (std::size_t i = 0; i < pop_size; ++i) {
      next.push_back(pool[chosen[i]]);
      objectives[i] = pool_j[chosen[i]];
    }
    population = std::move(next);
    if (observer) observer(t, population, objectives);

    const double current_min = objectives[0];
    if (current_min < best_j) {
      best_j = current_min;
      best = population[0];
    }
    const IterationStats stats = Stats(t, best_j, objectives);
    trace.iterations.push_back(stats);
    // Converged once the whole selected population sits within the
    // threshold of the incumbent.
    if (std::abs(best_j - stats.population_mean) <= params.stop_threshold) {
      trace.converged = true;
      break;
    }
  }

  trace.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return TrainResult{std::move(best), scaler, best_j, std::move(trace)};
}

}  // namespace mimrf
