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

#ifndef MIMRF_SYNTH_H_
#define MIMRF_SYNTH_H_

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "mimrf/fuzzy_measure.h"
#include "mimrf/mil_data.h"
#include "mimrf/rng.h"

namespace mimrf {

// Synthetic multi-resolution MIL scenario.
struct SynthConfig {
  int num_sources = 3;
  int positive_bags = 10;
  int negative_bags = 10;
  int instances_per_bag = 5;
  int candidates_per_instance = 3;
  // Probability that an instance inside a positive bag is a target. Every
  // positive bag gets at least one target regardless.
  double target_fraction = 0.3;
  // Fraction of each instance's candidates replaced by uniform noise
  // (rounded, and at most candidates_per_instance - 1).
  double corruption_rate = 0.0;
  // Maximum |C_g(correct candidate) - truth|.
  double noise = 0.0;
  // Real-valued instance truth instead of 0/1.
  bool real_valued_truth = false;
  // "random", "max", "min", "mean", or "explicit" (uses `measure`). Random
  // measures have elements below 0.3 set to 0 and above 0.7 set to 1.
  std::string measure_kind = "random";
  std::optional<FuzzyMeasure> measure;
  std::uint64_t seed = 0;

  void Validate() const;
};

// Reads a config document. Unknown keys are rejected. `measure` may be an
// array of 2^m - 1 values or one of the kind names above.
SynthConfig SynthConfigFromJson(const nlohmann::json& doc);
nlohmann::json SynthConfigToJson(const SynthConfig& config);

struct SynthResult {
  Dataset dataset;
  TruthMap truth;
  FuzzyMeasure generating_measure;
};

// Builds a dataset whose bag labels follow the MIL rule and whose correct
// candidates reach their instance truth under the generating measure to
// within `noise`. With zero noise the hit is exact.
SynthResult SynthesizeDataset(const SynthConfig& config, Rng& rng);

// Source vector whose Choquet integral under `measure` equals `target`.
// Targets 0 and 1 are met exactly; intermediate targets by bisection.
std::vector<double> VectorWithIntegral(const FuzzyMeasure& measure,
                                       double target, Rng& rng);

}  // namespace mimrf

#endif  // MIMRF_SYNTH_H_
