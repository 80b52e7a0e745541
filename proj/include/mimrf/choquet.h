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

#ifndef MIMRF_CHOQUET_H_
#define MIMRF_CHOQUET_H_

#include <span>
#include <vector>

#include "mimrf/fuzzy_measure.h"

namespace mimrf {

// Discrete Choquet integral of `x` (one normalized value per source) with
// respect to `measure`. Sources are sorted by descending value, ties broken
// by ascending source index. Throws ContractError on a dimension mismatch or
// an entry outside [0, 1].
double ChoquetIntegral(const FuzzyMeasure& measure, std::span<const double> x);

namespace internal {
// Same as ChoquetIntegral without input checks. For callers that validated
// their inputs once up front.
double ChoquetUnchecked(const FuzzyMeasure& measure, std::span<const double> x);
}  // namespace internal

// Per-source min-max normalization learned from training data.
class SourceScaler {
 public:
  SourceScaler() = default;
  SourceScaler(std::vector<double> min, std::vector<double> max);

  int num_sources() const { return static_cast<int>(min_.size()); }
  const std::vector<double>& min() const { return min_; }
  const std::vector<double>& max() const { return max_; }
  bool degenerate(int source) const { return min_[source] == max_[source]; }

  // (raw - min) / (max - min) clipped to [0, 1]; a constant source maps to 0.5.
  double Apply(int source, double raw) const;
  void ApplyInPlace(std::span<double> x) const;

  bool operator==(const SourceScaler&) const = default;

 private:
  std::vector<double> min_;
  std::vector<double> max_;
};

// One collection of training values per source.
SourceScaler FitScaler(const std::vector<std::vector<double>>& per_source);

}  // namespace mimrf

#endif  // MIMRF_CHOQUET_H_
