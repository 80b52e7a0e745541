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

#include "mimrf/choquet.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "mimrf/error.h"

namespace mimrf {

namespace internal {

double ChoquetUnchecked(const FuzzyMeasure& g, std::span<const double> x) {
  const int m = g.num_sources();
  std::array<int, kMaxSources> order;
  // Insertion sort, descending by value; a strict comparison keeps equal
  // values in ascending source order.
  for (int k = 0; k < m; ++k) {
    int j = k;
    while (j > 0 && x[order[j - 1]] < x[k]) {
      order[j] = order[j - 1];
      --j;
    }
    order[j] = k;
  }
  double sum = 0.0;
  SubsetMask top = 0;
  for (int k = 0; k < m; ++k) {
    top |= SubsetMask{1} << order[k];
    const double next = k + 1 < m ? x[order[k + 1]] : 0.0;
    sum += (x[order[k]] - next) * g[top];
  }
  return sum;
}

}  // namespace internal

double ChoquetIntegral(const FuzzyMeasure& g, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.num_sources()) {
    std::ostringstream msg;
    msg << "ChoquetIntegral: input has " << x.size() << " entries, measure has "
        << g.num_sources() << " sources";
    throw ContractError(msg.str());
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(x[k] >= 0.0 && x[k] <= 1.0)) {
      std::ostringstream msg;
      msg << "ChoquetIntegral: source " << k + 1 << " value " << x[k]
          << " is outside [0, 1]; normalize inputs first";
      throw ContractError(msg.str());
    }
  }
  return internal::ChoquetUnchecked(g, x);
}

SourceScaler::SourceScaler(std::vector<double> min, std::vector<double> max)
    : min_(std::move(min)), max_(std::move(max)) {
  if (min_.size() != max_.size()) {
    throw ContractError("SourceScaler: min and max arrays differ in length");
  }
  for (std::size_t k = 0; k < min_.size(); ++k) {
    if (!(min_[k] <= max_[k]) || !std::isfinite(min_[k]) || !std::isfinite(max_[k])) {
      std::ostringstream msg;
      msg << "SourceScaler: source " << k + 1 << " has min " << min_[k]
          << " and max " << max_[k];
      throw ContractError(msg.str());
    }
  }
}

double SourceScaler::Apply(int source, double raw) const {
  const double lo = min_[source];
  const double hi = max_[source];
  if (lo == hi) return 0.5;
  return std::clamp((raw - lo) / (hi - lo), 0.0, 1.0);
}

void SourceScaler::ApplyInPlace(std::span<double> x) const {
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = Apply(static_cast<int>(k), x[k]);
}

SourceScaler FitScaler(const std::vector<std::vector<double>>& per_source) {
  if (per_source.empty()) throw ContractError("FitScaler: no sources given");
  std::vector<double> lo, hi;
  for (std::size_t k = 0; k < per_source.size(); ++k) {
    const auto& values = per_source[k];
    if (values.empty()) {
      throw ContractError("FitScaler: source " + std::to_string(k + 1) +
                          " has no training values");
    }
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    lo.push_back(*mn);
    hi.push_back(*mx);
  }
  return SourceScaler(std::move(lo), std::move(hi));
}

}  // namespace mimrf
