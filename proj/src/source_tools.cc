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

#include "mimrf/source_tools.h"

#include <cmath>
#include <sstream>

#include "mimrf/error.h"

namespace mimrf {

ConfidenceMap DistanceConfidence(std::span<const double> distances) {
  ConfidenceMap out;
  out.values.reserve(distances.size());
  for (std::size_t i = 0; i < distances.size(); ++i) {
    const double d = distances[i];
    if (!(d >= 0.0) || !std::isfinite(d)) {
      std::ostringstream msg;
      msg << "DistanceConfidence: distance " << d << " at point " << i
          << " must be finite and nonnegative";
      throw ContractError(msg.str());
    }
    out.values.push_back(std::exp(-d / 2.0));
  }
  out.provenance = "exp(-d/2)";
  return out;
}

std::vector<double> PeakDistances(std::span<const double> values, double peak) {
  if (!std::isfinite(peak)) throw ContractError("PeakDistances: peak must be finite");
  std::vector<double> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw ContractError("PeakDistances: non-finite value at point " + std::to_string(i));
    }
    out.push_back(std::abs(values[i] - peak));
  }
  return out;
}

}  // namespace mimrf
