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

#ifndef MIMRF_SOURCE_TOOLS_H_
#define MIMRF_SOURCE_TOOLS_H_

#include <span>
#include <string>
#include <vector>

namespace mimrf {

struct ConfidenceMap {
  std::vector<double> values;  // each in (0, 1]
  std::string provenance;
};

// c = exp(-d / 2) per point. Distances must be finite and nonnegative.
ConfidenceMap DistanceConfidence(std::span<const double> distances);

// |value - peak| per point.
std::vector<double> PeakDistances(std::span<const double> values, double peak);

}  // namespace mimrf

#endif  // MIMRF_SOURCE_TOOLS_H_
