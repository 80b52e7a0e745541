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

#ifndef MIMRF_TRUNCATED_NORMAL_H_
#define MIMRF_TRUNCATED_NORMAL_H_

#include "mimrf/rng.h"

namespace mimrf {

// Standard normal CDF and its inverse.
double NormalCdf(double z);
double NormalQuantile(double p);

// Draws from N(mean, variance) truncated to [lo, hi] by inverting the CDF on
// the truncated interval, so the cost does not depend on how far the
// interval sits in the tail. Returns lo when lo == hi.
double SampleTruncatedGaussian(double mean, double variance, double lo,
                               double hi, Rng& rng);

}  // namespace mimrf

#endif  // MIMRF_TRUNCATED_NORMAL_H_
