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

#include "mimrf/truncated_normal.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/special_functions/erf.hpp>

#include "mimrf/error.h"

namespace mimrf {

double NormalCdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double NormalQuantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw ContractError("NormalQuantile: p must lie in (0, 1)");
  }
  return -std::sqrt(2.0) * boost::math::erfc_inv(2.0 * p);
}

double SampleTruncatedGaussian(double mean, double variance, double lo,
                               double hi, Rng& rng) {
  if (!(variance > 0.0) || !std::isfinite(variance)) {
    std::ostringstream msg;
    msg << "SampleTruncatedGaussian: variance must be positive, got " << variance;
    throw ContractError(msg.str());
  }
  if (!(lo <= hi)) {
    std::ostringstream msg;
    msg << "SampleTruncatedGaussian: empty interval [" << lo << ", " << hi << "]";
    throw ContractError(msg.str());
  }
  if (lo == hi) return lo;

  const double sd = std::sqrt(variance);
  double a = (lo - mean) / sd;
  double b = (hi - mean) / sd;
  // erfc is accurate in the lower tail, so an interval above the mean is
  // reflected and the draw negated afterwards.
  const bool reflect = a > 0.0;
  if (reflect) {
    const double t = a;
    a = -b;
    b = -t;
  }
  const double pa = NormalCdf(a);
  const double pb = NormalCdf(b);

  const double u = rng.UniformOpen();
  double z = 0.0;
  if (pb - pa > 0.0) {
    const double p = pa + u * (pb - pa);
    if (p <= 0.0) {
      z = a;
    } else if (p >= 1.0) {
      z = b;
    } else {
      z = NormalQuantile(p);
    }
  } else {
    // Both bounds so deep in the tail that the CDF underflows; the density is
    // flat to machine precision there.
    z = a + u * (b - a);
  }
  z = std::clamp(z, a, b);
  const double x = mean + sd * (reflect ? -z : z);
  return std::clamp(x, lo, hi);
}

}  // namespace mimrf
