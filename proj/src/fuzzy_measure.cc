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

#include "mimrf/fuzzy_measure.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "mimrf/error.h"
#include "mimrf/truncated_normal.h"

namespace mimrf {
namespace {

void CheckSourceCount(int num_sources, const char* where) {
  if (num_sources < 1 || num_sources > kMaxSources) {
    std::ostringstream msg;
    msg << where << ": number of sources must be in [1, " << kMaxSources
        << "], got " << num_sources;
    throw ContractError(msg.str());
  }
}

std::vector<SubsetMask> BuildSweepOrder(int num_sources) {
  const SubsetMask full = (SubsetMask{1} << num_sources) - 1;
  std::vector<SubsetMask> order;
  order.reserve(full > 0 ? full - 1 : 0);
  for (int level = 1; level < num_sources; ++level) {
    for (SubsetMask s = 1; s < full; ++s) {
      if (SubsetSize(s) == level) order.push_back(s);
    }
  }
  return order;
}

// Lower bound of the valid interval: the largest covered subset value.
double CoveredMax(const FuzzyMeasure& g, SubsetMask s) {
  double lo = 0.0;
  for (SubsetMask rest = s; rest != 0; rest &= rest - 1) {
    const SubsetMask below = s & ~(rest & -rest);
    if (below != 0) lo = std::max(lo, g[below]);
  }
  return lo;
}

double CoveringMin(const FuzzyMeasure& g, SubsetMask s) {
  double hi = 1.0;
  const SubsetMask missing = g.full_set() & ~s;
  for (SubsetMask rest = missing; rest != 0; rest &= rest - 1) {
    hi = std::min(hi, g[s | (rest & -rest)]);
  }
  return hi;
}

void CheckElement(const FuzzyMeasure& g, SubsetMask s, const char* where) {
  if (s == 0 || s >= g.full_set()) {
    std::ostringstream msg;
    msg << where << ": subset must be nonempty and not the full set, got mask "
        << s << " for " << g.num_sources() << " sources";
    throw ContractError(msg.str());
  }
}

}  // namespace

std::string SubsetName(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (int k = 0; k < kMaxSources; ++k) {
    if (s & (SubsetMask{1} << k)) {
      if (!first) out += ",";
      out += std::to_string(k + 1);
      first = false;
    }
  }
  return out + "}";
}

FuzzyMeasure::FuzzyMeasure(int num_sources, std::vector<double> values)
    : num_sources_(num_sources), values_(std::move(values)) {
  CheckSourceCount(num_sources, "FuzzyMeasure");
  const std::size_t expected = (std::size_t{1} << num_sources) - 1;
  if (values_.size() != expected) {
    std::ostringstream msg;
    msg << "FuzzyMeasure: expected " << expected << " values for "
        << num_sources << " sources, got " << values_.size();
    throw ContractError(msg.str());
  }
}

FuzzyMeasure FuzzyMeasure::MaxOperator(int num_sources) {
  CheckSourceCount(num_sources, "MaxOperator");
  return FuzzyMeasure(num_sources,
                      std::vector<double>((std::size_t{1} << num_sources) - 1, 1.0));
}

FuzzyMeasure FuzzyMeasure::MinOperator(int num_sources) {
  CheckSourceCount(num_sources, "MinOperator");
  std::vector<double> v((std::size_t{1} << num_sources) - 1, 0.0);
  v.back() = 1.0;
  return FuzzyMeasure(num_sources, std::move(v));
}

FuzzyMeasure FuzzyMeasure::Additive(std::span<const double> weights) {
  const int m = static_cast<int>(weights.size());
  CheckSourceCount(m, "Additive");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw ContractError("Additive: weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ContractError("Additive: weights must sum to 1");
  }
  std::vector<double> v((std::size_t{1} << m) - 1);
  for (SubsetMask s = 1; s <= v.size(); ++s) {
    double sum = 0.0;
    for (int k = 0; k < m; ++k) {
      if (s & (SubsetMask{1} << k)) sum += weights[k];
    }
    v[s - 1] = std::min(sum, 1.0);
  }
  v.back() = 1.0;
  return FuzzyMeasure(m, std::move(v));
}

double FuzzyMeasure::at(SubsetMask s) const {
  if (s == 0 || s > full_set()) {
    throw ContractError("FuzzyMeasure::at: mask " + std::to_string(s) +
                        " out of range");
  }
  return (*this)[s];
}

FuzzyMeasure FuzzyMeasure::With(SubsetMask s, double value) const {
  FuzzyMeasure copy = *this;
  copy.values_.at(s - 1) = value;
  return copy;
}

std::string ValidationResult::Describe() const {
  if (ok()) return "ok";
  std::ostringstream out;
  if (!normalized) out << "full set value is not 1; ";
  for (const auto& v : out_of_range) {
    out << "g" << SubsetName(v.subset) << "=" << v.value << " outside [0,1]; ";
  }
  for (const auto& v : monotonicity) {
    out << "g" << SubsetName(v.subset) << "=" << v.subset_value << " > g"
        << SubsetName(v.superset) << "=" << v.superset_value << "; ";
  }
  std::string s = out.str();
  if (s.size() >= 2) s.resize(s.size() - 2);
  return s;
}

ValidationResult Validate(const FuzzyMeasure& g, bool strict) {
  ValidationResult result;
  const SubsetMask full = g.full_set();
  result.normalized = g[full] == 1.0;
  for (SubsetMask s = 1; s <= full; ++s) {
    const double v = g[s];
    if (!(v >= 0.0 && v <= 1.0)) result.out_of_range.push_back({s, v});
  }
  for (SubsetMask a = 1; a < full; ++a) {
    if (strict) {
      // Every proper superset of a.
      const SubsetMask free = full & ~a;
      for (SubsetMask extra = free; extra != 0; extra = (extra - 1) & free) {
        const SubsetMask b = a | extra;
        if (g[a] > g[b]) result.monotonicity.push_back({a, b, g[a], g[b]});
      }
    } else {
      for (SubsetMask rest = full & ~a; rest != 0; rest &= rest - 1) {
        const SubsetMask b = a | (rest & -rest);
        if (g[a] > g[b]) result.monotonicity.push_back({a, b, g[a], g[b]});
      }
    }
  }
  return result;
}

Interval ValidInterval(const FuzzyMeasure& g, SubsetMask subset) {
  CheckElement(g, subset, "ValidInterval");
  return {CoveredMax(g, subset), CoveringMin(g, subset)};
}

std::span<const SubsetMask> SweepOrder(int num_sources) {
  CheckSourceCount(num_sources, "SweepOrder");
  static const std::array<std::vector<SubsetMask>, kMaxSources + 1> orders = [] {
    std::array<std::vector<SubsetMask>, kMaxSources + 1> all;
    for (int m = 1; m <= kMaxSources; ++m) all[m] = BuildSweepOrder(m);
    return all;
  }();
  return orders[num_sources];
}

FuzzyMeasure RandomMonotone(int num_sources, Rng& rng) {
  CheckSourceCount(num_sources, "RandomMonotone");
  std::vector<double> v((std::size_t{1} << num_sources) - 1, 1.0);
  FuzzyMeasure g(num_sources, std::move(v));
  // Supersets are still at their initial 1.0 when a level is drawn, so the
  // upper bound is always 1.
  for (SubsetMask s : SweepOrder(num_sources)) {
    const double lo = CoveredMax(g, s);
    g.Set(s, rng.Uniform(lo, 1.0));
  }
  return g;
}

FuzzyMeasure Mutate(const FuzzyMeasure& measure, double small_scale_rate,
                    double variance, Rng& rng) {
  FuzzyMeasure g = measure;
  const auto order = SweepOrder(g.num_sources());
  if (order.empty()) return g;
  const double z = rng.Uniform();
  if (z < small_scale_rate) {
    const SubsetMask s = order[rng.UniformInt(order.size())];
    const Interval iv = ValidInterval(g, s);
    g.Set(s, SampleTruncatedGaussian(g[s], variance, iv.lo, iv.hi, rng));
  } else {
    for (SubsetMask s : order) {
      const Interval iv = ValidInterval(g, s);
      g.Set(s, SampleTruncatedGaussian(g[s], variance, iv.lo, iv.hi, rng));
    }
  }
  return g;
}

}  // namespace mimrf
