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

#ifndef MIMRF_FUZZY_MEASURE_H_
#define MIMRF_FUZZY_MEASURE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mimrf/rng.h"

namespace mimrf {

// Subset of sources encoded as a bitmask: bit k set <=> source k+1 is in the
// subset. The empty set (0) is never stored.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxSources = 16;

inline int SubsetSize(SubsetMask s) { return __builtin_popcount(s); }

// Human-readable subset name, e.g. mask 0b101 -> "{1,3}".
std::string SubsetName(SubsetMask s);

// Closed interval of admissible values for one measure element.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

// Monotone, normalized set function on the nonempty subsets of m sources.
//
// Values are stored in ascending bitmask order: values()[i] belongs to mask
// i + 1. The empty set is implicit with value 0. Construction only checks the
// shape; call Validate() to check monotonicity and normalization.
class FuzzyMeasure {
 public:
  FuzzyMeasure(int num_sources, std::vector<double> values);

  // g(A) = 1 for every nonempty A; the Choquet integral becomes max.
  static FuzzyMeasure MaxOperator(int num_sources);
  // g(A) = 0 except the full set; the Choquet integral becomes min.
  static FuzzyMeasure MinOperator(int num_sources);
  // g(A) = sum of weights in A; the Choquet integral becomes a weighted mean.
  static FuzzyMeasure Additive(std::span<const double> weights);

  int num_sources() const { return num_sources_; }
  SubsetMask full_set() const { return (SubsetMask{1} << num_sources_) - 1; }
  std::size_t size() const { return values_.size(); }

  double operator[](SubsetMask s) const { return values_[s - 1]; }
  double at(SubsetMask s) const;
  std::span<const double> values() const { return values_; }

  // Copy with one element replaced.
  FuzzyMeasure With(SubsetMask s, double value) const;
  void Set(SubsetMask s, double value) { values_[s - 1] = value; }

  bool operator==(const FuzzyMeasure&) const = default;

 private:
  int num_sources_;
  std::vector<double> values_;
};

struct MonotonicityViolation {
  SubsetMask subset;
  SubsetMask superset;
  double subset_value;
  double superset_value;
};

struct RangeViolation {
  SubsetMask subset;
  double value;
};

struct ValidationResult {
  std::vector<MonotonicityViolation> monotonicity;
  std::vector<RangeViolation> out_of_range;
  bool normalized = true;

  bool ok() const { return normalized && monotonicity.empty() && out_of_range.empty(); }
  std::string Describe() const;
};

// Checks normalization, range and monotonicity. By default only covering
// pairs (B = A plus one source) are compared, which is equivalent to the
// full pairwise check by transitivity; `strict` compares every A ⊂ B pair.
ValidationResult Validate(const FuzzyMeasure& measure, bool strict = false);

// Range that element `subset` may take with every other element held fixed.
// `subset` must be nonempty and not the full set.
Interval ValidInterval(const FuzzyMeasure& measure, SubsetMask subset);

// Non-full nonempty subsets ordered by lattice level (subset size), then by
// ascending bitmask. This is the sweep order used for initialization and for
// large-scale mutation.
std::span<const SubsetMask> SweepOrder(int num_sources);

// Random monotone measure: levels are filled bottom-up, each element drawn
// uniformly from [max of its covered subsets, 1].
FuzzyMeasure RandomMonotone(int num_sources, Rng& rng);

// With probability `small_scale_rate` resamples one uniformly chosen element
// (small-scale); otherwise resamples every element in SweepOrder, recomputing
// the valid interval before each draw (large-scale). New values come from a
// Gaussian centred on the old value with the given variance, truncated to
// the valid interval.
FuzzyMeasure Mutate(const FuzzyMeasure& measure, double small_scale_rate,
                    double variance, Rng& rng);

}  // namespace mimrf

#endif  // MIMRF_FUZZY_MEASURE_H_
