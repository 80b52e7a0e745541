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

// Independent reference evaluators used only by the tests. None of these
// call into the code paths they check.

#ifndef MIMRF_TESTS_ORACLES_H_
#define MIMRF_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "mimrf/fuzzy_measure.h"
#include "mimrf/mil_data.h"
#include "mimrf/rng.h"

namespace mimrf::oracle {

// Choquet integral by enumerating permutations until one sorts x in
// non-increasing order, then summing the telescoped differences literally.
inline double BruteForceChoquet(const FuzzyMeasure& g, const std::vector<double>& x) {
  const int m = static_cast<int>(x.size());
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool sorted = true;
    for (int k = 0; k + 1 < m; ++k) sorted = sorted && x[perm[k]] >= x[perm[k + 1]];
    if (sorted) break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  double sum = 0.0;
  for (int k = 0; k < m; ++k) {
    SubsetMask a = 0;
    for (int j = 0; j <= k; ++j) a |= SubsetMask{1} << perm[j];
    const double h_k = x[perm[k]];
    const double h_next = k + 1 < m ? x[perm[k + 1]] : 0.0;
    sum += (h_k - h_next) * g[a];
  }
  return sum;
}

// Monotonicity over every pair A ⊂ B, plus range and normalization.
inline bool ExhaustivelyValid(const FuzzyMeasure& g) {
  const SubsetMask full = g.full_set();
  if (g[full] != 1.0) return false;
  for (SubsetMask a = 1; a <= full; ++a) {
    if (!(g[a] >= 0.0 && g[a] <= 1.0)) return false;
    for (SubsetMask b = 1; b <= full; ++b) {
      if ((a & b) == a && g[a] > g[b]) return false;
    }
  }
  return true;
}

// Bag value by enumerating every assignment of one candidate per instance.
// max_i min_k f = min over assignments of max_i f, and for the positive
// side min_i (max_k c - 1)^2 = min over assignments and instances of
// (c - 1)^2 because c <= 1.
inline double EnumeratedBagObjective(const FuzzyMeasure& g, const Bag& bag, bool negative) {
  const std::size_t n = bag.instances.size();
  std::vector<std::size_t> pick(n, 0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    double agg = negative ? -std::numeric_limits<double>::infinity()
                          : std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = bag.instances[i].candidate(pick[i]);
      const double c = BruteForceChoquet(g, std::vector<double>(row.begin(), row.end()));
      const double e = negative ? c * c : (c - 1.0) * (c - 1.0);
      agg = negative ? std::max(agg, e) : std::min(agg, e);
    }
    best = std::min(best, agg);
    std::size_t i = 0;
    while (i < n && ++pick[i] == bag.instances[i].size()) pick[i++] = 0;
    if (i == n) break;
  }
  return best;
}

inline double EnumeratedTotalObjective(const FuzzyMeasure& g, const Dataset& d) {
  double total = 0.0;
  for (const Bag& bag : d.bags) total += EnumeratedBagObjective(g, bag, bag.label == 0.0);
  return total;
}

// Fraction of correctly ordered (positive, negative) pairs, ties count 1/2.
inline double MannWhitney(const std::vector<double>& conf, const std::vector<double>& truth) {
  double good = 0.0;
  double pairs = 0.0;
  for (std::size_t i = 0; i < conf.size(); ++i) {
    if (truth[i] != 1.0) continue;
    for (std::size_t j = 0; j < conf.size(); ++j) {
      if (truth[j] != 0.0) continue;
      pairs += 1.0;
      if (conf[i] > conf[j]) good += 1.0;
      else if (conf[i] == conf[j]) good += 0.5;
    }
  }
  return good / pairs;
}

// Random valid measure built independently of RandomMonotone: random
// values sorted so that every superset receives a value at least as large
// (assign by subset size order, then clamp up against subsets).
inline FuzzyMeasure IndependentRandomMeasure(int m, Rng& rng) {
  const SubsetMask full = (SubsetMask{1} << m) - 1;
  std::vector<double> v(full);
  for (SubsetMask s = 1; s <= full; ++s) v[s - 1] = rng.Uniform();
  for (int level = 2; level <= m; ++level) {
    for (SubsetMask s = 1; s <= full; ++s) {
      if (__builtin_popcount(s) != level) continue;
      for (SubsetMask a = 1; a < s; ++a) {
        if ((a & s) == a) v[s - 1] = std::max(v[s - 1], v[a - 1]);
      }
    }
  }
  v[full - 1] = 1.0;
  return FuzzyMeasure(m, std::move(v));
}

inline std::vector<double> RandomVector(int m, Rng& rng) {
  std::vector<double> x(m);
  for (double& v : x) v = rng.Uniform();
  return x;
}

}  // namespace mimrf::oracle

#endif  // MIMRF_TESTS_ORACLES_H_
