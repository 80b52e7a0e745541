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

#include "mimrf/synth.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "mimrf/choquet.h"
#include "mimrf/error.h"
#include "mimrf/io.h"

namespace mimrf {

using nlohmann::json;

namespace {

// Generated values sit on a dyadic grid so sums of Choquet differences are
// exact and zero-noise instances hit their truth bit-for-bit.
constexpr double kGrid = 1 << 20;

double GridUniform(Rng& rng) {
  return static_cast<double>(rng.UniformInt(static_cast<std::uint64_t>(kGrid))) / kGrid;
}

// Subsets A with g(A) == 1 whose covered subsets are all below 1.
std::vector<SubsetMask> MinimalOnes(const FuzzyMeasure& g) {
  std::vector<SubsetMask> out;
  for (SubsetMask s = 1; s <= g.full_set(); ++s) {
    if (g[s] != 1.0) continue;
    bool minimal = true;
    for (SubsetMask rest = s; rest != 0 && minimal; rest &= rest - 1) {
      const SubsetMask below = s & ~(rest & (~rest + 1));
      if (below != 0 && g[below] == 1.0) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

// Subsets D with g(D) == 0 whose covering supersets are all above 0. The
// empty set qualifies when no singleton is zero.
std::vector<SubsetMask> MaximalZeros(const FuzzyMeasure& g) {
  std::vector<SubsetMask> out;
  const SubsetMask full = g.full_set();
  auto value = [&](SubsetMask s) { return s == 0 ? 0.0 : g[s]; };
  for (SubsetMask s = 0; s < full; ++s) {
    if (value(s) != 0.0) continue;
    bool maximal = true;
    for (SubsetMask rest = full & ~s; rest != 0 && maximal; rest &= rest - 1) {
      if (g[s | (rest & (~rest + 1))] == 0.0) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

// 1 on a minimal unit subset, grid noise below 1 elsewhere: integral is 1.
std::vector<double> OneVector(const FuzzyMeasure& g, Rng& rng) {
  const auto subsets = MinimalOnes(g);
  const SubsetMask a = subsets[rng.UniformInt(subsets.size())];
  std::vector<double> x(g.num_sources());
  for (int k = 0; k < g.num_sources(); ++k) {
    x[k] = (a & (SubsetMask{1} << k)) ? 1.0 : GridUniform(rng);
  }
  return x;
}

// Grid noise on a maximal null subset, 0 elsewhere: integral is 0.
std::vector<double> ZeroVector(const FuzzyMeasure& g, Rng& rng) {
  const auto subsets = MaximalZeros(g);
  const SubsetMask d = subsets[rng.UniformInt(subsets.size())];
  std::vector<double> x(g.num_sources());
  for (int k = 0; k < g.num_sources(); ++k) {
    x[k] = (d & (SubsetMask{1} << k)) ? GridUniform(rng) : 0.0;
  }
  return x;
}

std::string PaddedId(char prefix, int index, int width) {
  std::ostringstream out;
  out << prefix << std::setw(width) << std::setfill('0') << index;
  return out.str();
}

int Width(int n) { return static_cast<int>(std::to_string(std::max(n - 1, 0)).size()); }

FuzzyMeasure GeneratingMeasure(const SynthConfig& c, Rng& rng) {
  if (c.measure_kind == "explicit") return *c.measure;
  if (c.measure_kind == "max") return FuzzyMeasure::MaxOperator(c.num_sources);
  if (c.measure_kind == "min") return FuzzyMeasure::MinOperator(c.num_sources);
  if (c.measure_kind == "mean") {
    std::vector<double> w(c.num_sources, 1.0 / c.num_sources);
    return FuzzyMeasure::Additive(w);
  }
  // Exact 0 / 1 targets are only informative when some subsets are null or
  // decisive, so values near the ends are snapped. The snap is a
  // nondecreasing map and keeps the measure monotone.
  FuzzyMeasure g = RandomMonotone(c.num_sources, rng);
  for (SubsetMask s = 1; s < g.full_set(); ++s) {
    if (g[s] < 0.3) g.Set(s, 0.0);
    if (g[s] > 0.7) g.Set(s, 1.0);
  }
  return g;
}

}  // namespace

void SynthConfig::Validate() const {
  auto fail = [](const std::string& what) { throw ContractError("synth config: " + what); };
  if (num_sources < 1 || num_sources > kMaxSources) fail("num_sources out of range");
  if (positive_bags < 1) fail("at least one positive bag is required");
  if (negative_bags < 1) fail("at least one negative bag is required");
  if (instances_per_bag < 1) fail("instances_per_bag must be positive");
  if (candidates_per_instance < 1) fail("candidates_per_instance must be positive");
  if (!(target_fraction >= 0.0 && target_fraction <= 1.0)) fail("target_fraction must lie in [0, 1]");
  if (!(corruption_rate >= 0.0 && corruption_rate <= 1.0)) fail("corruption_rate must lie in [0, 1]");
  if (!(noise >= 0.0 && noise <= 1.0)) fail("noise must lie in [0, 1]");
  static const char* kinds[] = {"random", "max", "min", "mean", "explicit"};
  if (std::find(std::begin(kinds), std::end(kinds), measure_kind) == std::end(kinds)) {
    fail("unknown measure kind '" + measure_kind + "'");
  }
  if (measure_kind == "explicit") {
    if (!measure) fail("explicit measure kind without measure values");
    if (measure->num_sources() != num_sources) fail("measure size does not match num_sources");
    const auto v = mimrf::Validate(*measure);
    if (!v.ok()) fail("generating measure is invalid: " + v.Describe());
  }
}

SynthConfig SynthConfigFromJson(const json& doc) {
  RejectUnknownKeys(doc,
                    {"num_sources", "positive_bags", "negative_bags", "instances_per_bag",
                     "candidates_per_instance", "target_fraction", "corruption_rate", "noise",
                     "real_valued_truth", "measure", "seed"},
                    "synth config");
  SynthConfig c;
  try {
    c.num_sources = doc.value("num_sources", c.num_sources);
    c.positive_bags = doc.value("positive_bags", c.positive_bags);
    c.negative_bags = doc.value("negative_bags", c.negative_bags);
    c.instances_per_bag = doc.value("instances_per_bag", c.instances_per_bag);
    c.candidates_per_instance = doc.value("candidates_per_instance", c.candidates_per_instance);
    c.target_fraction = doc.value("target_fraction", c.target_fraction);
    c.corruption_rate = doc.value("corruption_rate", c.corruption_rate);
    c.noise = doc.value("noise", c.noise);
    c.real_valued_truth = doc.value("real_valued_truth", c.real_valued_truth);
    c.seed = doc.value("seed", c.seed);
    if (doc.contains("measure")) {
      const json& m = doc.at("measure");
      if (m.is_string()) {
        c.measure_kind = m.get<std::string>();
      } else if (m.is_array()) {
        c.measure_kind = "explicit";
        c.measure = FuzzyMeasure(c.num_sources, m.get<std::vector<double>>());
      } else {
        throw ParseError("synth config: 'measure' must be a kind name or an array of values");
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("synth config: ") + e.what());
  } catch (const ContractError& e) {
    throw ParseError(e.what());
  }
  return c;
}

json SynthConfigToJson(const SynthConfig& c) {
  json doc = {{"num_sources", c.num_sources},
              {"positive_bags", c.positive_bags},
              {"negative_bags", c.negative_bags},
              {"instances_per_bag", c.instances_per_bag},
              {"candidates_per_instance", c.candidates_per_instance},
              {"target_fraction", c.target_fraction},
              {"corruption_rate", c.corruption_rate},
              {"noise", c.noise},
              {"real_valued_truth", c.real_valued_truth},
              {"seed", c.seed}};
  if (c.measure_kind == "explicit") {
    doc["measure"] = MeasureToJson(*c.measure)["values"];
  } else {
    doc["measure"] = c.measure_kind;
  }
  return doc;
}

std::vector<double> VectorWithIntegral(const FuzzyMeasure& g, double target, Rng& rng) {
  if (!(target >= 0.0 && target <= 1.0)) {
    throw ContractError("VectorWithIntegral: target must lie in [0, 1]");
  }
  if (target == 1.0) return OneVector(g, rng);
  std::vector<double> low = ZeroVector(g, rng);
  if (target == 0.0) return low;
  // Walk from a null vector up to a unit vector; the integral is continuous
  // and nondecreasing along the path, so bisection finds the target.
  const std::vector<double> one = OneVector(g, rng);
  std::vector<double> high(low.size());
  for (std::size_t k = 0; k < low.size(); ++k) high[k] = std::max(low[k], one[k]);
  std::vector<double> x(low.size());
  auto point = [&](double t) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = low[k] + t * (high[k] - low[k]);
    return ChoquetIntegral(g, x);
  };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 100 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (point(mid) < target ? lo : hi) = mid;
  }
  const double c_lo = point(lo);
  const double c_hi = point(hi);
  point(target - c_lo <= c_hi - target ? lo : hi);
  return x;
}

SynthResult SynthesizeDataset(const SynthConfig& c, Rng& rng) {
  c.Validate();
  const FuzzyMeasure g = GeneratingMeasure(c, rng);
  const int m = c.num_sources;
  const int k = c.candidates_per_instance;
  const int corrupted =
      std::min(k - 1, static_cast<int>(std::floor(c.corruption_rate * k + 0.5)));

  SynthResult out{Dataset{}, TruthMap{}, g};
  out.dataset.num_sources = m;
  const int num_bags = c.positive_bags + c.negative_bags;
  const int bag_width = Width(num_bags);
  const int inst_width = Width(c.instances_per_bag);

  for (int b = 0; b < num_bags; ++b) {
    const bool positive = b < c.positive_bags;
    Bag bag;
    bag.bag_id = PaddedId('b', b, bag_width);

    std::vector<bool> is_target(c.instances_per_bag, false);
    if (positive) {
      for (int i = 0; i < c.instances_per_bag; ++i) is_target[i] = rng.Bernoulli(c.target_fraction);
      if (std::none_of(is_target.begin(), is_target.end(), [](bool t) { return t; })) {
        is_target[rng.UniformInt(c.instances_per_bag)] = true;
      }
    }

    double bag_label = 0.0;
    for (int i = 0; i < c.instances_per_bag; ++i) {
      double truth = is_target[i] ? 1.0 : 0.0;
      if (c.real_valued_truth) {
        truth = is_target[i] ? rng.Uniform(0.5, 1.0) : rng.Uniform(0.0, 0.5);
      }
      bag_label = std::max(bag_label, truth);

      // Correct candidates reach a value within `noise` of the truth, on the
      // side that stays inside [0, 1].
      auto correct_target = [&]() {
        if (c.noise == 0.0) return truth;
        if (!c.real_valued_truth) {
          const double off = rng.Uniform() * c.noise;
          return truth == 1.0 ? 1.0 - off : off;
        }
        return std::clamp(truth + rng.Uniform(-c.noise, c.noise), 0.0, 1.0);
      };

      std::vector<bool> noisy(k, false);
      for (int j = 0; j < corrupted; ++j) noisy[j] = true;
      for (int j = k - 1; j > 0; --j) {
        const int swap_with = static_cast<int>(rng.UniformInt(j + 1));
        const bool tmp = noisy[j];
        noisy[j] = noisy[swap_with];
        noisy[swap_with] = tmp;
      }

      std::vector<double> flat;
      flat.reserve(static_cast<std::size_t>(k) * m);
      for (int j = 0; j < k; ++j) {
        if (noisy[j]) {
          for (int s = 0; s < m; ++s) flat.push_back(GridUniform(rng));
        } else {
          const auto x = VectorWithIntegral(g, correct_target(), rng);
          flat.insert(flat.end(), x.begin(), x.end());
        }
      }
      const std::string id = bag.bag_id + "_" + PaddedId('i', i, inst_width);
      out.truth[id] = truth;
      bag.instances.emplace_back(id, m, std::move(flat));
    }
    bag.label = c.real_valued_truth ? bag_label : (positive ? 1.0 : 0.0);
    out.dataset.bags.push_back(std::move(bag));
  }
  CheckDataset(out.dataset);
  return out;
}

}  // namespace mimrf
