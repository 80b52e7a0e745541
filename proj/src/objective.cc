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

#include "mimrf/objective.h"

#include <sstream>

#include "mimrf/choquet.h"
#include "mimrf/error.h"

namespace mimrf {

namespace {

Selection MinCandidate(const FuzzyMeasure& g, const CandidateSet& set) {
  Selection best{internal::ChoquetUnchecked(g, set.candidate(0)), 0};
  for (std::size_t c = 1; c < set.size(); ++c) {
    const double v = internal::ChoquetUnchecked(g, set.candidate(c));
    if (v < best.value) best = {v, c};
  }
  return best;
}

Selection MaxCandidate(const FuzzyMeasure& g, const CandidateSet& set) {
  Selection best{internal::ChoquetUnchecked(g, set.candidate(0)), 0};
  for (std::size_t c = 1; c < set.size(); ++c) {
    const double v = internal::ChoquetUnchecked(g, set.candidate(c));
    if (v > best.value) best = {v, c};
  }
  return best;
}

void CheckSet(const FuzzyMeasure& g, const CandidateSet& set) {
  if (set.dim() != g.num_sources()) {
    std::ostringstream msg;
    msg << "instance '" << set.instance_id() << "' has " << set.dim()
        << " sources, measure has " << g.num_sources();
    throw ContractError(msg.str());
  }
  for (double v : set.flat()) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ContractError("instance '" + set.instance_id() +
                          "' has a candidate value outside [0, 1]; normalize first");
    }
  }
}

// One bag of the two-level min/max objective. Negative style: the instance
// value is its smallest candidate CI and the bag keeps its worst instance.
// Positive style: largest candidate CI, best instance.
BagTerm EvaluateBag(const FuzzyMeasure& g, const Bag& bag, double target,
                    bool negative_style, bool with_selections) {
  BagTerm term;
  term.target = target;
  term.negative_style = negative_style;
  if (with_selections) term.selected_candidates.resize(bag.instances.size());
  for (std::size_t i = 0; i < bag.instances.size(); ++i) {
    const Selection inner = negative_style ? MinCandidate(g, bag.instances[i])
                                           : MaxCandidate(g, bag.instances[i]);
    if (with_selections) term.selected_candidates[i] = inner.index;
    const double diff = inner.value - target;
    const double sq = diff * diff;
    const bool better = i == 0 || (negative_style ? sq > term.contribution
                                                  : sq < term.contribution);
    if (better) {
      term.contribution = sq;
      term.selected_ci = inner.value;
      term.selected_instance = i;
    }
  }
  return term;
}

void Accumulate(ObjectiveBreakdown& out) {
  for (const BagTerm& t : out.bags) {
    (t.negative_style ? out.negative_term : out.positive_term) += t.contribution;
  }
  out.total = out.negative_term + out.positive_term;
}

void CheckBinaryInputs(const FuzzyMeasure& g, const Dataset& d) {
  for (std::size_t b = 0; b < d.bags.size(); ++b) {
    const double label = d.bags[b].label;
    if (label != 0.0 && label != 1.0) {
      std::ostringstream msg;
      msg << "TotalObjective: bag " << b << " ('" << d.bags[b].bag_id << "') has label "
          << label << "; use TotalObjectiveGeneral for real-valued labels";
      throw ContractError(msg.str());
    }
  }
  RequireBothClasses(d);
  if (d.num_sources != g.num_sources()) {
    throw ContractError("TotalObjective: dataset has " + std::to_string(d.num_sources) +
                        " sources, measure has " + std::to_string(g.num_sources()));
  }
  RequireNormalized(d);
}

void CheckGeneralInputs(const FuzzyMeasure& g, const Dataset& d) {
  for (std::size_t b = 0; b < d.bags.size(); ++b) {
    const double label = d.bags[b].label;
    if (!(label >= 0.0 && label <= 1.0)) {
      std::ostringstream msg;
      msg << "TotalObjectiveGeneral: bag " << b << " label " << label
          << " is outside [0, 1]";
      throw ContractError(msg.str());
    }
  }
  RequireBothClasses(d);
  if (d.num_sources != g.num_sources()) {
    throw ContractError("TotalObjectiveGeneral: dataset has " + std::to_string(d.num_sources) +
                        " sources, measure has " + std::to_string(g.num_sources()));
  }
  RequireNormalized(d);
}

ObjectiveBreakdown EvaluateSerial(const FuzzyMeasure& g, const Dataset& d) {
  ObjectiveBreakdown out;
  out.bags.reserve(d.bags.size());
  for (const Bag& bag : d.bags) {
    out.bags.push_back(EvaluateBag(g, bag, bag.label, !bag.positive(), true));
  }
  Accumulate(out);
  return out;
}

ObjectiveBreakdown EvaluateParallel(const FuzzyMeasure& g, const Dataset& d) {
  ObjectiveBreakdown out;
  out.bags.resize(d.bags.size());
  const long n = static_cast<long>(d.bags.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long b = 0; b < n; ++b) {
    const Bag& bag = d.bags[b];
    out.bags[b] = EvaluateBag(g, bag, bag.label, !bag.positive(), true);
  }
  Accumulate(out);
  return out;
}

}  // namespace

Selection InstanceCiNegative(const FuzzyMeasure& g, const CandidateSet& set) {
  CheckSet(g, set);
  return MinCandidate(g, set);
}

Selection InstanceCiPositive(const FuzzyMeasure& g, const CandidateSet& set) {
  CheckSet(g, set);
  return MaxCandidate(g, set);
}

Selection BagObjectiveNegative(const FuzzyMeasure& g, const Bag& bag) {
  if (bag.label != 0.0) {
    throw ContractError("BagObjectiveNegative: bag '" + bag.bag_id + "' is not labeled 0");
  }
  for (const auto& inst : bag.instances) CheckSet(g, inst);
  const BagTerm t = EvaluateBag(g, bag, 0.0, true, false);
  return {t.contribution, t.selected_instance};
}

Selection BagObjectivePositive(const FuzzyMeasure& g, const Bag& bag) {
  if (bag.label != 1.0) {
    throw ContractError("BagObjectivePositive: bag '" + bag.bag_id + "' is not labeled 1");
  }
  for (const auto& inst : bag.instances) CheckSet(g, inst);
  const BagTerm t = EvaluateBag(g, bag, 1.0, false, false);
  return {t.contribution, t.selected_instance};
}

void RequireNormalized(const Dataset& d) {
  for (const Bag& bag : d.bags) {
    for (const CandidateSet& inst : bag.instances) {
      for (double v : inst.flat()) {
        if (!(v >= 0.0 && v <= 1.0)) {
          throw ContractError("instance '" + inst.instance_id() +
                              "' has a candidate value outside [0, 1]; normalize first");
        }
      }
    }
  }
}

ObjectiveBreakdown TotalObjective(const FuzzyMeasure& g, const Dataset& d) {
  CheckBinaryInputs(g, d);
  return EvaluateParallel(g, d);
}

ObjectiveBreakdown TotalObjectiveGeneral(const FuzzyMeasure& g, const Dataset& d) {
  CheckGeneralInputs(g, d);
  return EvaluateParallel(g, d);
}

namespace serial {

ObjectiveBreakdown TotalObjective(const FuzzyMeasure& g, const Dataset& d) {
  CheckBinaryInputs(g, d);
  return EvaluateSerial(g, d);
}

ObjectiveBreakdown TotalObjectiveGeneral(const FuzzyMeasure& g, const Dataset& d) {
  CheckGeneralInputs(g, d);
  return EvaluateSerial(g, d);
}

}  // namespace serial

namespace internal {

double ObjectiveValue(const FuzzyMeasure& g, const Dataset& d) {
  double negative = 0.0;
  double positive = 0.0;
  for (const Bag& bag : d.bags) {
    const bool neg = !bag.positive();
    const double c = EvaluateBag(g, bag, bag.label, neg, false).contribution;
    (neg ? negative : positive) += c;
  }
  return negative + positive;
}

}  // namespace internal

nlohmann::json BreakdownToJson(const ObjectiveBreakdown& br, const Dataset& d) {
  nlohmann::json bags = nlohmann::json::array();
  for (std::size_t b = 0; b < br.bags.size(); ++b) {
    const BagTerm& t = br.bags[b];
    const Bag& bag = d.bags[b];
    nlohmann::json selections = nlohmann::json::array();
    for (std::size_t i = 0; i < t.selected_candidates.size(); ++i) {
      selections.push_back({{"instance_id", bag.instances[i].instance_id()},
                            {"selected_candidate", t.selected_candidates[i]}});
    }
    bags.push_back({{"bag_id", bag.bag_id},
                    {"target", t.target},
                    {"contribution", t.contribution},
                    {"selected_ci", t.selected_ci},
                    {"selected_instance", bag.instances[t.selected_instance].instance_id()},
                    {"selections", std::move(selections)}});
  }
  return {{"total", br.total},
          {"negative_term", br.negative_term},
          {"positive_term", br.positive_term},
          {"bags", std::move(bags)}};
}

}  // namespace mimrf
