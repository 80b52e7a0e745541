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

#include <gtest/gtest.h>

#include "mimrf/choquet.h"
#include "mimrf/error.h"
#include "mimrf/objective.h"

namespace mimrf {
namespace {

SynthConfig BaseConfig() {
  SynthConfig c;
  c.seed = 5;
  return c;
}

SynthResult Make(const SynthConfig& c) {
  Rng rng(c.seed);
  return SynthesizeDataset(c, rng);
}

TEST(VectorWithIntegralTest, HitsEndpointsExactly) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const FuzzyMeasure g = RandomMonotone(4, rng);
    EXPECT_EQ(ChoquetIntegral(g, VectorWithIntegral(g, 0.0, rng)), 0.0);
    EXPECT_EQ(ChoquetIntegral(g, VectorWithIntegral(g, 1.0, rng)), 1.0);
  }
}

TEST(VectorWithIntegralTest, IntermediateTargetsAreClose) {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const FuzzyMeasure g = RandomMonotone(3, rng);
    const double target = rng.Uniform();
    const auto x = VectorWithIntegral(g, target, rng);
    for (double v : x) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
    EXPECT_NEAR(ChoquetIntegral(g, x), target, 1e-9);
  }
}

TEST(VectorWithIntegralTest, RejectsOutOfRangeTarget) {
  Rng rng(3);
  const FuzzyMeasure g = FuzzyMeasure::MaxOperator(2);
  EXPECT_THROW(VectorWithIntegral(g, 1.5, rng), ContractError);
}

TEST(SynthTest, ShapeMatchesConfig) {
  SynthConfig c = BaseConfig();
  c.positive_bags = 4;
  c.negative_bags = 3;
  c.instances_per_bag = 6;
  c.candidates_per_instance = 2;
  const SynthResult r = Make(c);
  EXPECT_EQ(r.dataset.num_positive_bags(), 4u);
  EXPECT_EQ(r.dataset.num_negative_bags(), 3u);
  EXPECT_EQ(r.dataset.num_instances(), 42u);
  EXPECT_EQ(r.truth.size(), 42u);
  for (const Bag& bag : r.dataset.bags) {
    for (const CandidateSet& inst : bag.instances) {
      EXPECT_EQ(inst.size(), 2u);
      EXPECT_EQ(inst.dim(), 3);
      EXPECT_TRUE(r.truth.contains(inst.instance_id()));
    }
  }
}

TEST(SynthTest, BagLabelsFollowInstanceTruth) {
  SynthConfig c = BaseConfig();
  c.positive_bags = 20;
  c.negative_bags = 20;
  c.target_fraction = 0.1;
  const SynthResult r = Make(c);
  for (const Bag& bag : r.dataset.bags) {
    double any = 0.0;
    for (const CandidateSet& inst : bag.instances) any = std::max(any, r.truth.at(inst.instance_id()));
    EXPECT_EQ(bag.label, any) << bag.bag_id;
  }
}

TEST(SynthTest, ZeroNoiseGeneratingMeasureReachesZero) {
  for (const std::string kind : {"max", "min", "mean", "random"}) {
    SynthConfig c = BaseConfig();
    c.measure_kind = kind;
    c.corruption_rate = 0.5;
    const SynthResult r = Make(c);
    EXPECT_TRUE(Validate(r.generating_measure).ok()) << kind;
    EXPECT_EQ(TotalObjective(r.generating_measure, r.dataset).total, 0.0) << kind;
  }
}

TEST(SynthTest, ZeroNoiseCleanCandidatesHitTruth) {
  SynthConfig c = BaseConfig();
  c.corruption_rate = 0.0;
  const SynthResult r = Make(c);
  for (const Bag& bag : r.dataset.bags) {
    for (const CandidateSet& inst : bag.instances) {
      for (std::size_t k = 0; k < inst.size(); ++k) {
        EXPECT_EQ(ChoquetIntegral(r.generating_measure, inst.candidate(k)),
                  r.truth.at(inst.instance_id()));
      }
    }
  }
}

TEST(SynthTest, NoiseBoundsDeviation) {
  SynthConfig c = BaseConfig();
  c.noise = 0.1;
  const SynthResult r = Make(c);
  for (const Bag& bag : r.dataset.bags) {
    for (const CandidateSet& inst : bag.instances) {
      const double ci = ChoquetIntegral(r.generating_measure, inst.candidate(0));
      EXPECT_LE(std::abs(ci - r.truth.at(inst.instance_id())), 0.1 + 1e-9);
    }
  }
}

TEST(SynthTest, CorruptionKeepsOneCleanCandidate) {
  SynthConfig c = BaseConfig();
  c.corruption_rate = 1.0;
  c.candidates_per_instance = 4;
  const SynthResult r = Make(c);
  for (const Bag& bag : r.dataset.bags) {
    for (const CandidateSet& inst : bag.instances) {
      int clean = 0;
      for (std::size_t k = 0; k < inst.size(); ++k) {
        clean += ChoquetIntegral(r.generating_measure, inst.candidate(k)) ==
                 r.truth.at(inst.instance_id());
      }
      EXPECT_GE(clean, 1);
    }
  }
}

TEST(SynthTest, RealValuedTruthProducesGeneralLabels) {
  SynthConfig c = BaseConfig();
  c.real_valued_truth = true;
  const SynthResult r = Make(c);
  EXPECT_FALSE(r.dataset.binary_labels());
  for (const Bag& bag : r.dataset.bags) {
    double peak = 0.0;
    for (const CandidateSet& inst : bag.instances) {
      const double t = r.truth.at(inst.instance_id());
      EXPECT_GE(t, 0.0);
      EXPECT_LE(t, 1.0);
      peak = std::max(peak, t);
    }
    EXPECT_EQ(bag.label, peak);
    EXPECT_EQ(bag.positive(), bag.bag_id < "b10") << bag.bag_id;
  }
  // Positive bags are fit exactly by their peak instance.
  const ObjectiveBreakdown br = TotalObjectiveGeneral(r.generating_measure, r.dataset);
  EXPECT_EQ(br.positive_term, 0.0);
}

TEST(SynthTest, DeterministicUnderSeed) {
  const SynthConfig c = BaseConfig();
  const SynthResult a = Make(c);
  const SynthResult b = Make(c);
  EXPECT_EQ(a.dataset, b.dataset);
  EXPECT_EQ(a.truth, b.truth);
  EXPECT_EQ(a.generating_measure, b.generating_measure);
  SynthConfig other = c;
  other.seed = 6;
  EXPECT_FALSE(Make(other).dataset == a.dataset);
}

TEST(SynthTest, ConfigJsonRoundTrip) {
  SynthConfig c = BaseConfig();
  c.measure_kind = "explicit";
  c.measure = FuzzyMeasure(2, {0.3, 0.6, 1.0});
  c.num_sources = 2;
  const SynthConfig back = SynthConfigFromJson(SynthConfigToJson(c));
  EXPECT_EQ(SynthConfigToJson(back), SynthConfigToJson(c));
  EXPECT_EQ(*back.measure, *c.measure);
}

TEST(SynthTest, ConfigRejectsBadInput) {
  EXPECT_THROW(SynthConfigFromJson({{"bogus", 1}}), ParseError);
  EXPECT_THROW(SynthConfigFromJson({{"measure", 3}}), ParseError);
  SynthConfig c = BaseConfig();
  c.negative_bags = 0;
  EXPECT_THROW(c.Validate(), ContractError);
  c = BaseConfig();
  c.measure_kind = "explicit";
  c.measure = FuzzyMeasure(3, {0.5, 0.1, 0.4, 0.2, 0.3, 0.2, 1.0});
  EXPECT_THROW(c.Validate(), ContractError);
}

}  // namespace
}  // namespace mimrf
