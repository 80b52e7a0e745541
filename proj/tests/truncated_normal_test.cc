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

#include <gtest/gtest.h>

#include <cmath>

#include "mimrf/error.h"

namespace mimrf {
namespace {

TEST(TruncatedNormalTest, QuantileInvertsCdf) {
  for (double z : {-6.0, -2.5, -0.3, 0.0, 0.7, 3.1}) {
    EXPECT_NEAR(NormalQuantile(NormalCdf(z)), z, 1e-9);
  }
  EXPECT_THROW(NormalQuantile(0.0), ContractError);
  EXPECT_THROW(NormalQuantile(1.0), ContractError);
}

TEST(TruncatedNormalTest, SymmetricIntervalKeepsTheMean) {
  Rng rng(2024);
  double sum = 0.0;
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    const double v = SampleTruncatedGaussian(0.5, 0.1, 0.0, 1.0, rng);
    ASSERT_GE(v, 0.0);
    ASSERT_LE(v, 1.0);
    sum += v;
  }
  EXPECT_NEAR(sum / kDraws, 0.5, 0.01);
}

TEST(TruncatedNormalTest, DegenerateInterval) {
  Rng rng(1);
  EXPECT_EQ(SampleTruncatedGaussian(0.9, 0.1, 0.3, 0.3, rng), 0.3);
}

TEST(TruncatedNormalTest, StaysInsideAnIntervalAwayFromTheMean) {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double v = SampleTruncatedGaussian(0.9, 0.1, 0.0, 0.2, rng);
    ASSERT_GE(v, 0.0);
    ASSERT_LE(v, 0.2);
  }
}

TEST(TruncatedNormalTest, FarTailIntervalStaysBounded) {
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    const double v = SampleTruncatedGaussian(0.0, 1e-4, 0.9, 1.0, rng);
    ASSERT_GE(v, 0.9);
    ASSERT_LE(v, 1.0);
    const double w = SampleTruncatedGaussian(1.0, 1e-4, 0.0, 0.1, rng);
    ASSERT_GE(w, 0.0);
    ASSERT_LE(w, 0.1);
  }
}

TEST(TruncatedNormalTest, TailSideMatchesTruncatedMean) {
  // Mean of N(0,1) truncated to [a, b] is (phi(a) - phi(b)) / (Phi(b) - Phi(a)).
  const double a = 1.0, b = 2.0;
  const double phi_a = std::exp(-0.5 * a * a) / std::sqrt(2 * M_PI);
  const double phi_b = std::exp(-0.5 * b * b) / std::sqrt(2 * M_PI);
  const double expected = (phi_a - phi_b) / (NormalCdf(b) - NormalCdf(a));
  Rng rng(5);
  double sum = 0.0;
  constexpr int kDraws = 200000;
  for (int i = 0; i < kDraws; ++i) sum += SampleTruncatedGaussian(0.0, 1.0, a, b, rng);
  EXPECT_NEAR(sum / kDraws, expected, 0.005);
}

TEST(TruncatedNormalTest, RejectsBadArguments) {
  Rng rng(6);
  EXPECT_THROW(SampleTruncatedGaussian(0.5, 0.0, 0.0, 1.0, rng), ContractError);
  EXPECT_THROW(SampleTruncatedGaussian(0.5, -1.0, 0.0, 1.0, rng), ContractError);
  EXPECT_THROW(SampleTruncatedGaussian(0.5, 0.1, 0.6, 0.4, rng), ContractError);
}

}  // namespace
}  // namespace mimrf
