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

#include "mimrf/rng.h"

#include "mimrf/error.h"

namespace mimrf {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::Derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = SplitMix64(seed);
  h = SplitMix64(h ^ SplitMix64(a + 0x632BE59BD9B4E019ULL));
  h = SplitMix64(h ^ SplitMix64(b + 0x8CB92BA72F3D8DD7ULL));
  return Rng(h);
}

double Rng::UniformOpen() {
  double u = 0.0;
  do {
    u = Uniform();
  } while (u == 0.0);
  return u;
}

std::uint64_t Rng::UniformInt(std::uint64_t n) {
  if (n == 0) throw ContractError("UniformInt: n must be positive");
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % n;
}

}  // namespace mimrf
