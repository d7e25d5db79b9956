/*
 * Copyright 2026 The rashomon-surv Authors.
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

// Portable deterministic sampling helpers. std::mt19937_64 output is fixed by
// the standard but the <random> distributions are not, so everything that
// must be bitwise reproducible across toolchains goes through these.

#ifndef RSURV_RANDOM_HPP_
#define RSURV_RANDOM_HPP_

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace rsurv {

using Rng = std::mt19937_64;

// SplitMix64 step; used to derive independent child seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform integer in [0, n) by rejection; n > 0.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) { return double(rng() >> 11) * 0x1.0p-53; }

// Standard normal via Box-Muller (one draw per call, the pair's twin dropped).
inline double standard_normal(Rng& rng) {
  double u1;
  do {
    u1 = uniform_unit(rng);
  } while (u1 <= 0.0);
  const double u2 = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

// Fisher-Yates permutation of 0..n-1.
template <typename Int>
std::vector<Int> random_permutation(Rng& rng, Int n) {
  std::vector<Int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), Int(0));
  for (std::size_t i = p.size(); i > 1; --i) {
    std::swap(p[i - 1], p[uniform_index(rng, i)]);
  }
  return p;
}

}  // namespace rsurv

#endif  // RSURV_RANDOM_HPP_
