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

// Slow, direct reference implementations used only by the tests. None of
// them shares code with the library beyond the core data types.

#ifndef RSURV_TESTS_ORACLES_HPP_
#define RSURV_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "rsurv/core.hpp"
#include "rsurv/random.hpp"

namespace rsurv::oracle {

// Harrell pair enumeration. Returns (2 * concordant + tied, comparable) so
// the ratio is exact in integers.
inline std::pair<std::int64_t, std::int64_t> brute_c_index(const VectorXd& risk,
                                                           const VectorXd& times,
                                                           const BoolArray& events) {
  std::int64_t twice = 0, pairs = 0;
  for (Index i = 0; i < risk.size(); ++i) {
    for (Index j = 0; j < risk.size(); ++j) {
      if (!(events[i] && times[i] < times[j])) continue;
      ++pairs;
      if (risk[i] > risk[j]) {
        twice += 2;
      } else if (risk[i] == risk[j]) {
        twice += 1;
      }
    }
  }
  return {twice, pairs};
}

// Product-limit value at time t by walking every distinct event time <= t.
inline double km_at(const std::vector<double>& times, const std::vector<bool>& events, double t) {
  std::set<double> event_times;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (events[i]) event_times.insert(times[i]);
  }
  double s = 1.0;
  for (double u : event_times) {
    if (u > t) break;
    double d = 0, n = 0;
    for (std::size_t i = 0; i < times.size(); ++i) {
      if (times[i] >= u) ++n;
      if (times[i] == u && events[i]) ++d;
    }
    s *= 1.0 - d / n;
  }
  return s;
}

inline double na_at(const std::vector<double>& times, const std::vector<bool>& events, double t) {
  std::set<double> event_times;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (events[i]) event_times.insert(times[i]);
  }
  double h = 0.0;
  for (double u : event_times) {
    if (u > t) break;
    double d = 0, n = 0;
    for (std::size_t i = 0; i < times.size(); ++i) {
      if (times[i] >= u) ++n;
      if (times[i] == u && events[i]) ++d;
    }
    h += d / n;
  }
  return h;
}

// Two-sample log-rank chi-square for the rows of `node` split by
// x(row, feature) <= threshold.
inline double logrank(const MatrixXd& x, const VectorXd& times, const BoolArray& events,
                      const std::vector<Index>& node, Index feature, double threshold) {
  std::set<double> event_times;
  for (Index r : node) {
    if (events[r]) event_times.insert(times[r]);
  }
  double num = 0.0, var = 0.0;
  for (double u : event_times) {
    double y = 0, yl = 0, d = 0, dl = 0;
    for (Index r : node) {
      const bool left = x(r, feature) <= threshold;
      if (times[r] >= u) {
        ++y;
        if (left) ++yl;
      }
      if (times[r] == u && events[r]) {
        ++d;
        if (left) ++dl;
      }
    }
    num += dl - yl * d / y;
    if (y > 1) var += (yl / y) * (1 - yl / y) * (y - d) / (y - 1) * d;
  }
  return var > 0 ? num * num / var : 0.0;
}

// Exponential proportional-hazards sample with independent exponential
// censoring: hazard exp(beta' x), censoring rate `censor_rate`.
inline TimeToEventDataset simulate_cox(Index n, const VectorXd& beta, double censor_rate,
                                       std::uint64_t seed) {
  Rng rng(seed);
  const Index p = beta.size();
  MatrixXd x(n, p);
  VectorXd t(n);
  BoolArray e(n);
  std::vector<std::string> ids;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < p; ++j) x(i, j) = standard_normal(rng);
    const double rate = std::exp(x.row(i).dot(beta));
    const double tf = -std::log(1.0 - uniform_unit(rng)) / rate;
    const double tc = censor_rate > 0 ? -std::log(1.0 - uniform_unit(rng)) / censor_rate
                                      : std::numeric_limits<double>::infinity();
    t[i] = std::min(tf, tc);
    e[i] = tf <= tc;
    ids.push_back("u" + std::to_string(i));
  }
  std::vector<std::string> names;
  for (Index j = 0; j < p; ++j) names.push_back("x" + std::to_string(j));
  return TimeToEventDataset(ids, t, e, x, names);
}

// Feature 0 decides the group: x0 < 0 fails near t = 10, otherwise near
// t = 100. Remaining features are noise. About 10% random censoring.
inline TimeToEventDataset two_group_data(Index n, Index p, std::uint64_t seed) {
  Rng rng(seed);
  MatrixXd x(n, p);
  VectorXd t(n);
  BoolArray e(n);
  std::vector<std::string> ids, names;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < p; ++j) x(i, j) = standard_normal(rng);
    const double base = x(i, 0) < 0 ? 10.0 : 100.0;
    t[i] = base * (0.8 + 0.4 * uniform_unit(rng));
    e[i] = uniform_unit(rng) >= 0.1;
    ids.push_back("u" + std::to_string(i));
  }
  for (Index j = 0; j < p; ++j) names.push_back("x" + std::to_string(j));
  return TimeToEventDataset(ids, t, e, x, names);
}

// A random valid survival curve on `k` increasing positive times.
inline SurvivalCurve random_curve(Rng& rng, Index k) {
  VectorXd t(k), s(k);
  double time = 0.0, prob = 1.0;
  for (Index i = 0; i < k; ++i) {
    time += 0.25 + uniform_unit(rng);
    prob *= uniform_unit(rng) * 0.3 + 0.7;
    t[i] = time;
    s[i] = prob;
  }
  return SurvivalCurve(t, s);
}

}  // namespace rsurv::oracle

#endif  // RSURV_TESTS_ORACLES_HPP_
