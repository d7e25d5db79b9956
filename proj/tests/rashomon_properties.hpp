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

// One randomized trial of the Rashomon set / envelope properties, shared by
// the unit tests and the acceptance suite. Returns an empty string on
// success, otherwise a description of the first violated property.

#ifndef RSURV_TESTS_RASHOMON_PROPERTIES_HPP_
#define RSURV_TESTS_RASHOMON_PROPERTIES_HPP_

#include <map>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rsurv/rashomon.hpp"

namespace rsurv::props {

inline std::string rashomon_trial(Rng& rng) {
  const int n_models = 1 + int(uniform_index(rng, 10));
  std::vector<RashomonMember> scored;
  std::map<std::string, SurvivalCurve> curves;
  for (int m = 0; m < n_models; ++m) {
    const std::string id = "m" + std::to_string(m);
    // Dyadic losses on a coarse lattice so ties and shifts are exact.
    scored.push_back({id, double(uniform_index(rng, 64)) / 256.0});
    curves.emplace(id, oracle::random_curve(rng, 1 + Index(uniform_index(rng, 8))));
  }
  VectorXd grid(10);
  for (Index i = 0; i < 10; ++i) grid[i] = 0.9 * double(i + 1);

  // Best model is a member; members respect the threshold.
  std::vector<double> eps{0.0};
  for (int k = 1; k < 20; ++k) eps.push_back(double(k) / 64.0 * uniform_unit(rng) + eps.back());
  std::vector<RashomonSet> sets;
  for (double e : eps) {
    const auto set = build_rashomon_set(scored, e, "c_index");
    if (!set.contains(set.best_model_id)) return "best model missing at eps " + std::to_string(e);
    double min_loss = scored[0].loss;
    for (const auto& s : scored) min_loss = std::min(min_loss, s.loss);
    if (set.best_loss != min_loss) return "best_loss is not the minimum";
    for (const auto& s : scored) {
      const bool in = s.loss <= min_loss + e;
      if (in != set.contains(s.model_id)) return "membership differs from direct scan for " + s.model_id;
    }
    for (std::size_t k = 1; k < set.members.size(); ++k) {
      const auto& a = set.members[k - 1];
      const auto& b = set.members[k];
      if (a.loss > b.loss || (a.loss == b.loss && a.model_id > b.model_id)) return "members not sorted";
    }
    sets.push_back(set);
  }
  // Monotone in eps.
  for (std::size_t k = 1; k < sets.size(); ++k) {
    for (const auto& m : sets[k - 1].members) {
      if (!sets[k].contains(m.model_id)) return "eps-monotonicity violated";
    }
  }
  // Shifting every loss by a constant keeps membership.
  {
    const double shift = double(uniform_index(rng, 32)) / 16.0;
    auto shifted = scored;
    for (auto& s : shifted) s.loss += shift;
    const auto a = build_rashomon_set(scored, eps[5], "c_index");
    const auto b = build_rashomon_set(shifted, eps[5], "c_index");
    if (a.size() != b.size()) return "shift changed membership";
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a.members[k].model_id != b.members[k].model_id) return "shift changed membership";
    }
  }
  // Envelope containment, bounds and monotone bounds.
  const auto& set = sets[10];
  std::map<std::string, SurvivalCurve> member_curves;
  for (const auto& m : set.members) member_curves.emplace(m.model_id, curves.at(m.model_id));
  const auto env = envelope_from_curves(member_curves, set.best_model_id, grid);
  for (Index i = 0; i < grid.size(); ++i) {
    double lo = 1.0, hi = 0.0;
    for (const auto& [id, c] : member_curves) {
      const double v = curve_eval(c, grid[i]);
      if (v < env.lower[i] || v > env.upper[i]) return "member curve escapes the envelope";
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (env.lower[i] != lo || env.upper[i] != hi) return "envelope differs from exhaustive min/max";
    if (!(0.0 <= env.lower[i] && env.lower[i] <= env.upper[i] && env.upper[i] <= 1.0)) {
      return "envelope bounds out of order";
    }
    const double ref = curve_eval(env.reference, grid[i]);
    if (ref < env.lower[i] || ref > env.upper[i]) return "reference escapes the envelope";
    if (i > 0 && (env.lower[i] > env.lower[i - 1] || env.upper[i] > env.upper[i - 1])) {
      return "envelope bounds increase in time";
    }
  }
  // Adding a member never shrinks the envelope.
  for (const auto& [id, c] : curves) {
    if (member_curves.count(id)) continue;
    auto grown = member_curves;
    grown.emplace(id, c);
    const auto wider = envelope_from_curves(grown, set.best_model_id, grid);
    for (Index i = 0; i < grid.size(); ++i) {
      if (wider.lower[i] > env.lower[i] || wider.upper[i] < env.upper[i]) {
        return "adding a member shrank the envelope";
      }
    }
    break;
  }
  // Singleton set has zero width.
  {
    const auto single = build_rashomon_set(std::vector<RashomonMember>{{"solo", 0.1}}, 0.05, "c_index");
    const auto env1 = envelope_from_curves({{"solo", curves.begin()->second}}, "solo", grid);
    if (single.size() != 1) return "singleton set has the wrong size";
    const auto stats = envelope_stats(env1, VectorXd());
    if (stats.max_width != 0.0 || stats.mean_width != 0.0) return "singleton envelope has width";
    if (env1.lower != env1.upper) return "singleton lower != upper";
  }
  return "";
}

}  // namespace rsurv::props

#endif  // RSURV_TESTS_RASHOMON_PROPERTIES_HPP_
