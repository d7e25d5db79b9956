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

#include "rsurv/rashomon.hpp"

#include <algorithm>
#include <cmath>

#include "rsurv/parallel.hpp"

namespace rsurv {

bool RashomonSet::contains(const std::string& model_id) const {
  return std::any_of(members.begin(), members.end(),
                     [&](const RashomonMember& m) { return m.model_id == model_id; });
}

double record_loss(const EvaluationRecord& record, const std::string& loss_name) {
  if (loss_name == "c_index") return 1.0 - record.c_index;
  if (loss_name == "integrated_brier") return record.integrated_brier;
  throw InvalidArgument("unknown Rashomon loss '" + loss_name +
                        "' (expected c_index or integrated_brier)");
}

RashomonSet build_rashomon_set(std::vector<RashomonMember> scored, double epsilon,
                               std::string loss_name) {
  if (scored.empty()) throw InvalidArgument("build_rashomon_set: no scored models");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw InvalidArgument("build_rashomon_set: epsilon must be finite and >= 0");
  }
  for (const auto& m : scored) {
    if (!std::isfinite(m.loss)) {
      throw InvalidArgument("build_rashomon_set: non-finite loss for " + m.model_id);
    }
  }
  std::sort(scored.begin(), scored.end(), [](const RashomonMember& a, const RashomonMember& b) {
    return a.loss != b.loss ? a.loss < b.loss : a.model_id < b.model_id;
  });
  RashomonSet set;
  set.epsilon = epsilon;
  set.loss_name = std::move(loss_name);
  set.best_model_id = scored.front().model_id;
  set.best_loss = scored.front().loss;
  // Boundary ties are members. The slack absorbs rounding in 1 - C and in the
  // sum so that decimal ties such as C = 0.85 against 0.90 at eps = 0.05 hold.
  const double threshold =
      set.best_loss + epsilon + 1e-12 * std::max(1.0, std::abs(set.best_loss + epsilon));
  for (auto& m : scored) {
    if (m.loss <= threshold) set.members.push_back(std::move(m));
  }
  return set;
}

RashomonSet build_rashomon_set(const std::vector<EvaluationRecord>& records, double epsilon,
                               const std::string& loss_name) {
  std::vector<RashomonMember> scored;
  scored.reserve(records.size());
  for (const auto& r : records) scored.push_back({r.model_id, record_loss(r, loss_name)});
  return build_rashomon_set(std::move(scored), epsilon, loss_name);
}

RashomonEnvelope envelope_from_curves(std::map<std::string, SurvivalCurve> member_curves,
                                      const std::string& reference_id, const VectorXd& grid) {
  validate_grid(grid);
  if (member_curves.empty()) throw InvalidArgument("envelope: no member curves");
  auto ref = member_curves.find(reference_id);
  if (ref == member_curves.end()) {
    throw InvalidArgument("envelope: reference model " + reference_id + " has no curve");
  }
  RashomonEnvelope env;
  env.grid = grid;
  env.lower = VectorXd::Ones(grid.size());
  env.upper = VectorXd::Zero(grid.size());
  for (const auto& [id, curve] : member_curves) {
    for (Index i = 0; i < grid.size(); ++i) {
      const double s = curve_eval(curve, grid[i]);
      env.lower[i] = std::min(env.lower[i], s);
      env.upper[i] = std::max(env.upper[i], s);
    }
  }
  env.reference = curve_restrict(ref->second, grid);
  env.member_curves = std::move(member_curves);
  return env;
}

namespace {

std::vector<const FittedModel*> resolve_members(const RashomonSet& set,
                                                const std::vector<ModelPtr>& models) {
  std::vector<const FittedModel*> out;
  for (const auto& m : set.members) {
    auto it = std::find_if(models.begin(), models.end(),
                           [&](const ModelPtr& p) { return p && p->id() == m.model_id; });
    if (it == models.end()) {
      throw InvalidArgument("envelope: Rashomon member " + m.model_id + " not among the models");
    }
    out.push_back(it->get());
  }
  return out;
}

}  // namespace

RashomonEnvelope build_envelope(const RashomonSet& set, const std::vector<ModelPtr>& models,
                                const VectorXd& x, const VectorXd& grid) {
  validate_grid(grid);
  const auto members = resolve_members(set, models);
  std::map<std::string, SurvivalCurve> curves;
  for (const FittedModel* m : members) curves.emplace(m->id(), predict_survival(*m, x, grid));
  return envelope_from_curves(std::move(curves), set.best_model_id, grid);
}

RashomonEnvelope build_envelope(const RashomonSet& set, const std::vector<ModelPtr>& models,
                                const TimeToEventDataset& population, const VectorXd& grid) {
  validate_grid(grid);
  if (population.size() == 0) throw InvalidArgument("envelope: empty population");
  const auto members = resolve_members(set, models);
  std::vector<SurvivalCurve> means(members.size());
  parallel_for(members.size(), [&](std::size_t k) {
    std::vector<SurvivalCurve> per_unit;
    per_unit.reserve(std::size_t(population.size()));
    for (Index i = 0; i < population.size(); ++i) {
      per_unit.push_back(
          predict_survival(*members[k], population.covariates().row(i).transpose(), grid));
    }
    means[k] = mean_curve<double>(per_unit, grid);
  });
  std::map<std::string, SurvivalCurve> curves;
  for (std::size_t k = 0; k < members.size(); ++k) {
    curves.emplace(members[k]->id(), std::move(means[k]));
  }
  return envelope_from_curves(std::move(curves), set.best_model_id, grid);
}

EnvelopeStats envelope_stats(const RashomonEnvelope& env, const VectorXd& probe_times) {
  validate_grid(env.grid);
  if (env.lower.size() != env.grid.size() || env.upper.size() != env.grid.size()) {
    throw InvalidArgument("envelope_stats: bounds and grid differ in length");
  }
  const VectorXd width = env.upper - env.lower;
  EnvelopeStats stats;
  stats.mean_width = width.mean();
  Index arg = 0;
  stats.max_width = width[0];
  for (Index i = 1; i < width.size(); ++i) {
    if (width[i] > stats.max_width) {
      stats.max_width = width[i];
      arg = i;
    }
  }
  stats.argmax_time = env.grid[arg];
  const double lo = env.grid[0];
  const double hi = env.grid[env.grid.size() - 1];
  for (Index k = 0; k < probe_times.size(); ++k) {
    const double t = probe_times[k];
    if (!(t >= lo && t <= hi)) {
      throw InvalidArgument("envelope_stats: probe time " + std::to_string(t) +
                            " outside the grid span");
    }
    const double* first = env.grid.data();
    const Index i = Index(std::upper_bound(first, first + env.grid.size(), t) - first) - 1;
    stats.width_at[t] = width[i];
  }
  return stats;
}

}  // namespace rsurv
