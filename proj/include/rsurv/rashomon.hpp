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

// Rashomon survival sets and the survival envelope they induce.
//
// Given per-model losses L(f), the Rashomon set at margin eps is
//
//   R(eps) = { f : L(f) <= L(f*) + eps },   f* = argmin L,
//
// and the envelope of its members' survival predictions at time t is
//
//   [ min_{f in R} S_f(t), max_{f in R} S_f(t) ].
//
// Two losses are supported: "c_index" (L = 1 - C, so membership reads
// C(f) >= C(f*) - eps) and "integrated_brier".

#ifndef RSURV_RASHOMON_HPP_
#define RSURV_RASHOMON_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rsurv/core.hpp"
#include "rsurv/eval.hpp"
#include "rsurv/models.hpp"

namespace rsurv {

struct RashomonMember {
  std::string model_id;
  double loss = 0.0;

  friend bool operator==(const RashomonMember&, const RashomonMember&) = default;
};

struct RashomonSet {
  double epsilon = 0.0;
  std::string loss_name;
  std::string best_model_id;
  double best_loss = 0.0;
  std::vector<RashomonMember> members;  // ascending loss, ties by model_id

  std::size_t size() const { return members.size(); }
  bool contains(const std::string& model_id) const;
};

// Loss of a record under `loss_name`; throws InvalidArgument for unknown names.
double record_loss(const EvaluationRecord& record, const std::string& loss_name);

// Generic filter over (model_id, loss) pairs. Boundary ties are members, up to a
// relative rounding slack of 1e-12.
RashomonSet build_rashomon_set(std::vector<RashomonMember> scored, double epsilon,
                               std::string loss_name);
RashomonSet build_rashomon_set(const std::vector<EvaluationRecord>& records, double epsilon,
                               const std::string& loss_name);

struct RashomonEnvelope {
  VectorXd grid;
  VectorXd lower;
  VectorXd upper;
  SurvivalCurve reference;  // best model's curve on `grid`
  std::map<std::string, SurvivalCurve> member_curves;
};

// Pointwise min / max over member curves already restricted to `grid`.
// `reference_id` must be a key of `member_curves`.
RashomonEnvelope envelope_from_curves(std::map<std::string, SurvivalCurve> member_curves,
                                      const std::string& reference_id, const VectorXd& grid);

// Individual mode: member curves are S_f(t | x).
RashomonEnvelope build_envelope(const RashomonSet& set, const std::vector<ModelPtr>& models,
                                const VectorXd& x, const VectorXd& grid);

// Population mode: member curves are the mean of S_f(t | x_i) over every row
// of `population`.
RashomonEnvelope build_envelope(const RashomonSet& set, const std::vector<ModelPtr>& models,
                                const TimeToEventDataset& population, const VectorXd& grid);

struct EnvelopeStats {
  std::map<double, double> width_at;  // at the probe times
  double mean_width = 0.0;            // over grid points
  double max_width = 0.0;
  double argmax_time = 0.0;           // earliest grid time attaining max_width
};

// Widths upper - lower, read as step functions at each probe time. Probe
// times outside [grid.front(), grid.back()] throw InvalidArgument.
EnvelopeStats envelope_stats(const RashomonEnvelope& env, const VectorXd& probe_times);

}  // namespace rsurv

#endif  // RSURV_RASHOMON_HPP_
