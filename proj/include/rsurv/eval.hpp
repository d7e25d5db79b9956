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

// Scoring: Harrell's concordance index and the IPCW Brier score.

#ifndef RSURV_EVAL_HPP_
#define RSURV_EVAL_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rsurv/core.hpp"
#include "rsurv/models.hpp"

namespace rsurv {

struct Concordance {
  double c_index = 0.0;
  std::int64_t comparable_pairs = 0;
  std::int64_t concordant = 0;
  std::int64_t tied_risk = 0;
};

// Pairs (i, j) with times[i] < times[j] and events[i] are comparable; the pair
// is concordant when risk[i] > risk[j] and earns half credit on tied risk.
// Tied times are never comparable. O(n log n).
// Throws InvalidArgument on length mismatch and DegenerateData without any
// comparable pair.
Concordance c_index(const VectorXd& risk, const VectorXd& times, const BoolArray& events);

// IPCW Brier score at time t:
//   mean_i w_i (1{T_i > t} - S(t | x_i))^2
// with w_i = 1 / G(t) when T_i > t, 1 / G(T_i-) for events at T_i <= t and 0
// for censoring at T_i <= t. `censoring` is G, the censoring-distribution
// Kaplan-Meier fitted on training data.
double brier_score(const FittedModel& model, const TimeToEventDataset& test, double t,
                   const SurvivalCurve& censoring);

// Trapezoidal time-average of a Brier curve over its horizons; a single
// horizon returns that value.
double integrated_brier_score(const std::map<double, double>& brier_at);

struct EvaluationRecord {
  std::string model_id;
  double c_index = 0.0;
  std::int64_t n_comparable_pairs = 0;
  std::map<double, double> brier_at;
  double integrated_brier = 0.0;
};

struct EvaluationOptions {
  // Horizon used by curve-only models to turn S(t | x) into a risk score.
  double risk_horizon = 0.0;
  // Brier evaluation times; also the integration grid.
  VectorXd brier_horizons;
};

// One record per model, sorted by model_id. A failing metric is rethrown as
// Error naming the model.
std::vector<EvaluationRecord> evaluate_zoo(const std::vector<ModelPtr>& models,
                                           const TimeToEventDataset& test,
                                           const SurvivalCurve& censoring,
                                           const EvaluationOptions& options);

}  // namespace rsurv

#endif  // RSURV_EVAL_HPP_
