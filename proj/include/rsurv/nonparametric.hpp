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

// Risk-set bookkeeping plus the product-limit and cumulative-hazard
// estimators built on it.

#ifndef RSURV_NONPARAMETRIC_HPP_
#define RSURV_NONPARAMETRIC_HPP_

#include <span>

#include "rsurv/core.hpp"

namespace rsurv {

// Distinct event times with their death counts d_k and risk-set sizes n_k.
struct EventTable {
  VectorXd times;
  VectorXd deaths;
  VectorXd at_risk;

  Index size() const { return times.size(); }
};

// Built from all subjects, or from the (possibly repeating) `sample` indices.
EventTable event_table(const VectorXd& times, const BoolArray& events);
EventTable event_table(const VectorXd& times, const BoolArray& events,
                       std::span<const Index> sample);

// S(t) = prod_{t_k <= t} (1 - d_k / n_k).
SurvivalCurve product_limit(const EventTable& table);

// Right-continuous non-decreasing step function H(t), 0 before the first time.
struct CumulativeHazard {
  VectorXd times;
  VectorXd values;

  double operator()(double t) const;
  SurvivalCurve survival() const;  // exp(-H)
};

// H(t) = sum_{t_k <= t} d_k / n_k.
CumulativeHazard hazard_sum(const EventTable& table);

// Kaplan-Meier of the censoring distribution G(t) = P(C > t): event
// indicators are flipped. Returns S == 1 when nothing is censored.
SurvivalCurve censoring_survival(const VectorXd& times, const BoolArray& events);

}  // namespace rsurv

#endif  // RSURV_NONPARAMETRIC_HPP_
