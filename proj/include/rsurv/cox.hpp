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

// Cox proportional hazards: Breslow partial likelihood, penalized fitting and
// the Breslow baseline cumulative hazard.
//
// The fitted objective is
//
//   F(beta) = l(beta) / n - (l2 / 2) * |beta|_2^2 - l1 * |beta|_1
//
// where l is the Breslow log partial likelihood and n the number of rows, so
// penalty strengths are comparable across sample sizes.

#ifndef RSURV_COX_HPP_
#define RSURV_COX_HPP_

#include "rsurv/core.hpp"
#include "rsurv/nonparametric.hpp"

namespace rsurv {

struct PartialLikelihood {
  double value = 0.0;
  VectorXd gradient;
  MatrixXd hessian;  // empty unless requested
};

// Breslow log partial likelihood l(beta) with its gradient and, optionally,
// Hessian. Risk sets use T_j >= T_i, so tied times share one risk set.
PartialLikelihood cox_partial_likelihood(const MatrixXd& x, const VectorXd& times,
                                         const BoolArray& events, const VectorXd& beta,
                                         bool with_hessian = true);

// d l / d eta_i = delta_i - exp(eta_i) * Lambda0(T_i), the Cox martingale
// residuals at linear predictor `eta`.
VectorXd cox_eta_gradient(const VectorXd& times, const BoolArray& events, const VectorXd& eta);

// Breslow estimate of H0 at each distinct event time for linear predictor eta.
CumulativeHazard breslow_baseline(const VectorXd& times, const BoolArray& events,
                                  const VectorXd& eta);

struct CoxOptions {
  double l2 = 0.0;
  double l1 = 0.0;
  int max_iterations = 100;
  double gradient_tolerance = 1e-8;
};

struct CoxFit {
  VectorXd beta;
  CumulativeHazard baseline;
  int iterations = 0;
  double gradient_norm = 0.0;
};

// Newton-Raphson with step halving when l1 == 0; proximal Newton with
// coordinate-wise soft thresholding otherwise.
//
// Throws DegenerateData without events or when the unpenalized likelihood
// keeps increasing along the fitted direction (monotone likelihood, usually
// separation), and ConvergenceError past `max_iterations`.
CoxFit fit_cox_coefficients(const TimeToEventDataset& data, const CoxOptions& options);

// Penalized objective F(beta) as fitted above.
double cox_objective(const TimeToEventDataset& data, const VectorXd& beta, double l2, double l1);

}  // namespace rsurv

#endif  // RSURV_COX_HPP_
