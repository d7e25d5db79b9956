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

#include "rsurv/cox.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace rsurv {
namespace {

// Indices ordered by decreasing time.
std::vector<Index> descending_time_order(const VectorXd& times) {
  std::vector<Index> order(std::size_t(times.size()));
  std::iota(order.begin(), order.end(), Index(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return times[a] > times[b]; });
  return order;
}

double soft_threshold(double z, double gamma) {
  if (z > gamma) return z - gamma;
  if (z < -gamma) return z + gamma;
  return 0.0;
}

// Largest violation of the (sub)gradient optimality conditions of F.
double kkt_violation(const VectorXd& grad, const VectorXd& beta, double l1) {
  double worst = 0.0;
  for (Index k = 0; k < beta.size(); ++k) {
    double v;
    if (beta[k] > 0.0) {
      v = std::abs(grad[k] - l1);
    } else if (beta[k] < 0.0) {
      v = std::abs(grad[k] + l1);
    } else {
      v = std::max(0.0, std::abs(grad[k]) - l1);
    }
    worst = std::max(worst, v);
  }
  return worst;
}

// Minimizer over z of the penalized quadratic model
//   -grad'(z - beta) + (z - beta)' curvature (z - beta) / 2 + l1 |z|_1
// by cyclic coordinate descent.
VectorXd proximal_target(const MatrixXd& curvature, const VectorXd& grad, const VectorXd& beta,
                         double l1) {
  const Index p = beta.size();
  // A flat coordinate still needs a finite step; floor its curvature.
  const double floor = 1e-10 * std::max(1.0, curvature.diagonal().cwiseAbs().maxCoeff());
  VectorXd z = beta;
  VectorXd curv_step = VectorXd::Zero(p);  // curvature * (z - beta)
  for (int sweep = 0; sweep < 1000; ++sweep) {
    double largest = 0.0;
    for (Index k = 0; k < p; ++k) {
      const double a = std::max(curvature(k, k), floor);
      const double slope = grad[k] - curv_step[k];
      const double updated = soft_threshold(a * z[k] + slope, l1) / a;
      const double delta = updated - z[k];
      if (delta != 0.0) {
        z[k] = updated;
        curv_step.noalias() += curvature.col(k) * delta;
        largest = std::max(largest, std::abs(delta));
      }
    }
    if (largest < 1e-13) break;
  }
  return z;
}

}  // namespace

PartialLikelihood cox_partial_likelihood(const MatrixXd& x, const VectorXd& times,
                                         const BoolArray& events, const VectorXd& beta,
                                         bool with_hessian) {
  const Index n = x.rows();
  const Index p = x.cols();
  if (times.size() != n || events.size() != n || beta.size() != p) {
    throw InvalidArgument("cox_partial_likelihood: dimension mismatch");
  }
  PartialLikelihood out;
  out.gradient = VectorXd::Zero(p);
  if (with_hessian) out.hessian = MatrixXd::Zero(p, p);
  if (n == 0) return out;

  const VectorXd eta = x * beta;
  const double shift = eta.maxCoeff();
  const auto order = descending_time_order(times);

  double s0 = 0.0;
  VectorXd s1 = VectorXd::Zero(p);
  MatrixXd s2 = MatrixXd::Zero(with_hessian ? p : 0, with_hessian ? p : 0);
  std::size_t i = 0;
  while (i < order.size()) {
    const double t = times[order[i]];
    std::size_t j = i;
    for (; j < order.size() && times[order[j]] == t; ++j) {
      const Index r = order[j];
      const double w = std::exp(eta[r] - shift);
      s0 += w;
      s1.noalias() += w * x.row(r).transpose();
      if (with_hessian) s2.noalias() += w * x.row(r).transpose() * x.row(r);
    }
    const VectorXd mean = s1 / s0;
    const double log_s0 = std::log(s0) + shift;
    for (std::size_t k = i; k < j; ++k) {
      const Index r = order[k];
      if (!events[r]) continue;
      out.value += eta[r] - log_s0;
      out.gradient.noalias() += x.row(r).transpose() - mean;
      if (with_hessian) out.hessian.noalias() -= s2 / s0 - mean * mean.transpose();
    }
    i = j;
  }
  return out;
}

CumulativeHazard breslow_baseline(const VectorXd& times, const BoolArray& events,
                                  const VectorXd& eta) {
  const auto order = descending_time_order(times);
  // Walk backwards in time accumulating risk-set weights, then forward sum.
  std::vector<double> t_desc, inc_desc;
  double s0 = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    const double t = times[order[i]];
    double deaths = 0.0;
    std::size_t j = i;
    for (; j < order.size() && times[order[j]] == t; ++j) {
      s0 += std::exp(eta[order[j]]);
      if (events[order[j]]) deaths += 1.0;
    }
    if (deaths > 0.0) {
      t_desc.push_back(t);
      inc_desc.push_back(deaths / s0);
    }
    i = j;
  }
  const Index m = Index(t_desc.size());
  CumulativeHazard h;
  h.times.resize(m);
  h.values.resize(m);
  double acc = 0.0;
  for (Index k = 0; k < m; ++k) {
    const std::size_t src = std::size_t(m - 1 - k);
    acc += inc_desc[src];
    h.times[k] = t_desc[src];
    h.values[k] = acc;
  }
  return h;
}

VectorXd cox_eta_gradient(const VectorXd& times, const BoolArray& events, const VectorXd& eta) {
  const Index n = times.size();
  const double shift = n > 0 ? eta.maxCoeff() : 0.0;
  const CumulativeHazard h = breslow_baseline(times, events, (eta.array() - shift).matrix());
  VectorXd g(n);
  for (Index i = 0; i < n; ++i) {
    g[i] = (events[i] ? 1.0 : 0.0) - std::exp(eta[i] - shift) * h(times[i]);
  }
  return g;
}

double cox_objective(const TimeToEventDataset& data, const VectorXd& beta, double l2, double l1) {
  const auto pl =
      cox_partial_likelihood(data.covariates(), data.times(), data.events(), beta, false);
  return pl.value / double(data.size()) - 0.5 * l2 * beta.squaredNorm() -
         l1 * beta.lpNorm<1>();
}

CoxFit fit_cox_coefficients(const TimeToEventDataset& data, const CoxOptions& options) {
  if (options.l1 < 0.0 || options.l2 < 0.0) throw InvalidArgument("cox: penalties must be >= 0");
  if (data.n_events() == 0) throw DegenerateData("cox: no events");
  const Index p = data.n_features();
  const double n = double(data.size());
  const MatrixXd& x = data.covariates();
  const double l1 = options.l1;
  const double l2 = options.l2;

  CoxFit fit;
  fit.beta = VectorXd::Zero(p);
  VectorXd& beta = fit.beta;
  bool converged = false;

  for (int it = 0; it < options.max_iterations; ++it) {
    const auto pl = cox_partial_likelihood(x, data.times(), data.events(), beta, true);
    const double f = pl.value / n - 0.5 * l2 * beta.squaredNorm() - l1 * beta.lpNorm<1>();
    const VectorXd grad = pl.gradient / n - l2 * beta;
    const MatrixXd info = -pl.hessian / n + l2 * MatrixXd::Identity(p, p);
    fit.gradient_norm = l1 > 0.0 ? kkt_violation(grad, beta, l1) : grad.lpNorm<Eigen::Infinity>();
    fit.iterations = it;
    if (fit.gradient_norm < options.gradient_tolerance) {
      converged = true;
      break;
    }

    // Newton (or proximal Newton) step on the quadratic model with curvature
    // info + damping * I. Damping starts at zero and grows only when the
    // undamped direction fails to improve the objective, which happens when
    // the information matrix is numerically singular.
    const double diag_scale = std::max(1.0, info.diagonal().cwiseAbs().maxCoeff());
    const double slack = 1e-13 * std::max(1.0, std::abs(f));
    VectorXd candidate;
    bool improved = false;
    for (double damping = 0.0; damping <= 1e8 * diag_scale;
         damping = damping == 0.0 ? 1e-8 * diag_scale : damping * 100.0) {
      const MatrixXd curvature = info + damping * MatrixXd::Identity(p, p);
      VectorXd target;
      if (l1 == 0.0) {
        target = beta + curvature.ldlt().solve(grad);
      } else {
        target = proximal_target(curvature, grad, beta, l1);
      }
      if (!target.allFinite()) continue;
      // Step halving toward beta; scale 1 returns the target exactly so
      // coordinates thresholded to zero stay zero.
      for (double scale = 1.0; scale >= 1e-10; scale *= 0.5) {
        candidate = scale == 1.0 ? target : VectorXd(beta + scale * (target - beta));
        if (cox_objective(data, candidate, l2, l1) >= f - slack) {
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
    if (!improved) {
      throw ConvergenceError("cox: no ascent direction found (gradient norm " +
                                 std::to_string(fit.gradient_norm) + ")",
                             fit.gradient_norm);
    }
    beta = candidate;
    if (beta.lpNorm<Eigen::Infinity>() > 1e3) {
      throw DegenerateData("cox: coefficients diverging (separation?); add a penalty");
    }
  }
  if (!converged) {
    throw ConvergenceError("cox: no convergence within " + std::to_string(options.max_iterations) +
                               " iterations (gradient norm " +
                               std::to_string(fit.gradient_norm) + ")",
                           fit.gradient_norm);
  }
  // With no penalty a genuine maximum is strictly better than any point
  // further out on the same ray; a likelihood still rising along it means the
  // supremum sits at infinity.
  if (l1 == 0.0 && l2 == 0.0 && beta.lpNorm<Eigen::Infinity>() > 5.0 &&
      cox_objective(data, 2.0 * beta, 0.0, 0.0) >= cox_objective(data, beta, 0.0, 0.0)) {
    throw DegenerateData("cox: monotone likelihood (separation); add a penalty");
  }
  fit.baseline = breslow_baseline(data.times(), data.events(), x * beta);
  return fit;
}

}  // namespace rsurv
