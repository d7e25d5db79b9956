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

// Domain types shared by every module: time-to-event datasets, survival
// curves as right-continuous step functions, and model specs.

#ifndef RSURV_CORE_HPP_
#define RSURV_CORE_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsurv/error.hpp"

namespace rsurv {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using BoolArray = Eigen::Array<bool, Eigen::Dynamic, 1>;

// ---------------------------------------------------------------------------
// Survival curves
// ---------------------------------------------------------------------------

// Right-continuous, non-increasing step function S(t) sampled on a strictly
// increasing time grid. S(t) = 1 before the first grid time and holds the last
// value past the final grid time. Immutable once built.
template <typename Scalar>
class BasicSurvivalCurve {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  // The empty curve, S(t) = 1 everywhere.
  BasicSurvivalCurve() = default;

  BasicSurvivalCurve(Vector times, Vector probs)
      : times_(std::move(times)), probs_(std::move(probs)) {
    if (times_.size() != probs_.size()) {
      throw InvalidArgument("survival curve: times and probs differ in length");
    }
    for (Index i = 0; i < times_.size(); ++i) {
      if (!(times_[i] >= Scalar(0)) || !std::isfinite(double(times_[i]))) {
        throw InvalidArgument("survival curve: times must be finite and >= 0");
      }
      if (i > 0 && !(times_[i] > times_[i - 1])) {
        throw InvalidArgument("survival curve: times must be strictly increasing");
      }
      if (!(probs_[i] >= Scalar(0) && probs_[i] <= Scalar(1))) {
        throw InvalidArgument("survival curve: probability outside [0, 1]");
      }
      if (i > 0 && probs_[i] > probs_[i - 1]) {
        throw InvalidArgument("survival curve: probabilities must be non-increasing");
      }
    }
  }

  const Vector& times() const { return times_; }
  const Vector& probs() const { return probs_; }
  Index size() const { return times_.size(); }
  bool empty() const { return times_.size() == 0; }

  friend bool operator==(const BasicSurvivalCurve& a, const BasicSurvivalCurve& b) {
    return a.times_.size() == b.times_.size() && a.times_ == b.times_ && a.probs_ == b.probs_;
  }

 private:
  Vector times_;
  Vector probs_;
};

using SurvivalCurve = BasicSurvivalCurve<double>;

// Throws InvalidArgument unless `grid` is non-empty, finite, non-negative and
// strictly increasing.
template <typename Derived>
void validate_grid(const Eigen::DenseBase<Derived>& grid) {
  if (grid.size() == 0) throw InvalidArgument("time grid is empty");
  for (Index i = 0; i < grid.size(); ++i) {
    const double t = double(grid[i]);
    if (!(t >= 0.0) || !std::isfinite(t)) {
      throw InvalidArgument("time grid values must be finite and >= 0");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw InvalidArgument("time grid must be strictly increasing");
    }
  }
}

// S(t): value at the largest grid time <= t, 1 before the first grid time.
template <typename Scalar>
Scalar curve_eval(const BasicSurvivalCurve<Scalar>& curve, Scalar t) {
  const auto& ts = curve.times();
  const Scalar* first = ts.data();
  const Scalar* last = ts.data() + ts.size();
  const Scalar* it = std::upper_bound(first, last, t);
  if (it == first) return Scalar(1);
  return curve.probs()[Index(it - first) - 1];
}

// S(t-): the left limit, i.e. the value at the largest grid time < t.
template <typename Scalar>
Scalar curve_eval_left(const BasicSurvivalCurve<Scalar>& curve, Scalar t) {
  const auto& ts = curve.times();
  const Scalar* first = ts.data();
  const Scalar* last = ts.data() + ts.size();
  const Scalar* it = std::lower_bound(first, last, t);
  if (it == first) return Scalar(1);
  return curve.probs()[Index(it - first) - 1];
}

template <typename Scalar, typename Derived>
BasicSurvivalCurve<Scalar> curve_restrict(const BasicSurvivalCurve<Scalar>& curve,
                                          const Eigen::DenseBase<Derived>& grid) {
  validate_grid(grid);
  typename BasicSurvivalCurve<Scalar>::Vector times = grid.derived().template cast<Scalar>();
  typename BasicSurvivalCurve<Scalar>::Vector probs(times.size());
  for (Index i = 0; i < times.size(); ++i) probs[i] = curve_eval(curve, times[i]);
  return BasicSurvivalCurve<Scalar>(std::move(times), std::move(probs));
}

// Pointwise arithmetic mean of the curves after restriction to `grid`.
template <typename Scalar, typename Derived>
BasicSurvivalCurve<Scalar> mean_curve(std::span<const BasicSurvivalCurve<Scalar>> curves,
                                      const Eigen::DenseBase<Derived>& grid) {
  if (curves.empty()) throw InvalidArgument("mean_curve: no curves given");
  validate_grid(grid);
  typename BasicSurvivalCurve<Scalar>::Vector times = grid.derived().template cast<Scalar>();
  using Vector = typename BasicSurvivalCurve<Scalar>::Vector;
  const Index n = times.size();
  Vector sum = Vector::Zero(n);
  Vector lo = Vector::Constant(n, Scalar(1));
  Vector hi = Vector::Zero(n);
  for (const auto& c : curves) {
    for (Index i = 0; i < n; ++i) {
      const Scalar v = curve_eval(c, times[i]);
      sum[i] += v;
      lo[i] = std::min(lo[i], v);
      hi[i] = std::max(hi[i], v);
    }
  }
  // Clamping to the pointwise range keeps the mean of identical curves exact
  // and is monotone in every argument, so the result stays non-increasing.
  Vector mean(n);
  for (Index i = 0; i < n; ++i) {
    mean[i] = std::clamp(sum[i] / Scalar(curves.size()), lo[i], hi[i]);
  }
  return BasicSurvivalCurve<Scalar>(std::move(times), std::move(mean));
}

// step, 2*step, ... up to `end`; `end` itself is always the last point.
VectorXd make_grid(double step, double end);

// ---------------------------------------------------------------------------
// Datasets
// ---------------------------------------------------------------------------

struct TimeToEventRow {
  std::string unit_id;
  double time = 0.0;
  bool event = false;
  VectorXd covariates;
};

// Column-oriented right-censored dataset: one row per unit.
class TimeToEventDataset {
 public:
  TimeToEventDataset() = default;
  TimeToEventDataset(std::vector<std::string> unit_ids, VectorXd times, BoolArray events,
                     MatrixXd covariates, std::vector<std::string> feature_names);

  static TimeToEventDataset from_rows(std::span<const TimeToEventRow> rows,
                                      std::vector<std::string> feature_names);

  Index size() const { return times_.size(); }
  Index n_features() const { return covariates_.cols(); }
  Index n_events() const { return events_.count(); }

  const VectorXd& times() const { return times_; }
  const BoolArray& events() const { return events_; }
  const MatrixXd& covariates() const { return covariates_; }
  const std::vector<std::string>& unit_ids() const { return unit_ids_; }
  const std::vector<std::string>& feature_names() const { return feature_names_; }

  double time(Index i) const { return times_[i]; }
  bool event(Index i) const { return events_[i]; }
  TimeToEventRow row(Index i) const;

  // Rows at `indices`, in the given order.
  TimeToEventDataset subset(std::span<const Index> indices) const;

  // Same rows with covariates replaced (same shape required).
  TimeToEventDataset with_covariates(MatrixXd covariates) const;

 private:
  std::vector<std::string> unit_ids_;
  VectorXd times_;
  BoolArray events_;
  MatrixXd covariates_;
  std::vector<std::string> feature_names_;
};

// ---------------------------------------------------------------------------
// Model specs
// ---------------------------------------------------------------------------

enum class ModelFamily {
  kKaplanMeier,
  kNelsonAalen,
  kCoxPh,
  kCoxRidge,
  kCoxLasso,
  kSurvivalTree,
  kRandomSurvivalForest,
  kBoostedCox,
};

std::string_view to_string(ModelFamily family);
ModelFamily parse_model_family(std::string_view name);

struct ModelSpec {
  std::string model_id;
  ModelFamily family = ModelFamily::kKaplanMeier;
  std::map<std::string, double> hyperparameters;

  double param(const std::string& name, double fallback) const {
    auto it = hyperparameters.find(name);
    return it == hyperparameters.end() ? fallback : it->second;
  }

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

}  // namespace rsurv

#endif  // RSURV_CORE_HPP_
