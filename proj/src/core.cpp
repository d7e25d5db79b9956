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

#include "rsurv/core.hpp"

#include <array>
#include <utility>

namespace rsurv {

VectorXd make_grid(double step, double end) {
  if (!(step > 0.0) || !std::isfinite(step)) throw InvalidArgument("grid step must be > 0");
  if (!(end >= step) || !std::isfinite(end)) throw InvalidArgument("grid end must be >= step");
  std::vector<double> pts;
  for (long k = 1; double(k) * step < end * (1.0 - 1e-12); ++k) pts.push_back(double(k) * step);
  pts.push_back(end);
  return Eigen::Map<const VectorXd>(pts.data(), Index(pts.size()));
}

TimeToEventDataset::TimeToEventDataset(std::vector<std::string> unit_ids, VectorXd times,
                                       BoolArray events, MatrixXd covariates,
                                       std::vector<std::string> feature_names)
    : unit_ids_(std::move(unit_ids)),
      times_(std::move(times)),
      events_(std::move(events)),
      covariates_(std::move(covariates)),
      feature_names_(std::move(feature_names)) {
  const Index n = times_.size();
  if (Index(unit_ids_.size()) != n || events_.size() != n || covariates_.rows() != n) {
    throw InvalidArgument("dataset: column lengths disagree");
  }
  if (Index(feature_names_.size()) != covariates_.cols()) {
    throw InvalidArgument("dataset: feature_names length differs from covariate dimension");
  }
  for (Index i = 0; i < n; ++i) {
    if (!(times_[i] > 0.0) || !std::isfinite(times_[i])) {
      throw InvalidArgument("dataset: time must be finite and > 0 (unit " + unit_ids_[i] + ")");
    }
  }
  if (!covariates_.allFinite()) throw InvalidArgument("dataset: non-finite covariate");
  if (n > 0 && events_.count() == 0) throw DegenerateData("dataset: no observed events");
}

TimeToEventDataset TimeToEventDataset::from_rows(std::span<const TimeToEventRow> rows,
                                                 std::vector<std::string> feature_names) {
  const Index n = Index(rows.size());
  const Index p = Index(feature_names.size());
  std::vector<std::string> ids;
  ids.reserve(rows.size());
  VectorXd times(n);
  BoolArray events(n);
  MatrixXd x(n, p);
  for (Index i = 0; i < n; ++i) {
    const auto& r = rows[std::size_t(i)];
    if (r.covariates.size() != p) {
      throw InvalidArgument("dataset: row " + r.unit_id + " has wrong covariate length");
    }
    ids.push_back(r.unit_id);
    times[i] = r.time;
    events[i] = r.event;
    x.row(i) = r.covariates.transpose();
  }
  return TimeToEventDataset(std::move(ids), std::move(times), std::move(events), std::move(x),
                            std::move(feature_names));
}

TimeToEventRow TimeToEventDataset::row(Index i) const {
  return TimeToEventRow{unit_ids_[std::size_t(i)], times_[i], bool(events_[i]),
                        covariates_.row(i).transpose()};
}

TimeToEventDataset TimeToEventDataset::subset(std::span<const Index> indices) const {
  const Index m = Index(indices.size());
  std::vector<std::string> ids;
  ids.reserve(indices.size());
  VectorXd t(m);
  BoolArray e(m);
  MatrixXd x(m, n_features());
  for (Index k = 0; k < m; ++k) {
    const Index i = indices[std::size_t(k)];
    if (i < 0 || i >= size()) throw InvalidArgument("dataset subset: index out of range");
    ids.push_back(unit_ids_[std::size_t(i)]);
    t[k] = times_[i];
    e[k] = events_[i];
    x.row(k) = covariates_.row(i);
  }
  return TimeToEventDataset(std::move(ids), std::move(t), std::move(e), std::move(x),
                            feature_names_);
}

TimeToEventDataset TimeToEventDataset::with_covariates(MatrixXd covariates) const {
  if (covariates.rows() != covariates_.rows() || covariates.cols() != covariates_.cols()) {
    throw InvalidArgument("dataset: replacement covariates have the wrong shape");
  }
  return TimeToEventDataset(unit_ids_, times_, events_, std::move(covariates), feature_names_);
}

namespace {

constexpr std::array<std::pair<ModelFamily, std::string_view>, 8> kFamilyNames{{
    {ModelFamily::kKaplanMeier, "kaplan_meier"},
    {ModelFamily::kNelsonAalen, "nelson_aalen"},
    {ModelFamily::kCoxPh, "cox_ph"},
    {ModelFamily::kCoxRidge, "cox_ridge"},
    {ModelFamily::kCoxLasso, "cox_lasso"},
    {ModelFamily::kSurvivalTree, "survival_tree"},
    {ModelFamily::kRandomSurvivalForest, "random_survival_forest"},
    {ModelFamily::kBoostedCox, "boosted_cox"},
}};

}  // namespace

std::string_view to_string(ModelFamily family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

ModelFamily parse_model_family(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  throw InvalidArgument("unknown model family '" + std::string(name) + "'");
}

}  // namespace rsurv
