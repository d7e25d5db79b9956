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

// The survival model zoo behind one fit / predict interface.
//
//   family                   fitted state               hyperparameters
//   kaplan_meier             product-limit curve        -
//   nelson_aalen             cumulative hazard          -
//   cox_ph                   beta + Breslow H0          -
//   cox_ridge                beta + Breslow H0          l2 (0.1)
//   cox_lasso                beta + Breslow H0          l1 (0.05)
//   survival_tree            log-rank tree, KM leaves   min_node_size (10), max_depth (3)
//   random_survival_forest   log-rank trees, NA leaves  n_trees (200), mtry (ceil sqrt p),
//                                                       min_node_size (5), bootstrap (1), seed (1)
//   boosted_cox              sparse beta + Breslow H0   n_rounds (250), learning_rate (0.1)

#ifndef RSURV_MODELS_HPP_
#define RSURV_MODELS_HPP_

#include <memory>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "rsurv/core.hpp"
#include "rsurv/cox.hpp"
#include "rsurv/nonparametric.hpp"
#include "rsurv/tree.hpp"

namespace rsurv {

class FittedModel {
 public:
  virtual ~FittedModel() = default;

  const ModelSpec& spec() const { return spec_; }
  const std::string& id() const { return spec_.model_id; }
  Index n_features() const { return n_features_; }

  // S(t | x) on the model's own time grid. `x` must have n_features() entries.
  virtual SurvivalCurve survival(const VectorXd& x) const = 0;

  // Ranking score, larger = earlier failure. Cox-type models return the linear
  // predictor; everything else 1 - S(horizon | x).
  virtual double risk_score(const VectorXd& x, double horizon) const;

  // Family specific fitted state for serialization.
  virtual nlohmann::json state() const = 0;

 protected:
  FittedModel(ModelSpec spec, Index n_features)
      : spec_(std::move(spec)), n_features_(n_features) {}
  void check_dimension(const VectorXd& x) const;

 private:
  ModelSpec spec_;
  Index n_features_;
};

using ModelPtr = std::shared_ptr<const FittedModel>;

// S(t | x) restricted to `grid`. Throws InvalidArgument on a dimension mismatch.
SurvivalCurve predict_survival(const FittedModel& model, const VectorXd& x, const VectorXd& grid);

class KaplanMeierModel final : public FittedModel {
 public:
  KaplanMeierModel(ModelSpec spec, Index n_features, SurvivalCurve curve)
      : FittedModel(std::move(spec), n_features), curve_(std::move(curve)) {}
  SurvivalCurve survival(const VectorXd& x) const override;
  nlohmann::json state() const override;
  const SurvivalCurve& curve() const { return curve_; }

 private:
  SurvivalCurve curve_;
};

class NelsonAalenModel final : public FittedModel {
 public:
  NelsonAalenModel(ModelSpec spec, Index n_features, CumulativeHazard hazard)
      : FittedModel(std::move(spec), n_features), hazard_(std::move(hazard)) {}
  SurvivalCurve survival(const VectorXd& x) const override;
  nlohmann::json state() const override;
  const CumulativeHazard& hazard() const { return hazard_; }

 private:
  CumulativeHazard hazard_;
};

// Shared by cox_ph, cox_ridge, cox_lasso and boosted_cox:
// S(t | x) = exp(-H0(t) exp(beta' x)).
class CoxModel final : public FittedModel {
 public:
  CoxModel(ModelSpec spec, CoxFit fit);
  SurvivalCurve survival(const VectorXd& x) const override;
  double risk_score(const VectorXd& x, double horizon) const override;
  nlohmann::json state() const override;
  const CoxFit& fit() const { return fit_; }
  const VectorXd& beta() const { return fit_.beta; }

 private:
  CoxFit fit_;
};

class SurvivalTreeModel final : public FittedModel {
 public:
  SurvivalTreeModel(ModelSpec spec, Index n_features, SurvivalTree tree)
      : FittedModel(std::move(spec), n_features), tree_(std::move(tree)) {}
  // Kaplan-Meier curve of the leaf `x` falls into.
  SurvivalCurve survival(const VectorXd& x) const override;
  // Nelson-Aalen cumulative hazard of the same leaf.
  CumulativeHazard cumulative_hazard(const VectorXd& x) const;
  nlohmann::json state() const override;
  const SurvivalTree& tree() const { return tree_; }

 private:
  SurvivalTree tree_;
};

// Averages leaf Nelson-Aalen hazards over trees on the training event-time
// grid, then S = exp(-mean H).
class RandomSurvivalForestModel final : public FittedModel {
 public:
  RandomSurvivalForestModel(ModelSpec spec, Index n_features, VectorXd grid,
                            std::vector<SurvivalTree> trees);
  SurvivalCurve survival(const VectorXd& x) const override;
  nlohmann::json state() const override;
  const std::vector<SurvivalTree>& trees() const { return trees_; }
  const VectorXd& grid() const { return grid_; }

 private:
  VectorXd grid_;
  std::vector<SurvivalTree> trees_;
  std::vector<MatrixXd> leaf_hazards_;  // per tree: leaves x grid
};

// Fitters. Each throws DegenerateData when `data` has no events.
ModelPtr fit_kaplan_meier(const TimeToEventDataset& data, ModelSpec spec = {});
ModelPtr fit_nelson_aalen(const TimeToEventDataset& data, ModelSpec spec = {});
ModelPtr fit_cox(const TimeToEventDataset& data, double l2, double l1, ModelSpec spec = {});
ModelPtr fit_survival_tree(const TimeToEventDataset& data, Index min_node_size, int max_depth,
                           ModelSpec spec = {});

struct ForestOptions {
  int n_trees = 200;
  Index mtry = 0;  // 0 = ceil(sqrt(p))
  Index min_node_size = 5;
  bool bootstrap = true;
  std::uint64_t seed = 1;
};
ModelPtr fit_random_survival_forest(const TimeToEventDataset& data, const ForestOptions& options,
                                    ModelSpec spec = {});

// Componentwise linear boosting of the Cox partial likelihood: each round
// regresses the martingale residuals on every covariate by least squares and
// moves the single best one by learning_rate times its coefficient.
ModelPtr fit_boosted_cox(const TimeToEventDataset& data, int n_rounds, double learning_rate,
                         ModelSpec spec = {});

// Dispatches on spec.family using spec.hyperparameters (defaults above).
ModelPtr fit_model(const ModelSpec& spec, const TimeToEventDataset& data);

// One model of every family with default hyperparameters; ids equal family names.
std::vector<ModelSpec> default_zoo();

// {"model_id": ..., "family": ..., "hyperparameters": {name: number}}
nlohmann::json spec_to_json(const ModelSpec& spec);
ModelSpec spec_from_json(const nlohmann::json& doc);

// Versioned JSON document: {"format", "version", "spec", "n_features", "state"}.
nlohmann::json model_to_json(const FittedModel& model);
ModelPtr model_from_json(const nlohmann::json& doc);

}  // namespace rsurv

#endif  // RSURV_MODELS_HPP_
