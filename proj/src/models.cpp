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

#include "rsurv/models.hpp"

#include <cmath>
#include <numeric>

#include "rsurv/parallel.hpp"
#include "rsurv/random.hpp"

namespace rsurv {

using nlohmann::json;

namespace {

constexpr const char* kModelFormat = "rashomon-surv-model";
constexpr int kModelFormatVersion = 1;

ModelSpec with_family(ModelSpec spec, ModelFamily family) {
  spec.family = family;
  if (spec.model_id.empty()) spec.model_id = std::string(to_string(family));
  return spec;
}

void require_events(const TimeToEventDataset& data, const char* who) {
  if (data.size() == 0 || data.n_events() == 0) {
    throw DegenerateData(std::string(who) + ": training data has no events");
  }
}

json to_json(const VectorXd& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

VectorXd vector_from_json(const json& j) {
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const VectorXd>(values.data(), Index(values.size()));
}

json tree_to_json(const SurvivalTree& tree) {
  json nodes = json::array();
  for (const auto& nd : tree.nodes()) {
    nodes.push_back({nd.feature, nd.threshold, nd.left, nd.right, nd.leaf});
  }
  json leaves = json::array();
  for (const auto& lf : tree.leaves()) {
    leaves.push_back(
        {{"times", to_json(lf.times)}, {"deaths", to_json(lf.deaths)}, {"at_risk", to_json(lf.at_risk)}});
  }
  return {{"nodes", nodes}, {"leaves", leaves}};
}

SurvivalTree tree_from_json(const json& j) {
  std::vector<SurvivalTree::Node> nodes;
  for (const auto& n : j.at("nodes")) {
    SurvivalTree::Node nd;
    nd.feature = n.at(0).get<Index>();
    nd.threshold = n.at(1).get<double>();
    nd.left = n.at(2).get<Index>();
    nd.right = n.at(3).get<Index>();
    nd.leaf = n.at(4).get<Index>();
    nodes.push_back(nd);
  }
  std::vector<EventTable> leaves;
  for (const auto& l : j.at("leaves")) {
    leaves.push_back({vector_from_json(l.at("times")), vector_from_json(l.at("deaths")),
                      vector_from_json(l.at("at_risk"))});
  }
  return SurvivalTree(std::move(nodes), std::move(leaves));
}

CumulativeHazard leaf_hazard(const EventTable& leaf) { return hazard_sum(leaf); }

}  // namespace

// ---------------------------------------------------------------------------

void FittedModel::check_dimension(const VectorXd& x) const {
  if (x.size() != n_features_) {
    throw InvalidArgument("model " + spec_.model_id + ": expected " + std::to_string(n_features_) +
                          " covariates, got " + std::to_string(x.size()));
  }
}

double FittedModel::risk_score(const VectorXd& x, double horizon) const {
  return 1.0 - curve_eval(survival(x), horizon);
}

SurvivalCurve predict_survival(const FittedModel& model, const VectorXd& x, const VectorXd& grid) {
  return curve_restrict(model.survival(x), grid);
}

SurvivalCurve KaplanMeierModel::survival(const VectorXd& x) const {
  check_dimension(x);
  return curve_;
}

json KaplanMeierModel::state() const {
  return {{"times", to_json(curve_.times())}, {"probs", to_json(curve_.probs())}};
}

SurvivalCurve NelsonAalenModel::survival(const VectorXd& x) const {
  check_dimension(x);
  return hazard_.survival();
}

json NelsonAalenModel::state() const {
  return {{"times", to_json(hazard_.times)}, {"cumhaz", to_json(hazard_.values)}};
}

CoxModel::CoxModel(ModelSpec spec, CoxFit fit)
    : FittedModel(std::move(spec), fit.beta.size()), fit_(std::move(fit)) {
  if (!fit_.beta.allFinite()) throw InvalidArgument("cox model: non-finite coefficients");
  if (fit_.baseline.times.size() != fit_.baseline.values.size()) {
    throw InvalidArgument("cox model: baseline size mismatch");
  }
}

SurvivalCurve CoxModel::survival(const VectorXd& x) const {
  check_dimension(x);
  const double risk = std::exp(fit_.beta.dot(x));
  // std::exp keeps results identical to scalar evaluation and monotone in the hazard.
  VectorXd probs = fit_.baseline.values.unaryExpr([risk](double h) { return std::exp(-h * risk); });
  return SurvivalCurve(fit_.baseline.times, std::move(probs));
}

double CoxModel::risk_score(const VectorXd& x, double /*horizon*/) const {
  check_dimension(x);
  return fit_.beta.dot(x);
}

json CoxModel::state() const {
  return {{"beta", to_json(fit_.beta)},
          {"baseline_times", to_json(fit_.baseline.times)},
          {"baseline_cumhaz", to_json(fit_.baseline.values)},
          {"iterations", fit_.iterations},
          {"gradient_norm", fit_.gradient_norm}};
}

SurvivalCurve SurvivalTreeModel::survival(const VectorXd& x) const {
  check_dimension(x);
  return product_limit(tree_.leaf_for(x));
}

CumulativeHazard SurvivalTreeModel::cumulative_hazard(const VectorXd& x) const {
  check_dimension(x);
  return leaf_hazard(tree_.leaf_for(x));
}

json SurvivalTreeModel::state() const { return tree_to_json(tree_); }

RandomSurvivalForestModel::RandomSurvivalForestModel(ModelSpec spec, Index n_features,
                                                     VectorXd grid,
                                                     std::vector<SurvivalTree> trees)
    : FittedModel(std::move(spec), n_features), grid_(std::move(grid)), trees_(std::move(trees)) {
  if (trees_.empty()) throw InvalidArgument("forest: no trees");
  leaf_hazards_.reserve(trees_.size());
  for (const auto& tree : trees_) {
    MatrixXd h(Index(tree.leaves().size()), grid_.size());
    for (Index l = 0; l < h.rows(); ++l) {
      const CumulativeHazard lh = leaf_hazard(tree.leaves()[std::size_t(l)]);
      for (Index g = 0; g < grid_.size(); ++g) h(l, g) = lh(grid_[g]);
    }
    leaf_hazards_.push_back(std::move(h));
  }
}

SurvivalCurve RandomSurvivalForestModel::survival(const VectorXd& x) const {
  check_dimension(x);
  VectorXd h = VectorXd::Zero(grid_.size());
  for (std::size_t t = 0; t < trees_.size(); ++t) {
    h += leaf_hazards_[t].row(trees_[t].leaf_index(x)).transpose();
  }
  h /= double(trees_.size());
  return SurvivalCurve(grid_, h.unaryExpr([](double v) { return std::exp(-v); }));
}

json RandomSurvivalForestModel::state() const {
  json trees = json::array();
  for (const auto& t : trees_) trees.push_back(tree_to_json(t));
  return {{"grid", to_json(grid_)}, {"trees", trees}};
}

// ---------------------------------------------------------------------------

ModelPtr fit_kaplan_meier(const TimeToEventDataset& data, ModelSpec spec) {
  require_events(data, "kaplan_meier");
  return std::make_shared<KaplanMeierModel>(with_family(std::move(spec), ModelFamily::kKaplanMeier),
                                            data.n_features(),
                                            product_limit(event_table(data.times(), data.events())));
}

ModelPtr fit_nelson_aalen(const TimeToEventDataset& data, ModelSpec spec) {
  require_events(data, "nelson_aalen");
  return std::make_shared<NelsonAalenModel>(with_family(std::move(spec), ModelFamily::kNelsonAalen),
                                            data.n_features(),
                                            hazard_sum(event_table(data.times(), data.events())));
}

ModelPtr fit_cox(const TimeToEventDataset& data, double l2, double l1, ModelSpec spec) {
  require_events(data, "cox");
  const ModelFamily family = l1 > 0.0   ? ModelFamily::kCoxLasso
                             : l2 > 0.0 ? ModelFamily::kCoxRidge
                                        : ModelFamily::kCoxPh;
  const bool cox_family = spec.family == ModelFamily::kCoxPh ||
                          spec.family == ModelFamily::kCoxRidge ||
                          spec.family == ModelFamily::kCoxLasso;
  const ModelFamily target = cox_family ? spec.family : family;
  spec = with_family(std::move(spec), target);
  CoxOptions opts;
  opts.l2 = l2;
  opts.l1 = l1;
  return std::make_shared<CoxModel>(std::move(spec), fit_cox_coefficients(data, opts));
}

ModelPtr fit_survival_tree(const TimeToEventDataset& data, Index min_node_size, int max_depth,
                           ModelSpec spec) {
  require_events(data, "survival_tree");
  if (min_node_size < 1) throw InvalidArgument("survival_tree: min_node_size must be >= 1");
  if (max_depth < 0) throw InvalidArgument("survival_tree: max_depth must be >= 0");
  TreeOptions opts;
  opts.min_node_size = min_node_size;
  opts.max_depth = max_depth;
  std::vector<Index> all(std::size_t(data.size()));
  std::iota(all.begin(), all.end(), Index(0));
  auto tree = SurvivalTree::grow(data.covariates(), data.times(), data.events(), all, opts, nullptr);
  return std::make_shared<SurvivalTreeModel>(with_family(std::move(spec), ModelFamily::kSurvivalTree),
                                             data.n_features(), std::move(tree));
}

ModelPtr fit_random_survival_forest(const TimeToEventDataset& data, const ForestOptions& options,
                                    ModelSpec spec) {
  require_events(data, "random_survival_forest");
  const Index p = data.n_features();
  if (options.n_trees < 1) throw InvalidArgument("random_survival_forest: n_trees must be >= 1");
  const Index mtry =
      options.mtry == 0 ? Index(std::ceil(std::sqrt(double(p)))) : options.mtry;
  if (mtry < 1 || mtry > p) {
    throw InvalidArgument("random_survival_forest: mtry must lie in [1, " + std::to_string(p) + "]");
  }
  if (options.min_node_size < 1) {
    throw InvalidArgument("random_survival_forest: min_node_size must be >= 1");
  }

  // Per-tree seeds are drawn up front so trees can grow in any order.
  Rng master(options.seed);
  std::vector<std::uint64_t> seeds(std::size_t(options.n_trees));
  for (auto& s : seeds) s = master();

  TreeOptions topts;
  topts.min_node_size = options.min_node_size;
  topts.mtry = mtry;
  const Index n = data.size();
  std::vector<SurvivalTree> trees(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t t) {
    Rng rng(seeds[t]);
    std::vector<Index> sample(static_cast<std::size_t>(n));
    if (options.bootstrap) {
      for (auto& s : sample) s = Index(uniform_index(rng, std::uint64_t(n)));
    } else {
      std::iota(sample.begin(), sample.end(), Index(0));
    }
    trees[t] = SurvivalTree::grow(data.covariates(), data.times(), data.events(), sample, topts, &rng);
  });

  spec = with_family(std::move(spec), ModelFamily::kRandomSurvivalForest);
  return std::make_shared<RandomSurvivalForestModel>(
      std::move(spec), p, event_table(data.times(), data.events()).times, std::move(trees));
}

ModelPtr fit_boosted_cox(const TimeToEventDataset& data, int n_rounds, double learning_rate,
                         ModelSpec spec) {
  require_events(data, "boosted_cox");
  if (n_rounds < 1) throw InvalidArgument("boosted_cox: n_rounds must be >= 1");
  if (!(learning_rate > 0.0 && learning_rate <= 1.0)) {
    throw InvalidArgument("boosted_cox: learning_rate must lie in (0, 1]");
  }
  const MatrixXd& x = data.covariates();
  const Index p = x.cols();
  const VectorXd col_sq = x.colwise().squaredNorm().transpose();

  CoxFit fit;
  fit.beta = VectorXd::Zero(p);
  VectorXd eta = VectorXd::Zero(data.size());
  for (int round = 0; round < n_rounds; ++round) {
    const VectorXd u = cox_eta_gradient(data.times(), data.events(), eta);
    const VectorXd xu = x.transpose() * u;
    Index best = -1;
    double best_gain = 0.0;
    for (Index j = 0; j < p; ++j) {
      if (!(col_sq[j] > 0.0)) continue;
      const double gain = xu[j] * xu[j] / col_sq[j];
      if (gain > best_gain) {
        best_gain = gain;
        best = j;
      }
    }
    fit.gradient_norm = xu.lpNorm<Eigen::Infinity>() / double(data.size());
    fit.iterations = round + 1;
    if (best < 0) break;  // residuals orthogonal to every covariate
    const double step = learning_rate * xu[best] / col_sq[best];
    fit.beta[best] += step;
    eta += step * x.col(best);
  }
  fit.baseline = breslow_baseline(data.times(), data.events(), x * fit.beta);
  return std::make_shared<CoxModel>(with_family(std::move(spec), ModelFamily::kBoostedCox),
                                    std::move(fit));
}

ModelPtr fit_model(const ModelSpec& spec, const TimeToEventDataset& data) {
  switch (spec.family) {
    case ModelFamily::kKaplanMeier:
      return fit_kaplan_meier(data, spec);
    case ModelFamily::kNelsonAalen:
      return fit_nelson_aalen(data, spec);
    case ModelFamily::kCoxPh:
      return fit_cox(data, 0.0, 0.0, spec);
    case ModelFamily::kCoxRidge:
      return fit_cox(data, spec.param("l2", 0.1), 0.0, spec);
    case ModelFamily::kCoxLasso:
      return fit_cox(data, spec.param("l2", 0.0), spec.param("l1", 0.05), spec);
    case ModelFamily::kSurvivalTree:
      return fit_survival_tree(data, Index(spec.param("min_node_size", 10)),
                               int(spec.param("max_depth", 3)), spec);
    case ModelFamily::kRandomSurvivalForest: {
      ForestOptions opts;
      opts.n_trees = int(spec.param("n_trees", 200));
      opts.mtry = Index(spec.param("mtry", 0));
      opts.min_node_size = Index(spec.param("min_node_size", 5));
      opts.bootstrap = spec.param("bootstrap", 1) != 0.0;
      opts.seed = std::uint64_t(spec.param("seed", 1));
      return fit_random_survival_forest(data, opts, spec);
    }
    case ModelFamily::kBoostedCox:
      return fit_boosted_cox(data, int(spec.param("n_rounds", 250)),
                             spec.param("learning_rate", 0.1), spec);
  }
  throw InvalidArgument("fit_model: unhandled family");
}

std::vector<ModelSpec> default_zoo() {
  std::vector<ModelSpec> zoo;
  auto add = [&](ModelFamily f, std::map<std::string, double> hp) {
    zoo.push_back(ModelSpec{std::string(to_string(f)), f, std::move(hp)});
  };
  add(ModelFamily::kKaplanMeier, {});
  add(ModelFamily::kNelsonAalen, {});
  add(ModelFamily::kCoxPh, {});
  add(ModelFamily::kCoxRidge, {{"l2", 0.1}});
  add(ModelFamily::kCoxLasso, {{"l1", 0.05}});
  add(ModelFamily::kSurvivalTree, {{"min_node_size", 10}, {"max_depth", 3}});
  add(ModelFamily::kRandomSurvivalForest,
      {{"n_trees", 200}, {"min_node_size", 5}, {"bootstrap", 1}, {"seed", 1}});
  add(ModelFamily::kBoostedCox, {{"n_rounds", 250}, {"learning_rate", 0.1}});
  return zoo;
}

json spec_to_json(const ModelSpec& spec) {
  json hp = json::object();
  for (const auto& [k, v] : spec.hyperparameters) hp[k] = v;
  return {{"model_id", spec.model_id}, {"family", std::string(to_string(spec.family))},
          {"hyperparameters", hp}};
}

ModelSpec spec_from_json(const json& doc) {
  ModelSpec spec;
  spec.family = parse_model_family(doc.at("family").get<std::string>());
  spec.model_id = doc.value("model_id", std::string(to_string(spec.family)));
  if (doc.contains("hyperparameters")) {
    for (const auto& [k, v] : doc.at("hyperparameters").items()) {
      spec.hyperparameters[k] = v.get<double>();
    }
  }
  return spec;
}

json model_to_json(const FittedModel& model) {
  return {{"format", kModelFormat},
          {"version", kModelFormatVersion},
          {"spec", spec_to_json(model.spec())},
          {"n_features", model.n_features()},
          {"state", model.state()}};
}

ModelPtr model_from_json(const json& doc) {
  if (doc.value("format", "") != kModelFormat) throw ParseError(0, "not a rashomon-surv model");
  if (doc.value("version", 0) != kModelFormatVersion) {
    throw ParseError(0, "unsupported model format version");
  }
  ModelSpec spec = spec_from_json(doc.at("spec"));
  const Index p = doc.at("n_features").get<Index>();
  const json& st = doc.at("state");
  switch (spec.family) {
    case ModelFamily::kKaplanMeier:
      return std::make_shared<KaplanMeierModel>(
          std::move(spec), p,
          SurvivalCurve(vector_from_json(st.at("times")), vector_from_json(st.at("probs"))));
    case ModelFamily::kNelsonAalen:
      return std::make_shared<NelsonAalenModel>(
          std::move(spec), p,
          CumulativeHazard{vector_from_json(st.at("times")), vector_from_json(st.at("cumhaz"))});
    case ModelFamily::kCoxPh:
    case ModelFamily::kCoxRidge:
    case ModelFamily::kCoxLasso:
    case ModelFamily::kBoostedCox: {
      CoxFit fit;
      fit.beta = vector_from_json(st.at("beta"));
      fit.baseline = {vector_from_json(st.at("baseline_times")),
                      vector_from_json(st.at("baseline_cumhaz"))};
      fit.iterations = st.value("iterations", 0);
      fit.gradient_norm = st.value("gradient_norm", 0.0);
      if (fit.beta.size() != p) throw ParseError(0, "cox model: beta length mismatch");
      return std::make_shared<CoxModel>(std::move(spec), std::move(fit));
    }
    case ModelFamily::kSurvivalTree:
      return std::make_shared<SurvivalTreeModel>(std::move(spec), p, tree_from_json(st));
    case ModelFamily::kRandomSurvivalForest: {
      std::vector<SurvivalTree> trees;
      for (const auto& t : st.at("trees")) trees.push_back(tree_from_json(t));
      return std::make_shared<RandomSurvivalForestModel>(std::move(spec), p,
                                                         vector_from_json(st.at("grid")),
                                                         std::move(trees));
    }
  }
  throw ParseError(0, "unhandled model family");
}

}  // namespace rsurv
