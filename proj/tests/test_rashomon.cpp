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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rashomon_properties.hpp"
#include "rsurv/nonparametric.hpp"
#include "rsurv/rashomon.hpp"

namespace rsurv {
namespace {

EvaluationRecord rec(const std::string& id, double c) {
  EvaluationRecord r;
  r.model_id = id;
  r.c_index = c;
  return r;
}

TEST(RashomonSet, ThresholdArithmetic) {
  const auto set = build_rashomon_set({rec("a", 0.87), rec("b", 0.85), rec("c", 0.80)}, 0.05, "c_index");
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(set.members[0].model_id, "a");
  EXPECT_EQ(set.members[1].model_id, "b");
  EXPECT_EQ(set.best_model_id, "a");
  EXPECT_NEAR(set.best_loss, 0.13, 1e-15);
}

TEST(RashomonSet, ZeroEpsilonUniqueBest) {
  const auto set = build_rashomon_set({rec("a", 0.7), rec("b", 0.9), rec("c", 0.8)}, 0.0, "c_index");
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set.best_model_id, "b");
}

TEST(RashomonSet, BoundaryTieIncluded) {
  const auto set = build_rashomon_set({rec("a", 0.90), rec("b", 0.85)}, 0.05, "c_index");
  EXPECT_EQ(set.size(), 2u);
  const auto dyadic = build_rashomon_set(std::vector<RashomonMember>{{"a", 0.25}, {"b", 0.5}}, 0.25, "c_index");
  EXPECT_EQ(dyadic.size(), 2u);
}

TEST(RashomonSet, TiesOrderedById) {
  const auto set = build_rashomon_set(std::vector<RashomonMember>{{"z", 0.1}, {"a", 0.1}, {"m", 0.05}}, 0.1, "c_index");
  ASSERT_EQ(set.size(), 3u);
  EXPECT_EQ(set.members[0].model_id, "m");
  EXPECT_EQ(set.members[1].model_id, "a");
  EXPECT_EQ(set.members[2].model_id, "z");
}

TEST(RashomonSet, IntegratedBrierLoss) {
  EvaluationRecord a = rec("a", 0.5), b = rec("b", 0.9);
  a.integrated_brier = 0.10;
  b.integrated_brier = 0.30;
  const auto set = build_rashomon_set({a, b}, 0.05, "integrated_brier");
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set.best_model_id, "a");
}

TEST(RashomonSet, RejectsBadInput) {
  EXPECT_THROW(build_rashomon_set(std::vector<RashomonMember>{}, 0.05, "c_index"), InvalidArgument);
  EXPECT_THROW(build_rashomon_set(std::vector<RashomonMember>{{"a", 0.1}}, -0.1, "c_index"), InvalidArgument);
  EXPECT_THROW(build_rashomon_set({rec("a", 0.5)}, 0.05, "auc"), InvalidArgument);
}

TEST(RashomonSet, RandomizedProperties) {
  Rng rng(71);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::string failure = props::rashomon_trial(rng);
    ASSERT_TRUE(failure.empty()) << "trial " << trial << ": " << failure;
  }
}

TEST(Envelope, SingletonIsZeroWidth) {
  const SurvivalCurve c(VectorXd{{1, 2, 3}}, VectorXd{{0.9, 0.6, 0.2}});
  const VectorXd grid = make_grid(0.5, 4.0);
  const auto env = envelope_from_curves({{"a", c}}, "a", grid);
  EXPECT_EQ(env.lower, env.upper);
  EXPECT_EQ(env.lower, env.reference.probs());
  const auto stats = envelope_stats(env, VectorXd{{1.0, 2.5}});
  EXPECT_EQ(stats.mean_width, 0.0);
  EXPECT_EQ(stats.max_width, 0.0);
  EXPECT_EQ(stats.width_at.at(1.0), 0.0);
}

TEST(Envelope, DominatingPair) {
  const SurvivalCurve hi(VectorXd{{1, 2}}, VectorXd{{0.9, 0.8}});
  const SurvivalCurve lo(VectorXd{{1, 2}}, VectorXd{{0.5, 0.2}});
  const VectorXd grid{{0.5, 1.0, 1.5, 2.0, 3.0}};
  const auto env = envelope_from_curves({{"hi", hi}, {"lo", lo}}, "hi", grid);
  EXPECT_EQ(env.upper, curve_restrict(hi, grid).probs());
  EXPECT_EQ(env.lower, curve_restrict(lo, grid).probs());
}

TEST(Envelope, ThreeRandomCurvesMatchExhaustiveScan) {
  Rng rng(72);
  for (int trial = 0; trial < 100; ++trial) {
    std::map<std::string, SurvivalCurve> cs;
    for (int k = 0; k < 3; ++k) cs.emplace("m" + std::to_string(k), oracle::random_curve(rng, 6));
    VectorXd grid(10);
    for (Index i = 0; i < 10; ++i) grid[i] = 0.8 * double(i);
    const auto env = envelope_from_curves(cs, "m0", grid);
    for (Index i = 0; i < 10; ++i) {
      double lo = 1.0, hi = 0.0;
      for (const auto& [id, c] : cs) {
        lo = std::min(lo, curve_eval(c, grid[i]));
        hi = std::max(hi, curve_eval(c, grid[i]));
      }
      ASSERT_EQ(env.lower[i], lo);
      ASSERT_EQ(env.upper[i], hi);
    }
  }
}

TEST(Envelope, UnknownReferenceRejected) {
  const SurvivalCurve c(VectorXd{{1}}, VectorXd{{0.5}});
  EXPECT_THROW(envelope_from_curves({{"a", c}}, "b", VectorXd{{1.0}}), InvalidArgument);
  EXPECT_THROW(envelope_from_curves({{"a", c}}, "a", VectorXd()), InvalidArgument);
}

TEST(Envelope, IndividualAndPopulationModes) {
  const auto d = oracle::simulate_cox(120, VectorXd{{0.6, -0.4}}, 0.4, 73);
  std::vector<ModelPtr> models{fit_cox(d, 0.0, 0.0, {"cox", ModelFamily::kCoxPh, {}}),
                               fit_cox(d, 1.0, 0.0, {"ridge", ModelFamily::kCoxRidge, {}}),
                               fit_kaplan_meier(d, {"km", ModelFamily::kKaplanMeier, {}})};
  const auto set = build_rashomon_set(std::vector<RashomonMember>{{"cox", 0.1}, {"ridge", 0.12}, {"km", 0.5}}, 0.05, "c_index");
  const VectorXd grid = make_grid(0.1, 2.0);
  const VectorXd x{{1.0, -1.0}};
  const auto ind = build_envelope(set, models, x, grid);
  EXPECT_EQ(ind.member_curves.size(), 2u);
  EXPECT_EQ(ind.reference, predict_survival(*models[0], x, grid));

  const auto pop = build_envelope(set, models, d, grid);
  std::vector<SurvivalCurve> per_unit;
  for (Index i = 0; i < d.size(); ++i) per_unit.push_back(predict_survival(*models[1], d.covariates().row(i).transpose(), grid));
  const auto ridge_mean = mean_curve<double>(per_unit, grid);
  EXPECT_EQ(pop.member_curves.at("ridge"), ridge_mean);
  for (Index i = 0; i < grid.size(); ++i) {
    EXPECT_LE(pop.lower[i], curve_eval(pop.reference, grid[i]));
    EXPECT_GE(pop.upper[i], curve_eval(pop.reference, grid[i]));
  }
}

TEST(Envelope, MissingModelRejected) {
  const auto d = oracle::simulate_cox(50, VectorXd{{0.6}}, 0.4, 74);
  const auto set = build_rashomon_set(std::vector<RashomonMember>{{"ghost", 0.1}}, 0.05, "c_index");
  EXPECT_THROW(build_envelope(set, {fit_kaplan_meier(d)}, VectorXd{{0.0}}, VectorXd{{1.0}}), InvalidArgument);
}

TEST(EnvelopeStats, ExtremesHaveUnitWidth) {
  RashomonEnvelope env;
  env.grid = VectorXd{{1, 2, 3}};
  env.lower = VectorXd::Zero(3);
  env.upper = VectorXd::Ones(3);
  env.reference = SurvivalCurve(env.grid, VectorXd{{1, 0.5, 0}});
  const auto s = envelope_stats(env, VectorXd{{1.0, 2.2, 3.0}});
  EXPECT_EQ(s.mean_width, 1.0);
  EXPECT_EQ(s.max_width, 1.0);
  for (const auto& [t, w] : s.width_at) EXPECT_EQ(w, 1.0);
}

TEST(EnvelopeStats, MatchesDirectRecomputation) {
  Rng rng(75);
  for (int trial = 0; trial < 100; ++trial) {
    std::map<std::string, SurvivalCurve> cs;
    for (int k = 0; k < 4; ++k) cs.emplace("m" + std::to_string(k), oracle::random_curve(rng, 5));
    const VectorXd grid = make_grid(0.5, 6.0);
    const auto env = envelope_from_curves(cs, "m1", grid);
    const VectorXd probes{{0.5, 1.7, 3.0, 6.0}};
    const auto s = envelope_stats(env, probes);
    double sum = 0.0, mx = -1.0, arg = 0.0;
    for (Index i = 0; i < grid.size(); ++i) {
      const double w = env.upper[i] - env.lower[i];
      sum += w;
      if (w > mx) {
        mx = w;
        arg = grid[i];
      }
    }
    ASSERT_NEAR(s.mean_width, sum / double(grid.size()), 1e-15);
    ASSERT_EQ(s.max_width, mx);
    ASSERT_EQ(s.argmax_time, arg);
    for (double t : probes) {
      Index i = 0;
      while (i + 1 < grid.size() && grid[i + 1] <= t) ++i;
      ASSERT_EQ(s.width_at.at(t), env.upper[i] - env.lower[i]);
    }
  }
}

TEST(EnvelopeStats, ProbeOutsideGridRejected) {
  const auto env = envelope_from_curves({{"a", SurvivalCurve(VectorXd{{1}}, VectorXd{{0.5}})}}, "a",
                                        VectorXd{{1.0, 2.0}});
  EXPECT_THROW(envelope_stats(env, VectorXd{{3.0}}), InvalidArgument);
  EXPECT_THROW(envelope_stats(env, VectorXd{{0.5}}), InvalidArgument);
}

}  // namespace
}  // namespace rsurv
