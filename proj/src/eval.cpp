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

#include "rsurv/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rsurv/parallel.hpp"

namespace rsurv {
namespace {

// Fenwick tree of counts over risk ranks.
class RankCounter {
 public:
  explicit RankCounter(std::size_t n) : tree_(n + 1, 0) {}
  void add(std::size_t rank) {
    for (std::size_t i = rank + 1; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
    ++total_;
  }
  // Number of entries with rank < r.
  std::int64_t below(std::size_t r) const {
    std::int64_t s = 0;
    for (std::size_t i = r; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }
  std::int64_t total() const { return total_; }

 private:
  std::vector<std::int64_t> tree_;
  std::int64_t total_ = 0;
};

}  // namespace

Concordance c_index(const VectorXd& risk, const VectorXd& times, const BoolArray& events) {
  const Index n = risk.size();
  if (times.size() != n || events.size() != n) {
    throw InvalidArgument("c_index: risk, times and events differ in length");
  }
  if (!risk.allFinite()) throw InvalidArgument("c_index: non-finite risk score");

  std::vector<double> levels(risk.data(), risk.data() + n);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<std::size_t> rank(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    rank[std::size_t(i)] =
        std::size_t(std::lower_bound(levels.begin(), levels.end(), risk[i]) - levels.begin());
  }

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index(0));
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return times[a] > times[b]; });

  Concordance out;
  RankCounter later(levels.size());  // subjects with strictly larger times
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && times[order[j]] == times[order[i]]) ++j;
    for (std::size_t k = i; k < j; ++k) {
      const Index s = order[k];
      if (!events[s]) continue;
      const std::size_t r = rank[std::size_t(s)];
      const std::int64_t lower = later.below(r);
      const std::int64_t tied = later.below(r + 1) - lower;
      out.concordant += lower;
      out.tied_risk += tied;
      out.comparable_pairs += later.total();
    }
    for (std::size_t k = i; k < j; ++k) later.add(rank[std::size_t(order[k])]);
    i = j;
  }
  if (out.comparable_pairs == 0) throw DegenerateData("c_index: no comparable pairs");
  out.c_index = (double(out.concordant) + 0.5 * double(out.tied_risk)) /
                double(out.comparable_pairs);
  return out;
}

double brier_score(const FittedModel& model, const TimeToEventDataset& test, double t,
                   const SurvivalCurve& censoring) {
  if (test.size() == 0) throw InvalidArgument("brier_score: empty test set");
  double total = 0.0;
  for (Index i = 0; i < test.size(); ++i) {
    const double ti = test.time(i);
    double weight_inv;
    double target;
    if (ti > t) {
      weight_inv = curve_eval(censoring, t);
      target = 1.0;
    } else if (test.event(i)) {
      weight_inv = curve_eval_left(censoring, ti);
      target = 0.0;
    } else {
      continue;
    }
    if (!(weight_inv > 0.0)) {
      throw DegenerateData("brier_score: censoring survival is 0 at t = " + std::to_string(t) +
                           "; horizon not estimable");
    }
    const double s = curve_eval(model.survival(test.covariates().row(i).transpose()), t);
    total += (target - s) * (target - s) / weight_inv;
  }
  return total / double(test.size());
}

double integrated_brier_score(const std::map<double, double>& brier_at) {
  if (brier_at.empty()) throw InvalidArgument("integrated_brier_score: no horizons");
  if (brier_at.size() == 1) return brier_at.begin()->second;
  double area = 0.0;
  auto prev = brier_at.begin();
  for (auto it = std::next(prev); it != brier_at.end(); prev = it++) {
    area += 0.5 * (prev->second + it->second) * (it->first - prev->first);
  }
  return area / (brier_at.rbegin()->first - brier_at.begin()->first);
}

std::vector<EvaluationRecord> evaluate_zoo(const std::vector<ModelPtr>& models,
                                           const TimeToEventDataset& test,
                                           const SurvivalCurve& censoring,
                                           const EvaluationOptions& options) {
  if (options.brier_horizons.size() > 0) validate_grid(options.brier_horizons);
  std::vector<EvaluationRecord> records(models.size());
  parallel_for(models.size(), [&](std::size_t m) {
    const FittedModel& model = *models[m];
    EvaluationRecord& rec = records[m];
    rec.model_id = model.id();
    try {
      VectorXd risk(test.size());
      for (Index i = 0; i < test.size(); ++i) {
        risk[i] = model.risk_score(test.covariates().row(i).transpose(), options.risk_horizon);
      }
      const Concordance c = c_index(risk, test.times(), test.events());
      rec.c_index = c.c_index;
      rec.n_comparable_pairs = c.comparable_pairs;
      for (Index h = 0; h < options.brier_horizons.size(); ++h) {
        const double t = options.brier_horizons[h];
        rec.brier_at[t] = brier_score(model, test, t, censoring);
      }
      rec.integrated_brier =
          rec.brier_at.empty() ? 0.0 : integrated_brier_score(rec.brier_at);
    } catch (const std::exception& e) {
      throw Error("evaluating model " + rec.model_id + ": " + e.what());
    }
  });
  std::sort(records.begin(), records.end(),
            [](const EvaluationRecord& a, const EvaluationRecord& b) {
              return a.model_id < b.model_id;
            });
  return records;
}

}  // namespace rsurv
