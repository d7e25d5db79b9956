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

#include "rsurv/nonparametric.hpp"

#include <numeric>
#include <vector>

namespace rsurv {

EventTable event_table(const VectorXd& times, const BoolArray& events,
                       std::span<const Index> sample) {
  std::vector<Index> order(sample.begin(), sample.end());
  std::sort(order.begin(), order.end(),
            [&](Index a, Index b) { return times[a] < times[b]; });
  std::vector<double> t, d, r;
  double remaining = double(order.size());
  std::size_t i = 0;
  while (i < order.size()) {
    const double ti = times[order[i]];
    std::size_t j = i;
    double deaths = 0.0;
    while (j < order.size() && times[order[j]] == ti) {
      if (events[order[j]]) deaths += 1.0;
      ++j;
    }
    if (deaths > 0.0) {
      t.push_back(ti);
      d.push_back(deaths);
      r.push_back(remaining);
    }
    remaining -= double(j - i);
    i = j;
  }
  EventTable out;
  out.times = Eigen::Map<VectorXd>(t.data(), Index(t.size()));
  out.deaths = Eigen::Map<VectorXd>(d.data(), Index(d.size()));
  out.at_risk = Eigen::Map<VectorXd>(r.data(), Index(r.size()));
  return out;
}

EventTable event_table(const VectorXd& times, const BoolArray& events) {
  std::vector<Index> all(std::size_t(times.size()));
  std::iota(all.begin(), all.end(), Index(0));
  return event_table(times, events, all);
}

SurvivalCurve product_limit(const EventTable& table) {
  VectorXd probs(table.size());
  double s = 1.0;
  for (Index k = 0; k < table.size(); ++k) {
    s *= 1.0 - table.deaths[k] / table.at_risk[k];
    probs[k] = std::max(s, 0.0);
  }
  return SurvivalCurve(table.times, probs);
}

double CumulativeHazard::operator()(double t) const {
  const double* first = times.data();
  const double* it = std::upper_bound(first, first + times.size(), t);
  return it == first ? 0.0 : values[Index(it - first) - 1];
}

SurvivalCurve CumulativeHazard::survival() const {
  return SurvivalCurve(times, values.unaryExpr([](double v) { return std::exp(-v); }));
}

CumulativeHazard hazard_sum(const EventTable& table) {
  CumulativeHazard h;
  h.times = table.times;
  h.values.resize(table.size());
  double acc = 0.0;
  for (Index k = 0; k < table.size(); ++k) {
    acc += table.deaths[k] / table.at_risk[k];
    h.values[k] = acc;
  }
  return h;
}

SurvivalCurve censoring_survival(const VectorXd& times, const BoolArray& events) {
  const BoolArray censored = !events;
  if (censored.count() == 0) return SurvivalCurve();
  return product_limit(event_table(times, censored));
}

}  // namespace rsurv
