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

#include "rsurv/tree.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace rsurv {

std::optional<Split> best_logrank_split(const MatrixXd& x, const VectorXd& times,
                                        const BoolArray& events, std::span<const Index> node,
                                        std::span<const Index> features, Index min_node_size) {
  const Index m = Index(node.size());
  if (m < 2 * std::max<Index>(min_node_size, 1)) return std::nullopt;

  std::vector<double> event_times;
  for (Index s : node) {
    if (events[s]) event_times.push_back(times[s]);
  }
  std::sort(event_times.begin(), event_times.end());
  event_times.erase(std::unique(event_times.begin(), event_times.end()), event_times.end());
  const std::size_t n_times = event_times.size();
  if (n_times == 0) return std::nullopt;

  // reach[s]: number of event times the sample is at risk for.
  std::vector<std::size_t> reach(node.size());
  std::vector<double> at_risk(n_times, 0.0), deaths(n_times, 0.0);
  for (std::size_t a = 0; a < node.size(); ++a) {
    const Index s = node[a];
    reach[a] = std::size_t(std::upper_bound(event_times.begin(), event_times.end(), times[s]) -
                           event_times.begin());
    for (std::size_t k = 0; k < reach[a]; ++k) at_risk[k] += 1.0;
    if (events[s]) deaths[reach[a] - 1] += 1.0;
  }

  std::optional<Split> best;
  double best_stat = 0.0;
  std::vector<std::size_t> order(node.size());
  std::vector<double> left_risk(n_times), left_deaths(n_times);

  for (Index f : features) {
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return x(node[a], f) < x(node[b], f);
    });
    std::fill(left_risk.begin(), left_risk.end(), 0.0);
    std::fill(left_deaths.begin(), left_deaths.end(), 0.0);

    for (Index pos = 0; pos + 1 < m; ++pos) {
      const std::size_t a = order[std::size_t(pos)];
      for (std::size_t k = 0; k < reach[a]; ++k) left_risk[k] += 1.0;
      if (events[node[a]]) left_deaths[reach[a] - 1] += 1.0;

      const double v = x(node[a], f);
      const double next = x(node[order[std::size_t(pos + 1)]], f);
      if (!(v < next)) continue;
      const Index n_left = pos + 1;
      if (n_left < min_node_size || m - n_left < min_node_size) continue;

      double num = 0.0, var = 0.0;
      for (std::size_t k = 0; k < n_times; ++k) {
        const double y = at_risk[k], d = deaths[k], yl = left_risk[k];
        num += left_deaths[k] - yl * d / y;
        if (y > 1.0) {
          const double frac = yl / y;
          var += frac * (1.0 - frac) * (y - d) / (y - 1.0) * d;
        }
      }
      if (!(var > 0.0)) continue;
      const double stat = num * num / var;
      if (stat > best_stat) {
        best_stat = stat;
        double threshold = 0.5 * (v + next);
        if (!(threshold < next)) threshold = v;
        best = Split{f, threshold, stat};
      }
    }
  }
  return best;
}

SurvivalTree::SurvivalTree(std::vector<Node> nodes, std::vector<EventTable> leaves)
    : nodes_(std::move(nodes)), leaves_(std::move(leaves)) {
  if (nodes_.empty()) throw InvalidArgument("survival tree: no nodes");
  for (const auto& nd : nodes_) {
    const bool leaf = nd.feature < 0;
    if (leaf && (nd.leaf < 0 || nd.leaf >= Index(leaves_.size()))) {
      throw InvalidArgument("survival tree: leaf index out of range");
    }
    if (!leaf && (nd.left <= 0 || nd.right <= 0 || nd.left >= Index(nodes_.size()) ||
                  nd.right >= Index(nodes_.size()))) {
      throw InvalidArgument("survival tree: child index out of range");
    }
  }
}

SurvivalTree SurvivalTree::grow(const MatrixXd& x, const VectorXd& times, const BoolArray& events,
                                std::span<const Index> sample, const TreeOptions& options,
                                Rng* rng) {
  const Index p = x.cols();
  const bool subsample = options.mtry > 0 && options.mtry < p;
  if (subsample && rng == nullptr) throw InvalidArgument("survival tree: mtry needs an rng");
  std::vector<Index> all_features(static_cast<std::size_t>(p));
  std::iota(all_features.begin(), all_features.end(), Index(0));

  struct Work {
    Index node;
    std::vector<Index> samples;
    int depth;
  };
  SurvivalTree tree;
  tree.nodes_.push_back(Node{});
  std::vector<Work> stack;
  stack.push_back({0, std::vector<Index>(sample.begin(), sample.end()), 0});

  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();

    std::optional<Split> split;
    if (w.depth < options.max_depth) {
      std::vector<Index> features = all_features;
      if (subsample) {
        for (Index k = 0; k < options.mtry; ++k) {
          const auto pick = Index(uniform_index(*rng, std::uint64_t(p - k)));
          std::swap(features[std::size_t(k)], features[std::size_t(k + pick)]);
        }
        features.resize(std::size_t(options.mtry));
        std::sort(features.begin(), features.end());
      }
      split = best_logrank_split(x, times, events, w.samples, features, options.min_node_size);
    }

    if (!split) {
      tree.nodes_[std::size_t(w.node)].leaf = Index(tree.leaves_.size());
      tree.leaves_.push_back(event_table(times, events, w.samples));
      continue;
    }
    std::vector<Index> left, right;
    for (Index s : w.samples) {
      (x(s, split->feature) <= split->threshold ? left : right).push_back(s);
    }
    const Index left_id = Index(tree.nodes_.size());
    tree.nodes_.push_back(Node{});
    const Index right_id = Index(tree.nodes_.size());
    tree.nodes_.push_back(Node{});
    Node& nd = tree.nodes_[std::size_t(w.node)];
    nd.feature = split->feature;
    nd.threshold = split->threshold;
    nd.left = left_id;
    nd.right = right_id;
    stack.push_back({right_id, std::move(right), w.depth + 1});
    stack.push_back({left_id, std::move(left), w.depth + 1});
  }
  return tree;
}

Index SurvivalTree::leaf_index(const Eigen::Ref<const VectorXd>& x) const {
  Index id = 0;
  while (nodes_[std::size_t(id)].feature >= 0) {
    const Node& nd = nodes_[std::size_t(id)];
    id = x[nd.feature] <= nd.threshold ? nd.left : nd.right;
  }
  return nodes_[std::size_t(id)].leaf;
}

const EventTable& SurvivalTree::leaf_for(const Eigen::Ref<const VectorXd>& x) const {
  return leaves_[std::size_t(leaf_index(x))];
}

int SurvivalTree::depth() const {
  int deepest = 0;
  std::vector<std::pair<Index, int>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [id, d] = stack.back();
    stack.pop_back();
    deepest = std::max(deepest, d);
    const Node& nd = nodes_[std::size_t(id)];
    if (nd.feature >= 0) {
      stack.emplace_back(nd.left, d + 1);
      stack.emplace_back(nd.right, d + 1);
    }
  }
  return deepest;
}

}  // namespace rsurv
