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

// Binary survival trees grown by maximizing the two-sample log-rank
// statistic. Leaves keep the event table of their members so a tree can
// answer with either a product-limit curve or a cumulative hazard.

#ifndef RSURV_TREE_HPP_
#define RSURV_TREE_HPP_

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "rsurv/core.hpp"
#include "rsurv/nonparametric.hpp"
#include "rsurv/random.hpp"

namespace rsurv {

struct Split {
  Index feature = -1;
  double threshold = 0.0;
  double statistic = 0.0;
};

// Split statistic: the standardized two-sample log-rank chi-square
//   (sum_k dL_k - YL_k d_k / Y_k)^2 / sum_k (YL_k / Y_k)(1 - YL_k / Y_k)(Y_k - d_k)/(Y_k - 1) d_k
// over the node's distinct event times.
//
// Exhaustive search over midpoints of sorted unique values of each candidate
// feature. Both children need >= min_node_size samples and the statistic
// must be > 0. Ties go to the lower feature index, then the lower threshold.
std::optional<Split> best_logrank_split(const MatrixXd& x, const VectorXd& times,
                                        const BoolArray& events, std::span<const Index> node,
                                        std::span<const Index> features, Index min_node_size);

struct TreeOptions {
  Index min_node_size = 5;
  int max_depth = std::numeric_limits<int>::max();
  Index mtry = 0;  // features tried per node; 0 = all
};

class SurvivalTree {
 public:
  struct Node {
    Index feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    Index left = -1;
    Index right = -1;
    Index leaf = -1;
  };

  SurvivalTree() = default;
  SurvivalTree(std::vector<Node> nodes, std::vector<EventTable> leaves);

  // `sample` lists training row indices and may repeat (bootstrap). `rng` is
  // only consulted when options.mtry selects a strict feature subset.
  static SurvivalTree grow(const MatrixXd& x, const VectorXd& times, const BoolArray& events,
                           std::span<const Index> sample, const TreeOptions& options, Rng* rng);

  const EventTable& leaf_for(const Eigen::Ref<const VectorXd>& x) const;
  Index leaf_index(const Eigen::Ref<const VectorXd>& x) const;

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<EventTable>& leaves() const { return leaves_; }
  int depth() const;

 private:
  std::vector<Node> nodes_;
  std::vector<EventTable> leaves_;
};

}  // namespace rsurv

#endif  // RSURV_TREE_HPP_
