// Copyright 2026 The Booksum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "booksum/pagerank.hpp"

#include <cmath>

namespace booksum {

PageRankResult weighted_pagerank(
    const std::vector<std::vector<std::pair<int, double>>>& adjacency,
    const PageRankParams& params) {
  const std::size_t n = adjacency.size();
  PageRankResult result;
  if (n == 0) return result;

  std::vector<double> out_sum(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [target, weight] : adjacency[j]) {
      (void)target;
      out_sum[j] += weight;
    }
  }
  std::vector<int> sinks;  // dangling nodes
  std::vector<int> non_sinks;
  for (std::size_t j = 0; j < n; ++j) {
    (out_sum[j] > 0.0 ? non_sinks : sinks).push_back(static_cast<int>(j));
  }

  const double d = params.damping;
  const double teleport = (1.0 - d) / static_cast<double>(n);
  std::vector<double> rank(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n, 0.0);

  int iter = 0;
  bool converged = false;
  for (; iter < params.max_iter; ++iter) {
    double sink_mass = 0.0;
    for (int j : sinks) sink_mass += rank[j];

    std::fill(next.begin(), next.end(), teleport);
    for (std::size_t j = 0; j < n; ++j) {
      if (out_sum[j] <= 0.0) continue;
      const double contribution = d * rank[j] / out_sum[j];
      for (const auto& [target, weight] : adjacency[j]) {
        next[target] += contribution * weight;
      }
    }
    if (!non_sinks.empty()) {
      const double share =
          d * sink_mass / static_cast<double>(non_sinks.size());
      for (int i : non_sinks) next[i] += share;
    } else {
      const double share = d * sink_mass / static_cast<double>(n);
      for (std::size_t i = 0; i < n; ++i) next[i] += share;
    }

    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) delta += std::abs(next[i] - rank[i]);
    rank.swap(next);
    if (delta < params.tol) {
      ++iter;
      converged = true;
      break;
    }
  }

  result.weights = std::move(rank);
  result.converged = converged;
  result.iterations = iter;
  return result;
}

}  // namespace booksum
