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

#ifndef BOOKSUM_PAGERANK_H_
#define BOOKSUM_PAGERANK_H_

#include <utility>
#include <vector>

namespace booksum {

struct PageRankParams {
  double damping = 0.85;
  double tol = 1e-8;  // L1 distance between successive iterates
  int max_iter = 100;
};

struct PageRankResult {
  std::vector<double> weights;
  bool converged = true;
  int iterations = 0;
};

// Weighted PageRank with uniform teleport (1-d)/n, starting from the uniform
// distribution. Mass leaving a dangling node (no out-edges) is spread
// uniformly over the non-dangling nodes, so the weights sum to 1 on every
// iteration and an isolated node settles at exactly (1-d)/n. When every node
// is dangling the mass spreads over all nodes instead.
//
// adjacency[j] lists (target, weight) out-edges of node j; weights must be
// positive. Undirected graphs list each edge in both directions.
PageRankResult weighted_pagerank(
    const std::vector<std::vector<std::pair<int, double>>>& adjacency,
    const PageRankParams& params);

}  // namespace booksum

#endif  // BOOKSUM_PAGERANK_H_
