// Copyright 2026 The svcnet Authors
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

#ifndef SVCNET_RANDOM_GRAPHS_H_
#define SVCNET_RANDOM_GRAPHS_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "svcnet/random.h"

namespace svcnet {

using UndirectedEdge = std::pair<std::size_t, std::size_t>;  // first < second

// Uniform G(n, m): m distinct unordered pairs, returned sorted.
// Requires m <= n(n-1)/2 (throws UsageError otherwise).
std::vector<UndirectedEdge> sample_gnm(std::size_t n, std::size_t m, Rng& rng);

// Each ordered pair (i, j), i != j, present independently with probability p.
std::vector<std::pair<std::size_t, std::size_t>> sample_gnp_directed(
    std::size_t n, double p, Rng& rng);

// Stochastic block model. Nodes are numbered block by block; `labels`
// receives each node's block.
struct PlantedPartition {
  std::vector<UndirectedEdge> edges;
  std::vector<std::size_t> labels;
};
PlantedPartition sample_planted_partition(const std::vector<std::size_t>& block_sizes,
                                          double p_in, double p_out, Rng& rng);

}  // namespace svcnet

#endif  // SVCNET_RANDOM_GRAPHS_H_
