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

#include "svcnet/random_graphs.h"

#include <algorithm>
#include <set>

#include "svcnet/error.h"

namespace svcnet {

std::vector<UndirectedEdge> sample_gnm(std::size_t n, std::size_t m, Rng& rng) {
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > pairs) {
    throw UsageError("G(n,m) needs m <= n(n-1)/2 (n=" + std::to_string(n) +
                     ", m=" + std::to_string(m) + ")");
  }

  std::set<UndirectedEdge> chosen;
  // Dense requests: sample the pairs to leave out instead.
  const bool complement = m > pairs / 2;
  const std::size_t draws = complement ? pairs - m : m;
  while (chosen.size() < draws) {
    std::size_t u = uniform_below(rng, n);
    std::size_t v = uniform_below(rng, n);
    if (u == v) continue;
    chosen.emplace(std::min(u, v), std::max(u, v));
  }
  if (!complement) return {chosen.begin(), chosen.end()};

  std::vector<UndirectedEdge> edges;
  edges.reserve(m);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!chosen.contains({u, v})) edges.emplace_back(u, v);
    }
  }
  return edges;
}

std::vector<std::pair<std::size_t, std::size_t>> sample_gnp_directed(
    std::size_t n, double p, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && bernoulli(rng, p)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

PlantedPartition sample_planted_partition(const std::vector<std::size_t>& block_sizes,
                                          double p_in, double p_out, Rng& rng) {
  PlantedPartition out;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    out.labels.insert(out.labels.end(), block_sizes[b], b);
  }
  const std::size_t n = out.labels.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      double p = out.labels[u] == out.labels[v] ? p_in : p_out;
      if (bernoulli(rng, p)) out.edges.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace svcnet
