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

#include "svcnet/metrics.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "svcnet/error.h"
#include "svcnet/parallel.h"
#include "svcnet/random.h"
#include "svcnet/random_graphs.h"

namespace svcnet {
namespace {

constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);

struct BfsTotals {
  std::uint64_t sum = 0;
  std::uint64_t reached = 0;
  std::size_t max = 0;
};

template <typename Neighbors>
BfsTotals bfs_from(NodeIndex source, Neighbors&& neighbors,
                   std::vector<std::size_t>& dist, std::deque<NodeIndex>& queue) {
  BfsTotals totals;
  std::fill(dist.begin(), dist.end(), kUnseen);
  dist[source] = 0;
  queue.assign(1, source);
  while (!queue.empty()) {
    NodeIndex u = queue.front();
    queue.pop_front();
    for (NodeIndex v : neighbors(u)) {
      if (dist[v] != kUnseen) continue;
      dist[v] = dist[u] + 1;
      totals.sum += dist[v];
      ++totals.reached;
      totals.max = std::max(totals.max, dist[v]);
      queue.push_back(v);
    }
  }
  return totals;
}

std::vector<std::size_t> histogram(const std::vector<std::size_t>& degrees) {
  if (degrees.empty()) return {};
  std::vector<std::size_t> h(*std::max_element(degrees.begin(), degrees.end()) + 1, 0);
  for (std::size_t d : degrees) ++h[d];
  return h;
}

std::vector<std::pair<std::string, std::size_t>> top_k(const Digraph& g,
                                                       const std::vector<std::size_t>& degree,
                                                       std::size_t k) {
  std::vector<NodeIndex> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
    if (degree[a] != degree[b]) return degree[a] > degree[b];
    return g.name(a) < g.name(b);
  });
  order.resize(std::min(k, order.size()));
  std::vector<std::pair<std::string, std::size_t>> out;
  for (NodeIndex v : order) out.emplace_back(g.name(v), degree[v]);
  return out;
}

}  // namespace

ComponentLabels weak_component_labels(const Digraph& g) {
  ComponentLabels out;
  out.label.assign(g.size(), kUnseen);
  std::vector<NodeIndex> stack;
  for (NodeIndex start = 0; start < g.size(); ++start) {
    if (out.label[start] != kUnseen) continue;
    out.label[start] = out.count;
    stack.assign(1, start);
    while (!stack.empty()) {
      NodeIndex u = stack.back();
      stack.pop_back();
      for (auto list : {g.out(u), g.in(u)}) {
        for (NodeIndex v : list) {
          if (out.label[v] == kUnseen) {
            out.label[v] = out.count;
            stack.push_back(v);
          }
        }
      }
    }
    ++out.count;
  }
  return out;
}

std::vector<NodeIndex> giant_component_nodes(const Digraph& g) {
  if (g.size() == 0) return {};
  ComponentLabels labels = weak_component_labels(g);
  std::vector<std::size_t> sizes(labels.count, 0);
  std::vector<const std::string*> smallest(labels.count, nullptr);
  for (NodeIndex v = 0; v < g.size(); ++v) {
    std::size_t c = labels.label[v];
    ++sizes[c];
    if (smallest[c] == nullptr || g.name(v) < *smallest[c]) smallest[c] = &g.name(v);
  }
  std::size_t best = 0;
  for (std::size_t c = 1; c < labels.count; ++c) {
    if (sizes[c] > sizes[best] || (sizes[c] == sizes[best] && *smallest[c] < *smallest[best])) {
      best = c;
    }
  }
  std::vector<NodeIndex> nodes;
  for (NodeIndex v = 0; v < g.size(); ++v) {
    if (labels.label[v] == best) nodes.push_back(v);
  }
  return nodes;
}

ComponentReport weak_components(const Digraph& g) {
  ComponentReport report;
  if (g.size() == 0) return report;
  ComponentLabels labels = weak_component_labels(g);
  std::vector<std::size_t> sizes(labels.count, 0);
  for (std::size_t c : labels.label) ++sizes[c];
  report.component_sizes = sizes;
  std::sort(report.component_sizes.begin(), report.component_sizes.end(), std::greater<>());

  std::vector<NodeIndex> giant = giant_component_nodes(g);
  std::size_t giant_label = labels.label[giant.front()];
  std::size_t giant_links = 0;
  for (const auto& [u, v] : g.edges()) {
    if (labels.label[u] == giant_label) ++giant_links;
  }
  report.giant_node_fraction =
      static_cast<double>(giant.size()) / static_cast<double>(g.size());
  if (g.edge_count() > 0) {
    report.giant_link_fraction =
        static_cast<double>(giant_links) / static_cast<double>(g.edge_count());
  }
  return report;
}

InteractionNetwork giant_component(const InteractionNetwork& net) {
  return induced_subgraph(net, giant_component_nodes(net.graph));
}

DistanceReport distance_report(const Digraph& g) {
  const std::size_t n = g.size();
  std::vector<BfsTotals> per_source(n);
  // One scratch buffer per source keeps iterations independent.
  parallel_for(n, [&](std::size_t s) {
    std::vector<std::size_t> dist(n);
    std::deque<NodeIndex> queue;
    per_source[s] = bfs_from(s, [&](NodeIndex u) { return g.out(u); }, dist, queue);
  });

  DistanceReport report;
  std::size_t diameter = 0;
  for (const auto& t : per_source) {
    report.total_distance += t.sum;
    report.reachable_ordered_pairs += t.reached;
    diameter = std::max(diameter, t.max);
  }
  const std::uint64_t all_pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1);
  report.unreachable_ordered_pairs = all_pairs - report.reachable_ordered_pairs;
  if (report.reachable_ordered_pairs > 0) {
    report.average_distance = static_cast<double>(report.total_distance) /
                              static_cast<double>(report.reachable_ordered_pairs);
    report.diameter = diameter;
  }
  return report;
}

double transitivity(const Digraph& g) {
  auto adj = g.undirected_adjacency();
  std::uint64_t triangles_x3 = 0;  // each triangle seen once per corner
  std::uint64_t triples = 0;
  for (NodeIndex v = 0; v < adj.size(); ++v) {
    const auto& nv = adj[v];
    std::uint64_t d = nv.size();
    triples += d * (d - (d > 0 ? 1 : 0)) / 2;
    for (NodeIndex u : nv) {
      if (u <= v) continue;
      const auto& nu = adj[u];
      // Common neighbors w > u close the triangle (v, u, w) exactly once.
      auto it_v = std::upper_bound(nv.begin(), nv.end(), u);
      auto it_u = std::upper_bound(nu.begin(), nu.end(), u);
      while (it_v != nv.end() && it_u != nu.end()) {
        if (*it_v < *it_u) {
          ++it_v;
        } else if (*it_u < *it_v) {
          ++it_u;
        } else {
          triangles_x3 += 3;
          ++it_v;
          ++it_u;
        }
      }
    }
  }
  if (triples == 0) return 0.0;
  return static_cast<double>(triangles_x3) / static_cast<double>(triples);
}

std::vector<std::size_t> in_degrees(const Digraph& g) {
  std::vector<std::size_t> d(g.size());
  for (NodeIndex v = 0; v < g.size(); ++v) d[v] = g.in(v).size();
  return d;
}

std::vector<std::size_t> out_degrees(const Digraph& g) {
  std::vector<std::size_t> d(g.size());
  for (NodeIndex v = 0; v < g.size(); ++v) d[v] = g.out(v).size();
  return d;
}

std::vector<std::size_t> total_degrees(const Digraph& g) {
  std::vector<std::size_t> d(g.size());
  for (NodeIndex v = 0; v < g.size(); ++v) d[v] = g.in(v).size() + g.out(v).size();
  return d;
}

DegreeReport degree_report(const Digraph& g, std::size_t top_k_count) {
  DegreeReport report;
  auto in = in_degrees(g);
  auto out = out_degrees(g);
  report.in_histogram = histogram(in);
  report.out_histogram = histogram(out);
  report.total_histogram = histogram(total_degrees(g));
  report.hubs = top_k(g, out, top_k_count);
  report.authorities = top_k(g, in, top_k_count);
  return report;
}

std::optional<double> undirected_giant_average_distance(
    const std::vector<std::vector<NodeIndex>>& adjacency) {
  const std::size_t n = adjacency.size();
  if (n < 2) return std::nullopt;
  // Largest component; ties to the one with the smallest node index.
  std::vector<std::size_t> label(n, kUnseen);
  std::size_t best_label = 0, best_size = 0, count = 0;
  std::vector<NodeIndex> stack;
  for (NodeIndex s = 0; s < n; ++s) {
    if (label[s] != kUnseen) continue;
    std::size_t size = 0;
    label[s] = count;
    stack.assign(1, s);
    while (!stack.empty()) {
      NodeIndex u = stack.back();
      stack.pop_back();
      ++size;
      for (NodeIndex v : adjacency[u]) {
        if (label[v] == kUnseen) {
          label[v] = count;
          stack.push_back(v);
        }
      }
    }
    if (size > best_size) {
      best_size = size;
      best_label = count;
    }
    ++count;
  }
  if (best_size < 2) return std::nullopt;

  std::vector<NodeIndex> members;
  for (NodeIndex v = 0; v < n; ++v) {
    if (label[v] == best_label) members.push_back(v);
  }
  std::vector<std::uint64_t> sums(members.size());
  parallel_for(members.size(), [&](std::size_t k) {
    std::vector<std::size_t> dist(n);
    std::deque<NodeIndex> queue;
    sums[k] = bfs_from(members[k], [&](NodeIndex u) { return std::span(adjacency[u]); },
                       dist, queue)
                  .sum;
  });
  std::uint64_t total = std::accumulate(sums.begin(), sums.end(), std::uint64_t{0});
  double pairs = static_cast<double>(best_size) * static_cast<double>(best_size - 1);
  return static_cast<double>(total) / pairs;
}

SmallWorldReport er_baseline(std::size_t n, std::size_t m, std::size_t samples,
                             std::uint64_t seed) {
  if (samples == 0) throw UsageError("ER baseline needs at least one sample");
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > pairs) throw UsageError("ER baseline needs m <= n(n-1)/2");

  SmallWorldReport report;
  report.nodes = n;
  report.links = m;
  report.samples = samples;
  report.seed = seed;
  if (n > 0) {
    double mean_degree = 2.0 * static_cast<double>(m) / static_cast<double>(n);
    if (mean_degree > 1.0) {
      report.er_estimate = std::log(static_cast<double>(n)) / std::log(mean_degree);
    }
  }

  std::vector<std::optional<double>> values(samples);
  for (std::size_t r = 0; r < samples; ++r) {
    Rng rng = derive_rng(seed, r);
    auto edges = sample_gnm(n, m, rng);
    std::vector<std::vector<NodeIndex>> adj(n);
    for (const auto& [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    values[r] = undirected_giant_average_distance(adj);
  }

  std::vector<double> defined;
  for (const auto& v : values) {
    if (v) defined.push_back(*v);
  }
  if (!defined.empty()) {
    double mean = std::accumulate(defined.begin(), defined.end(), 0.0) /
                  static_cast<double>(defined.size());
    double var = 0.0;
    for (double v : defined) var += (v - mean) * (v - mean);
    report.er_sampled_mean = mean;
    report.er_sampled_stddev =
        defined.size() > 1 ? std::sqrt(var / static_cast<double>(defined.size() - 1)) : 0.0;
  }
  return report;
}

void attach_observed(SmallWorldReport& report, std::optional<double> observed) {
  report.observed = observed;
  report.ratio.reset();
  if (observed && report.er_sampled_mean && *report.er_sampled_mean > 0.0) {
    report.ratio = *observed / *report.er_sampled_mean;
  }
}

}  // namespace svcnet
