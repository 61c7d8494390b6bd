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

#include "svcnet/community.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "svcnet/error.h"
#include "svcnet/random_graphs.h"
#include "test_util.h"

namespace svcnet {
namespace {

using testing::make_undirected;

// Q by counting edge fractions directly: sum_c (e_cc - a_c^2).
double brute_modularity(const Digraph& g, const std::vector<std::size_t>& label) {
  auto adj = g.undirected_adjacency();
  double m = 0;
  for (const auto& l : adj) m += static_cast<double>(l.size());
  m /= 2;
  if (m == 0) return 0.0;
  std::map<std::size_t, double> e, a;
  for (NodeIndex v = 0; v < adj.size(); ++v) {
    a[label[v]] += static_cast<double>(adj[v].size()) / (2 * m);
    for (NodeIndex u : adj[v]) {
      if (label[u] == label[v]) e[label[v]] += 1.0 / (2 * m);
    }
  }
  double q = 0;
  for (auto [c, ac] : a) q += e[c] - ac * ac;
  return q;
}

Partition from_labels(const std::vector<std::size_t>& labels) {
  Partition p;
  p.assignment = labels;
  p.community_count = *std::max_element(labels.begin(), labels.end()) + 1;
  return p;
}

Digraph two_k5_bridge() {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t base : {0u, 5u})
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j) e.emplace_back(base + i, base + j);
  e.emplace_back(4, 5);
  return make_undirected(10, e);
}

TEST(ModularityTest, Fixtures) {
  Digraph bridge =
      make_undirected(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  EXPECT_EQ(modularity(bridge, from_labels({0, 0, 0, 0, 0, 0})), 0.0);
  EXPECT_NEAR(modularity(bridge, from_labels({0, 0, 0, 1, 1, 1})), 5.0 / 14.0, 1e-12);
  EXPECT_NEAR(brute_modularity(bridge, {0, 0, 0, 1, 1, 1}), 5.0 / 14.0, 1e-12);

  Digraph two_k3 = make_undirected(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_NEAR(modularity(two_k3, from_labels({0, 0, 0, 1, 1, 1})), 0.5, 1e-12);
  EXPECT_NEAR(brute_modularity(two_k3, {0, 0, 0, 1, 1, 1}), 0.5, 1e-12);
}

TEST(ModularityTest, MatchesEdgeFractionOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng = derive_rng(seed, 21);
    std::size_t n = 2 + uniform_below(rng, 30);
    auto edges = sample_gnm(n, uniform_below(rng, n * (n - 1) / 2 + 1), rng);
    Digraph g = make_undirected(n, edges);
    std::vector<std::size_t> labels(n);
    std::size_t k = 1 + uniform_below(rng, 4);
    for (auto& l : labels) l = uniform_below(rng, k);
    Partition p = from_labels(labels);
    EXPECT_NEAR(modularity(g, p), brute_modularity(g, labels), 1e-12);
  }
}

TEST(ModularityTest, RejectsMismatchedPartition) {
  Digraph g = make_undirected(3, {{0, 1}});
  EXPECT_THROW(modularity(g, from_labels({0, 0})), UsageError);
  Partition bad{{0, 0, 3}, 2};
  EXPECT_THROW(modularity(g, bad), UsageError);
}

TEST(WalktrapTest, TwoCliquesBestCutAgreesWithExhaustiveSearch) {
  Digraph g = two_k5_bridge();
  Dendrogram d = walktrap(g);
  EXPECT_EQ(d.leaves, 10u);
  EXPECT_EQ(d.merges.size(), 9u);
  ScoredPartition best = best_partition(d, g);
  EXPECT_EQ(best.partition.community_count, 2u);
  for (NodeIndex v = 0; v < 10; ++v) {
    EXPECT_EQ(best.partition.assignment[v], v < 5 ? 0u : 1u);
  }

  // Exhaustive search over all bipartitions.
  double best_q = -1;
  unsigned best_mask = 0;
  for (unsigned mask = 0; mask < (1u << 9); ++mask) {
    std::vector<std::size_t> labels(10, 0);
    for (std::size_t v = 1; v < 10; ++v) labels[v] = (mask >> (v - 1)) & 1u;
    double q = brute_modularity(g, labels);
    if (q > best_q + 1e-12) {
      best_q = q;
      best_mask = mask;
    }
  }
  EXPECT_EQ(best_mask, 0b111110000u);
  EXPECT_NEAR(best.modularity, best_q, 1e-12);
}

TEST(WalktrapTest, ClosedFormFirstMergeHeight) {
  // Path a-b: with self-loops every node has degree 2 and the one-step walk
  // vectors are (1/2, 1/2) from both ends, so the merge costs nothing.
  Dendrogram d = walktrap(make_undirected(2, {{0, 1}}), 1);
  ASSERT_EQ(d.merges.size(), 1u);
  EXPECT_EQ(d.merges[0].a, 0u);
  EXPECT_EQ(d.merges[0].b, 1u);
  EXPECT_EQ(d.merges[0].height, 0.0);
}

TEST(WalktrapTest, ComponentsMergeSeparately) {
  Digraph g = make_undirected(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  Dendrogram d = walktrap(g);
  EXPECT_EQ(d.merges.size(), 4u);  // node 6 stays alone
  ScoredPartition best = best_partition(d, g);
  EXPECT_EQ(best.partition.community_count, 3u);
  EXPECT_NEAR(best.modularity, 0.5, 1e-12);
}

TEST(WalktrapTest, PartitionAt) {
  Dendrogram d = walktrap(two_k5_bridge());
  EXPECT_EQ(partition_at(d, 0).community_count, 10u);
  EXPECT_EQ(partition_at(d, 8).community_count, 2u);
  EXPECT_EQ(partition_at(d, 9).community_count, 1u);
}

TEST(WalktrapTest, Errors) {
  EXPECT_THROW(walktrap(Digraph()), UsageError);
  EXPECT_THROW(walktrap(make_undirected(2, {{0, 1}}), 0), UsageError);
}

// Independent Walktrap: walk vectors from explicit matrix powers, community
// vectors as plain member averages, every adjacent pair rescored each step.
struct OracleMerge {
  std::set<NodeIndex> a, b;
  double height;
};

std::vector<OracleMerge> oracle_walktrap(const Digraph& g, std::size_t t) {
  const std::size_t n = g.size();
  auto adj = g.undirected_adjacency();
  std::vector<std::vector<double>> p(n, std::vector<double>(n, 0.0));
  std::vector<double> d(n);
  for (NodeIndex i = 0; i < n; ++i) {
    d[i] = static_cast<double>(adj[i].size() + 1);
    p[i][i] = 1.0 / d[i];
    for (NodeIndex j : adj[i]) p[i][j] = 1.0 / d[i];
  }
  std::vector<std::vector<double>> pt(n, std::vector<double>(n, 0.0));
  for (NodeIndex i = 0; i < n; ++i) pt[i][i] = 1.0;
  for (std::size_t s = 0; s < t; ++s) {
    std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
    for (NodeIndex i = 0; i < n; ++i)
      for (NodeIndex k = 0; k < n; ++k)
        for (NodeIndex j = 0; j < n; ++j) next[i][j] += pt[i][k] * p[k][j];
    pt = next;
  }
  std::map<std::size_t, std::set<NodeIndex>> live;
  for (NodeIndex i = 0; i < n; ++i) live[i] = {i};
  std::size_t next_id = n;
  std::vector<OracleMerge> out;
  auto vec = [&](const std::set<NodeIndex>& c) {
    std::vector<double> v(n, 0.0);
    for (NodeIndex i : c)
      for (NodeIndex k = 0; k < n; ++k) v[k] += pt[i][k] / static_cast<double>(c.size());
    return v;
  };
  while (live.size() > 1) {
    double best = INFINITY;
    std::size_t ba = 0, bb = 0;
    for (auto& [ia, ca] : live) {
      for (auto& [ib, cb] : live) {
        if (ib <= ia) continue;
        bool adjacent = false;
        for (NodeIndex u : ca)
          for (NodeIndex v : adj[u]) adjacent = adjacent || cb.count(v);
        if (!adjacent) continue;
        auto va = vec(ca), vb = vec(cb);
        double r2 = 0;
        for (NodeIndex k = 0; k < n; ++k) r2 += (va[k] - vb[k]) * (va[k] - vb[k]) / d[k];
        double sa = static_cast<double>(ca.size()), sb = static_cast<double>(cb.size());
        double delta = sa * sb / (sa + sb) * r2 / static_cast<double>(n);
        if (delta < best) {
          best = delta;
          ba = ia;
          bb = ib;
        }
      }
    }
    out.push_back({live[ba], live[bb], best});
    std::set<NodeIndex> merged = live[ba];
    merged.insert(live[bb].begin(), live[bb].end());
    live.erase(ba);
    live.erase(bb);
    live[next_id++] = merged;
  }
  return out;
}

TEST(WalktrapTest, AgreesWithDirectOracle) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Rng rng = derive_rng(seed, 31);
    std::size_t n = 4 + uniform_below(rng, 12);
    auto edges = sample_gnm(n, n + uniform_below(rng, n), rng);
    for (std::size_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);  // connected
    Digraph g = make_undirected(n, edges);
    std::size_t t = 1 + seed % 5;
    Dendrogram d = walktrap(g, t);
    auto oracle = oracle_walktrap(g, t);
    ASSERT_EQ(d.merges.size(), oracle.size());

    std::vector<std::set<NodeIndex>> members(n + d.merges.size());
    for (NodeIndex v = 0; v < n; ++v) members[v] = {v};
    for (std::size_t k = 0; k < d.merges.size(); ++k) {
      const auto& m = d.merges[k];
      std::set<std::set<NodeIndex>> got{members[m.a], members[m.b]};
      std::set<std::set<NodeIndex>> want{oracle[k].a, oracle[k].b};
      ASSERT_EQ(got, want) << "seed " << seed << " merge " << k;
      EXPECT_NEAR(m.height, oracle[k].height, 1e-12 + 1e-9 * oracle[k].height);
      members[n + k] = members[m.a];
      members[n + k].insert(members[m.b].begin(), members[m.b].end());
    }
  }
}

TEST(WalktrapTest, RecoversPlantedBlocksMostOfTheTime) {
  int exact = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng = derive_rng(seed, 41);
    PlantedPartition pp = sample_planted_partition({20, 20}, 0.5, 0.02, rng);
    Digraph g = make_undirected(40, pp.edges);
    ScoredPartition best = best_partition(walktrap(g), g);
    exact += best.partition.assignment == pp.labels;
  }
  EXPECT_GE(exact, 18);
}

TEST(DomainOverlapTest, PurityAndTable) {
  Partition p = from_labels({0, 0, 1, 1, 1});
  DomainOverlap o = domain_overlap(p, {"x", "y", "y", "y", std::nullopt});
  ASSERT_TRUE(o.available);
  EXPECT_EQ(o.domains, (std::vector<std::string>{"(none)", "x", "y"}));
  EXPECT_EQ(o.counts, (std::vector<std::vector<std::size_t>>{{0, 1, 1}, {1, 0, 2}}));
  EXPECT_DOUBLE_EQ(o.purity, 3.0 / 5.0);
  EXPECT_FALSE(domain_overlap(p, std::vector<std::optional<std::string>>(5)).available);
}

TEST(CommunityIoTest, CsvAndDendrogramJson) {
  Digraph g({"b,1", "a"}, {{0, 1}});
  EXPECT_EQ(partition_to_csv(from_labels({0, 1}), g), "node_id,community_id\na,1\n\"b,1\",0\n");
  Dendrogram d = walktrap(g, 1);
  EXPECT_EQ(dendrogram_to_json(d, g),
            "{\n  \"leaves\": [\n    \"b,1\",\n    \"a\"\n  ],\n  \"merges\": [\n    [\n"
            "      0,\n      1,\n      0.0\n    ]\n  ]\n}\n");
}

}  // namespace
}  // namespace svcnet
