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

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <tuple>

#include "json.hpp"
#include "svcnet/error.h"
#include "svcnet/metrics.h"

namespace svcnet {
namespace {

// Disjoint sets over community ids (leaves and merge products).
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Makes `into` the representative.
  void attach(std::size_t from, std::size_t into) { parent_[find(from)] = find(into); }

 private:
  std::vector<std::size_t> parent_;
};

// Dense ids in order of each community's smallest node.
Partition densify(const std::vector<std::size_t>& raw_labels) {
  Partition p;
  std::map<std::size_t, std::size_t> dense;
  p.assignment.reserve(raw_labels.size());
  for (std::size_t label : raw_labels) {
    auto [it, inserted] = dense.emplace(label, dense.size());
    p.assignment.push_back(it->second);
  }
  p.community_count = dense.size();
  return p;
}

class WalktrapComponent {
 public:
  WalktrapComponent(const std::vector<std::vector<NodeIndex>>& adj,
                    const std::vector<NodeIndex>& members, std::size_t walk_length,
                    double total_nodes)
      : members_(members), inv_n_(1.0 / total_nodes) {
    const std::size_t n = members.size();
    std::map<NodeIndex, std::size_t> local;
    for (std::size_t k = 0; k < n; ++k) local[members[k]] = k;
    neighbors_.resize(n);
    inv_degree_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (NodeIndex v : adj[members[k]]) neighbors_[k].push_back(local.at(v));
      inv_degree_[k] = 1.0 / static_cast<double>(neighbors_[k].size() + 1);
    }

    communities_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      communities_[k].size = 1;
      communities_[k].id = members[k];
      communities_[k].probs = walk_from(k, walk_length);
      slot_of_[members[k]] = k;
    }
  }

  // Appends this component's merges; ids of new communities start at next_id.
  void run(std::vector<Dendrogram::Merge>& merges, std::size_t& next_id) {
    const std::size_t n = members_.size();
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j : neighbors_[k]) {
        if (j > k) link(k, j, delta_sigma(communities_[k], communities_[j]));
      }
    }

    while (!queue_.empty()) {
      auto [delta, ia, ib] = *queue_.begin();
      std::size_t a = slot_of_.at(ia);
      std::size_t b = slot_of_.at(ib);
      merges.push_back({ia, ib, delta});

      Community merged;
      merged.id = next_id++;
      merged.size = communities_[a].size + communities_[b].size;
      merged.probs.resize(n);
      double wa = static_cast<double>(communities_[a].size) / static_cast<double>(merged.size);
      double wb = static_cast<double>(communities_[b].size) / static_cast<double>(merged.size);
      for (std::size_t k = 0; k < n; ++k) {
        merged.probs[k] = wa * communities_[a].probs[k] + wb * communities_[b].probs[k];
      }

      std::set<std::size_t> adjacent;
      for (std::size_t side : {a, b}) {
        for (const auto& [other, d] : communities_[side].links) {
          if (other != a && other != b) adjacent.insert(other);
        }
      }
      for (std::size_t side : {a, b}) {
        for (const auto& [other, d] : std::map(communities_[side].links)) unlink(side, other);
        communities_[side].probs.clear();
        communities_[side].probs.shrink_to_fit();
        slot_of_.erase(communities_[side].id);
      }

      std::size_t slot = communities_.size();
      communities_.push_back(std::move(merged));
      slot_of_[communities_[slot].id] = slot;
      for (std::size_t other : adjacent) {
        link(slot, other, delta_sigma(communities_[slot], communities_[other]));
      }
    }
  }

 private:
  struct Community {
    std::size_t id = 0;
    std::size_t size = 0;
    std::vector<double> probs;
    std::map<std::size_t, double> links;  // neighbor slot -> delta sigma
  };

  std::vector<double> walk_from(std::size_t start, std::size_t steps) const {
    const std::size_t n = members_.size();
    std::vector<double> cur(n, 0.0), next(n);
    cur[start] = 1.0;
    for (std::size_t s = 0; s < steps; ++s) {
      std::fill(next.begin(), next.end(), 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        if (cur[i] == 0.0) continue;
        double share = cur[i] * inv_degree_[i];
        next[i] += share;  // self-loop
        for (std::size_t j : neighbors_[i]) next[j] += share;
      }
      std::swap(cur, next);
    }
    return cur;
  }

  double delta_sigma(const Community& c1, const Community& c2) const {
    double r2 = 0.0;
    for (std::size_t k = 0; k < c1.probs.size(); ++k) {
      double diff = c1.probs[k] - c2.probs[k];
      r2 += diff * diff * inv_degree_[k];
    }
    double s1 = static_cast<double>(c1.size);
    double s2 = static_cast<double>(c2.size);
    return inv_n_ * (s1 * s2 / (s1 + s2)) * r2;
  }

  void link(std::size_t x, std::size_t y, double delta) {
    communities_[x].links[y] = delta;
    communities_[y].links[x] = delta;
    queue_.insert(key(x, y, delta));
  }

  void unlink(std::size_t x, std::size_t y) {
    auto it = communities_[x].links.find(y);
    if (it == communities_[x].links.end()) return;
    queue_.erase(key(x, y, it->second));
    communities_[x].links.erase(y);
    communities_[y].links.erase(x);
  }

  std::tuple<double, std::size_t, std::size_t> key(std::size_t x, std::size_t y,
                                                   double delta) const {
    std::size_t ix = communities_[x].id, iy = communities_[y].id;
    return {delta, std::min(ix, iy), std::max(ix, iy)};
  }

  std::vector<NodeIndex> members_;
  double inv_n_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<double> inv_degree_;
  std::vector<Community> communities_;  // by slot; merged slots keep no data
  std::map<std::size_t, std::size_t> slot_of_;  // live community id -> slot
  std::set<std::tuple<double, std::size_t, std::size_t>> queue_;
};

}  // namespace

Dendrogram walktrap(const Digraph& g, std::size_t walk_length) {
  if (walk_length == 0) throw UsageError("walk length must be at least 1");
  if (g.size() == 0) throw UsageError("walktrap needs a non-empty network");

  auto adj = g.undirected_adjacency();
  ComponentLabels labels = weak_component_labels(g);
  std::vector<std::vector<NodeIndex>> members(labels.count);
  for (NodeIndex v = 0; v < g.size(); ++v) members[labels.label[v]].push_back(v);

  Dendrogram dendrogram;
  dendrogram.leaves = g.size();
  std::size_t next_id = g.size();
  for (const auto& component : members) {
    if (component.size() < 2) continue;
    WalktrapComponent(adj, component, walk_length, static_cast<double>(g.size()))
        .run(dendrogram.merges, next_id);
  }
  return dendrogram;
}

double modularity(const Digraph& g, const Partition& partition) {
  if (partition.assignment.size() != g.size()) {
    throw UsageError("partition covers " + std::to_string(partition.assignment.size()) +
                     " nodes, network has " + std::to_string(g.size()));
  }
  for (std::size_t c : partition.assignment) {
    if (c >= partition.community_count) throw UsageError("partition id out of range");
  }
  auto adj = g.undirected_adjacency();
  std::int64_t m = 0;
  for (const auto& list : adj) m += static_cast<std::int64_t>(list.size());
  m /= 2;
  if (m == 0) return 0.0;

  std::vector<std::int64_t> internal(partition.community_count, 0);
  std::vector<std::int64_t> degree_sum(partition.community_count, 0);
  for (NodeIndex v = 0; v < adj.size(); ++v) {
    std::size_t c = partition.assignment[v];
    degree_sum[c] += static_cast<std::int64_t>(adj[v].size());
    for (NodeIndex u : adj[v]) {
      if (u > v && partition.assignment[u] == c) ++internal[c];
    }
  }
  // Q = sum_c (4 m L_c - D_c^2) / (4 m^2), summed exactly in integers.
  std::int64_t numerator = 0;
  for (std::size_t c = 0; c < partition.community_count; ++c) {
    numerator += 4 * m * internal[c] - degree_sum[c] * degree_sum[c];
  }
  return static_cast<double>(numerator) / (4.0 * static_cast<double>(m) * static_cast<double>(m));
}

Partition partition_at(const Dendrogram& dendrogram, std::size_t merges) {
  const std::size_t n = dendrogram.leaves;
  UnionFind sets(n + dendrogram.merges.size());
  for (std::size_t k = 0; k < merges && k < dendrogram.merges.size(); ++k) {
    const auto& merge = dendrogram.merges[k];
    sets.attach(merge.a, n + k);
    sets.attach(merge.b, n + k);
  }
  std::vector<std::size_t> raw(n);
  for (std::size_t v = 0; v < n; ++v) raw[v] = sets.find(v);
  return densify(raw);
}

ScoredPartition best_partition(const Dendrogram& dendrogram, const Digraph& g) {
  const std::size_t n = g.size();
  if (dendrogram.leaves != n) throw UsageError("dendrogram does not match the network");

  auto adj = g.undirected_adjacency();
  std::int64_t m = 0;
  for (const auto& list : adj) m += static_cast<std::int64_t>(list.size());
  m /= 2;

  ComponentLabels comps = weak_component_labels(g);
  const std::size_t total_ids = n + dendrogram.merges.size();
  // Per community id: member list and degree sum.
  std::vector<std::vector<NodeIndex>> members(total_ids);
  std::vector<std::int64_t> degree_sum(total_ids, 0);
  std::vector<std::size_t> owner(n);  // node -> live community id
  std::vector<std::int64_t> score(comps.count, 0), best_score(comps.count, 0);
  for (NodeIndex v = 0; v < n; ++v) {
    members[v] = {v};
    owner[v] = v;
    degree_sum[v] = static_cast<std::int64_t>(adj[v].size());
    score[comps.label[v]] -= degree_sum[v] * degree_sum[v];
  }
  best_score = score;
  // Number of merges of each component applied at its best cut.
  std::vector<std::size_t> applied(comps.count, 0), best_applied(comps.count, 0);

  for (std::size_t k = 0; k < dendrogram.merges.size(); ++k) {
    auto [a, b, height] = dendrogram.merges[k];
    (void)height;
    if (a >= n + k || b >= n + k || members[a].empty() || members[b].empty()) {
      throw UsageError("malformed dendrogram at merge " + std::to_string(k));
    }
    if (members[a].size() > members[b].size()) std::swap(a, b);
    std::int64_t between = 0;
    for (NodeIndex v : members[a]) {
      for (NodeIndex u : adj[v]) {
        if (owner[u] == b) ++between;
      }
    }
    std::size_t id = n + k;
    std::size_t comp = comps.label[members[a].front()];
    score[comp] += 4 * m * between - 2 * degree_sum[a] * degree_sum[b];
    ++applied[comp];
    if (score[comp] >= best_score[comp]) {
      best_score[comp] = score[comp];
      best_applied[comp] = applied[comp];
    }
    members[id] = std::move(members[b]);
    members[id].insert(members[id].end(), members[a].begin(), members[a].end());
    for (NodeIndex v : members[id]) owner[v] = id;
    degree_sum[id] = degree_sum[a] + degree_sum[b];
    members[a].clear();
    members[b].clear();
  }

  // Replay only each component's best prefix.
  UnionFind sets(total_ids);
  std::fill(applied.begin(), applied.end(), 0);
  for (std::size_t k = 0; k < dendrogram.merges.size(); ++k) {
    const auto& merge = dendrogram.merges[k];
    std::size_t leaf = merge.a;
    while (leaf >= n) leaf = dendrogram.merges[leaf - n].a;
    std::size_t comp = comps.label[leaf];
    if (applied[comp] >= best_applied[comp]) continue;
    ++applied[comp];
    sets.attach(merge.a, n + k);
    sets.attach(merge.b, n + k);
  }
  std::vector<std::size_t> raw(n);
  for (NodeIndex v = 0; v < n; ++v) raw[v] = sets.find(v);

  ScoredPartition result;
  result.partition = densify(raw);
  result.modularity = modularity(g, result.partition);
  return result;
}

DomainOverlap domain_overlap(const Partition& partition,
                             const std::vector<std::optional<std::string>>& domains) {
  DomainOverlap out;
  const std::size_t n = partition.assignment.size();
  if (domains.size() != n) throw UsageError("domain labels do not match the partition");
  out.available = std::any_of(domains.begin(), domains.end(),
                              [](const auto& d) { return d.has_value(); });
  if (!out.available || n == 0) return out;

  std::set<std::string> names;
  for (const auto& d : domains) names.insert(d.value_or("(none)"));
  out.domains.assign(names.begin(), names.end());
  out.counts.assign(partition.community_count, std::vector<std::size_t>(out.domains.size(), 0));
  for (std::size_t v = 0; v < n; ++v) {
    auto pos = std::lower_bound(out.domains.begin(), out.domains.end(),
                                domains[v].value_or("(none)"));
    ++out.counts[partition.assignment[v]][static_cast<std::size_t>(pos - out.domains.begin())];
  }
  std::size_t dominant = 0;
  for (const auto& row : out.counts) dominant += *std::max_element(row.begin(), row.end());
  out.purity = static_cast<double>(dominant) / static_cast<double>(n);
  return out;
}

std::string partition_to_csv(const Partition& partition, const Digraph& g) {
  std::vector<NodeIndex> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](NodeIndex a, NodeIndex b) { return g.name(a) < g.name(b); });
  std::string out = "node_id,community_id\n";
  for (NodeIndex v : order) {
    const std::string& id = g.name(v);
    bool quote = id.find_first_of(",\"\n") != std::string::npos;
    if (quote) {
      out += '"';
      for (char c : id) {
        if (c == '"') out += '"';
        out += c;
      }
      out += '"';
    } else {
      out += id;
    }
    out += "," + std::to_string(partition.assignment.at(v)) + "\n";
  }
  return out;
}

std::string dendrogram_to_json(const Dendrogram& dendrogram, const Digraph& g) {
  nlohmann::ordered_json j;
  j["leaves"] = g.names();
  j["merges"] = nlohmann::ordered_json::array();
  for (const auto& merge : dendrogram.merges) {
    j["merges"].push_back({merge.a, merge.b, merge.height});
  }
  return j.dump(2) + "\n";
}

}  // namespace svcnet
