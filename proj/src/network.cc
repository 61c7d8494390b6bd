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

#include "svcnet/network.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "svcnet/error.h"
#include "svcnet/parallel.h"

namespace svcnet {
namespace {

struct OrderedOperations {
  std::vector<const OperationDesc*> ops;
  std::vector<std::string> names;
  std::vector<std::optional<std::string>> domains;
};

OrderedOperations order_operations(const ServiceCollection& collection) {
  auto ops = collection.operations();
  auto domains = collection.operation_domains();
  std::vector<std::string> ids;
  ids.reserve(ops.size());
  for (const auto* op : ops) ids.push_back(op->id.str());

  std::vector<std::size_t> perm(ops.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });

  OrderedOperations out;
  for (std::size_t k : perm) {
    out.ops.push_back(ops[k]);
    out.names.push_back(std::move(ids[k]));
    out.domains.push_back(domains[k]);
  }
  return out;
}

void check_ontology(MatcherKind kind, const Ontology* onto) {
  if (is_semantic(kind) && onto == nullptr) {
    throw UsageError("matcher '" + std::string(to_string(kind)) + "' needs an ontology");
  }
}

// Sorted list of operations whose outputs can satisfy one required parameter.
class ProviderIndex {
 public:
  ProviderIndex(const std::vector<const OperationDesc*>& ops, MatcherKind kind,
                const Ontology* onto, const MatchOptions& match)
      : kind_(kind), onto_(onto), match_(match) {
    for (NodeIndex i = 0; i < ops.size(); ++i) {
      for (const auto& p : ops[i]->outputs) {
        if (kind == MatcherKind::kEqual) {
          add(by_key_[p.name], i);
        } else if (p.concept_iri) {
          add(by_key_[*p.concept_iri], i);
        }
      }
    }
  }

  std::vector<NodeIndex> providers(const ParameterDesc& required) const {
    if (kind_ == MatcherKind::kEqual) return lookup(required.name);
    if (!required.concept_iri) return {};
    const std::string& want = *required.concept_iri;
    if (kind_ == MatcherKind::kExact) return lookup(want);

    std::vector<NodeIndex> out;
    if (match_.reflexive_subsumption) out = lookup(want);
    if (auto idx = onto_->find(want)) {
      const auto& related = kind_ == MatcherKind::kPlugIn ? onto_->descendants(*idx)
                                                          : onto_->ancestors(*idx);
      for (Ontology::Index c : related) {
        auto more = lookup(onto_->iri(c));
        out.insert(out.end(), more.begin(), more.end());
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  static void add(std::vector<NodeIndex>& list, NodeIndex i) {
    if (list.empty() || list.back() != i) list.push_back(i);
  }
  std::vector<NodeIndex> lookup(const std::string& key) const {
    auto it = by_key_.find(key);
    return it == by_key_.end() ? std::vector<NodeIndex>{} : it->second;
  }

  MatcherKind kind_;
  const Ontology* onto_;
  MatchOptions match_;
  std::unordered_map<std::string, std::vector<NodeIndex>> by_key_;
};

}  // namespace

Digraph::Digraph(std::vector<std::string> names, std::vector<Edge> edges)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  {
    std::vector<std::string> sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
      throw Error("duplicate node id '" + *dup + "'");
    }
  }
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw Error("edge endpoint out of range");
    if (u == v) throw Error("self-loop on '" + names_[u] + "'");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  out_.assign(n, {});
  in_.assign(n, {});
  for (const auto& [u, v] : edges_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

bool Digraph::has_edge(NodeIndex from, NodeIndex to) const {
  const auto& list = out_[from];
  return std::binary_search(list.begin(), list.end(), to);
}

std::vector<std::vector<NodeIndex>> Digraph::undirected_adjacency() const {
  std::vector<std::vector<NodeIndex>> adj(size());
  for (NodeIndex v = 0; v < size(); ++v) {
    auto& list = adj[v];
    list.reserve(out_[v].size() + in_[v].size());
    std::merge(out_[v].begin(), out_[v].end(), in_[v].begin(), in_[v].end(),
               std::back_inserter(list));
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

InteractionNetwork build_network(const ServiceCollection& collection,
                                 MatcherKind kind, const Ontology* onto,
                                 const BuildOptions& options) {
  check_ontology(kind, onto);
  OrderedOperations ordered = order_operations(collection);
  const auto& ops = ordered.ops;
  const std::size_t n = ops.size();
  ProviderIndex index(ops, kind, onto, {options.reflexive_subsumption});

  // One slot per target operation; merged in target order afterwards.
  std::vector<std::vector<NodeIndex>> sources(n);
  parallel_for(n, [&](std::size_t j) {
    const auto& inputs = ops[j]->inputs;
    std::vector<NodeIndex> candidates;
    if (inputs.empty()) {
      if (!options.zero_input_targets) return;
      candidates.resize(n);
      std::iota(candidates.begin(), candidates.end(), 0);
    } else {
      candidates = index.providers(inputs.front());
      for (std::size_t k = 1; k < inputs.size() && !candidates.empty(); ++k) {
        auto next = index.providers(inputs[k]);
        std::vector<NodeIndex> both;
        std::set_intersection(candidates.begin(), candidates.end(), next.begin(),
                              next.end(), std::back_inserter(both));
        candidates = std::move(both);
      }
    }
    std::erase(candidates, j);
    sources[j] = std::move(candidates);
  });

  std::vector<Edge> edges;
  for (NodeIndex j = 0; j < n; ++j) {
    for (NodeIndex i : sources[j]) edges.emplace_back(i, j);
  }
  return {Digraph(std::move(ordered.names), std::move(edges)), kind, options,
          std::move(ordered.domains)};
}

InteractionNetwork build_network_naive(const ServiceCollection& collection,
                                       MatcherKind kind, const Ontology* onto,
                                       const BuildOptions& options) {
  check_ontology(kind, onto);
  OrderedOperations ordered = order_operations(collection);
  const auto& ops = ordered.ops;
  MatchOptions match{options.reflexive_subsumption};
  std::vector<Edge> edges;
  for (NodeIndex i = 0; i < ops.size(); ++i) {
    for (NodeIndex j = 0; j < ops.size(); ++j) {
      if (i == j) continue;
      const auto& inputs = ops[j]->inputs;
      if (inputs.empty() && !options.zero_input_targets) continue;
      bool all = std::all_of(inputs.begin(), inputs.end(), [&](const ParameterDesc& want) {
        return std::any_of(ops[i]->outputs.begin(), ops[i]->outputs.end(),
                           [&](const ParameterDesc& have) {
                             return match_params(kind, have, want, onto, match);
                           });
      });
      if (all) edges.emplace_back(i, j);
    }
  }
  return {Digraph(std::move(ordered.names), std::move(edges)), kind, options,
          std::move(ordered.domains)};
}

InteractionNetwork induced_subgraph(const InteractionNetwork& net,
                                    std::vector<NodeIndex> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  const std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> remap(net.graph.size(), npos);
  std::vector<std::string> names;
  std::vector<std::optional<std::string>> domains;
  for (NodeIndex v : keep) {
    remap[v] = names.size();
    names.push_back(net.graph.name(v));
    domains.push_back(v < net.domains.size() ? net.domains[v] : std::nullopt);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : net.graph.edges()) {
    if (remap[u] != npos && remap[v] != npos) edges.emplace_back(remap[u], remap[v]);
  }
  return {Digraph(std::move(names), std::move(edges)), net.kind, net.options,
          std::move(domains)};
}

InteractionNetwork canonicalize(const InteractionNetwork& net) {
  const std::size_t n = net.graph.size();
  std::vector<NodeIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
    return net.graph.name(a) < net.graph.name(b);
  });
  std::vector<NodeIndex> rank(n);
  std::vector<std::string> names;
  std::vector<std::optional<std::string>> domains;
  for (std::size_t k = 0; k < n; ++k) {
    rank[order[k]] = k;
    names.push_back(net.graph.name(order[k]));
    domains.push_back(order[k] < net.domains.size() ? net.domains[order[k]] : std::nullopt);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : net.graph.edges()) edges.emplace_back(rank[u], rank[v]);
  return {Digraph(std::move(names), std::move(edges)), net.kind, net.options,
          std::move(domains)};
}

TrimResult trim_isolates(const InteractionNetwork& net) {
  std::vector<NodeIndex> keep;
  for (NodeIndex v = 0; v < net.graph.size(); ++v) {
    if (!net.graph.out(v).empty() || !net.graph.in(v).empty()) keep.push_back(v);
  }
  TrimResult result;
  result.removed = net.graph.size() - keep.size();
  if (net.graph.size() > 0) {
    result.isolated_fraction =
        static_cast<double>(result.removed) / static_cast<double>(net.graph.size());
  }
  result.network = induced_subgraph(net, std::move(keep));
  return result;
}

}  // namespace svcnet
