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

#ifndef SVCNET_NETWORK_H_
#define SVCNET_NETWORK_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "svcnet/corpus.h"
#include "svcnet/matcher.h"
#include "svcnet/ontology.h"

namespace svcnet {

using NodeIndex = std::size_t;
using Edge = std::pair<NodeIndex, NodeIndex>;

// Simple directed graph with named nodes: no self-loops, no parallel edges.
// Adjacency lists are sorted.
class Digraph {
 public:
  Digraph() = default;
  // Duplicate edges are merged. Throws Error on a self-loop, an endpoint out
  // of range or a repeated node name.
  Digraph(std::vector<std::string> names, std::vector<Edge> edges);

  std::size_t size() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& name(NodeIndex v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  // Sorted by (source, target).
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const NodeIndex> out(NodeIndex v) const { return out_[v]; }
  std::span<const NodeIndex> in(NodeIndex v) const { return in_[v]; }
  bool has_edge(NodeIndex from, NodeIndex to) const;

  // Undirected simple projection: neighbors of v in either direction, sorted
  // and without duplicates.
  std::vector<std::vector<NodeIndex>> undirected_adjacency() const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeIndex>> out_;
  std::vector<std::vector<NodeIndex>> in_;
};

struct BuildOptions {
  // Operations without inputs receive edges from every other operation.
  bool zero_input_targets = false;
  bool reflexive_subsumption = false;

  bool operator==(const BuildOptions&) const = default;
};

// Nodes are operations, edge i->j means i's outputs cover all of j's inputs.
struct InteractionNetwork {
  Digraph graph;
  std::optional<MatcherKind> kind;  // absent for networks read from edge lists
  BuildOptions options;
  // Domain label per node, aligned with graph.names(); may be all empty.
  std::vector<std::optional<std::string>> domains;
};

// Indexed build: candidate sources per required parameter come from
// name/concept indexes, so only plausible pairs are examined. Nodes are
// ordered by operation id string. Semantic kinds need `onto`.
InteractionNetwork build_network(const ServiceCollection& collection,
                                 MatcherKind kind, const Ontology* onto,
                                 const BuildOptions& options = {});

// Direct double loop over all operation pairs. Same output as
// build_network; kept as the reference the indexed build is tested against.
InteractionNetwork build_network_naive(const ServiceCollection& collection,
                                       MatcherKind kind, const Ontology* onto,
                                       const BuildOptions& options = {});

// Subgraph on `keep` (any order); edges are exactly the original edges
// between kept nodes. Node order follows the original order.
InteractionNetwork induced_subgraph(const InteractionNetwork& net,
                                    std::vector<NodeIndex> keep);

// Same network with nodes renumbered in lexicographic name order.
InteractionNetwork canonicalize(const InteractionNetwork& net);

struct TrimResult {
  InteractionNetwork network;
  std::size_t removed = 0;
  double isolated_fraction = 0.0;  // removed / original node count
};

// Drops nodes with total degree zero.
TrimResult trim_isolates(const InteractionNetwork& net);

enum class NetworkFormat { kGraphml, kDot, kEdgelist };

// Throws UsageError on an unknown name.
NetworkFormat parse_network_format(std::string_view text);

// Deterministic: nodes and edges sorted lexicographically by node id.
// GraphML records the matcher kind and build options as graph attributes and
// domain labels as node attributes. The edge list drops isolated nodes.
std::string export_network(const InteractionNetwork& net, NetworkFormat format);

InteractionNetwork read_graphml(std::string_view text, const std::string& source_name);
// "src<TAB>dst" per line; whitespace-separated pairs are also accepted.
InteractionNetwork read_edgelist(std::string_view text, const std::string& source_name);
// GraphML when the document starts with '<', edge list otherwise.
InteractionNetwork read_network(std::string_view text, const std::string& source_name);

}  // namespace svcnet

#endif  // SVCNET_NETWORK_H_
