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

#ifndef SVCNET_COMMUNITY_H_
#define SVCNET_COMMUNITY_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "svcnet/network.h"

namespace svcnet {

// Agglomeration history. Leaves are node indices 0..leaves-1; merge k creates
// community id leaves + k. For a disconnected graph the list holds one tree
// per weak component, each contiguous and in chronological order.
struct Dendrogram {
  struct Merge {
    std::size_t a = 0;
    std::size_t b = 0;
    double height = 0.0;  // increase in mean squared walk distance
  };
  std::size_t leaves = 0;
  std::vector<Merge> merges;
};

// Walktrap on the undirected projection of `g` (each node also gets a
// self-loop, as in the reference method). Communities are compared through
// their `walk_length`-step random-walk distributions and merged greedily by
// the smallest Ward-style increase; ties go to the smaller community ids.
// Throws UsageError for walk_length == 0 or an empty graph.
Dendrogram walktrap(const Digraph& g, std::size_t walk_length = 4);

struct Partition {
  std::vector<std::size_t> assignment;  // per node, ids dense in 0..count-1
  std::size_t community_count = 0;
};

// Newman modularity of the undirected projection. Throws UsageError when the
// partition does not cover exactly the graph's nodes. 0 for edgeless graphs.
double modularity(const Digraph& g, const Partition& partition);

struct ScoredPartition {
  Partition partition;
  double modularity = 0.0;
};

// Scans every cut of each component's tree and keeps the modularity-maximal
// one; modularity is additive over components so cuts are chosen per tree.
// Ties prefer fewer communities. Community ids are numbered in order of
// their smallest node.
ScoredPartition best_partition(const Dendrogram& dendrogram, const Digraph& g);

// Applies the first `merges` merges of the list.
Partition partition_at(const Dendrogram& dendrogram, std::size_t merges);

// Community × domain contingency table.
struct DomainOverlap {
  bool available = false;  // false when no node carries a domain label
  std::vector<std::string> domains;  // sorted; unlabeled nodes under "(none)"
  std::vector<std::vector<std::size_t>> counts;  // [community][domain]
  double purity = 0.0;  // sum over communities of the dominant domain count / n
};

DomainOverlap domain_overlap(const Partition& partition,
                             const std::vector<std::optional<std::string>>& domains);

// "node_id,community_id" rows sorted by node id, with a header line.
std::string partition_to_csv(const Partition& partition, const Digraph& g);
// {"leaves": [...ids], "merges": [[a, b, height], ...]}
std::string dendrogram_to_json(const Dendrogram& dendrogram, const Digraph& g);

}  // namespace svcnet

#endif  // SVCNET_COMMUNITY_H_
