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

#ifndef SVCNET_METRICS_H_
#define SVCNET_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svcnet/network.h"

namespace svcnet {

// Weakly connected components (edge direction ignored).
struct ComponentLabels {
  std::vector<std::size_t> label;  // per node, 0..count-1 in order of first node
  std::size_t count = 0;
};
ComponentLabels weak_component_labels(const Digraph& g);

struct ComponentReport {
  std::vector<std::size_t> component_sizes;  // descending
  double giant_node_fraction = 0.0;
  double giant_link_fraction = 0.0;
};

ComponentReport weak_components(const Digraph& g);

// Nodes of the largest weak component; ties go to the component holding the
// lexicographically smallest node id. Empty for an empty graph.
std::vector<NodeIndex> giant_component_nodes(const Digraph& g);
InteractionNetwork giant_component(const InteractionNetwork& net);

// Shortest directed paths over ordered pairs (i, j), i != j, j reachable from
// i. Unreachable pairs are excluded and counted. With no reachable pair the
// average and diameter are absent.
struct DistanceReport {
  std::optional<double> average_distance;
  std::optional<std::size_t> diameter;
  std::uint64_t reachable_ordered_pairs = 0;
  std::uint64_t unreachable_ordered_pairs = 0;
  std::uint64_t total_distance = 0;
};

DistanceReport distance_report(const Digraph& g);

// Global clustering of the undirected simplification:
// 3 * triangles / connected triples, 0 when there are no triples.
double transitivity(const Digraph& g);

std::vector<std::size_t> in_degrees(const Digraph& g);
std::vector<std::size_t> out_degrees(const Digraph& g);
// in + out; a reciprocal pair counts twice.
std::vector<std::size_t> total_degrees(const Digraph& g);

struct DegreeReport {
  // histogram[d] = number of nodes with degree d.
  std::vector<std::size_t> in_histogram;
  std::vector<std::size_t> out_histogram;
  std::vector<std::size_t> total_histogram;
  // Top-k by out-degree (hubs) and in-degree (authorities); ties by node id.
  std::vector<std::pair<std::string, std::size_t>> hubs;
  std::vector<std::pair<std::string, std::size_t>> authorities;
};

DegreeReport degree_report(const Digraph& g, std::size_t top_k);

// Erdős–Rényi comparison for the small-world check.
struct SmallWorldReport {
  std::size_t nodes = 0;
  std::size_t links = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  // ln n / ln <k> with <k> = 2m/n; absent when <k> <= 1.
  std::optional<double> er_estimate;
  // Average distance inside the giant component of each G(n, m) sample.
  std::optional<double> er_sampled_mean;
  std::optional<double> er_sampled_stddev;
  std::optional<double> observed;
  std::optional<double> ratio;  // observed / er_sampled_mean
};

// Throws UsageError when m > n(n-1)/2 or samples == 0. Replicate r draws from
// an RNG stream derived from (seed, r).
SmallWorldReport er_baseline(std::size_t n, std::size_t m, std::size_t samples,
                             std::uint64_t seed);

// Sets observed and ratio.
void attach_observed(SmallWorldReport& report, std::optional<double> observed);

// Mean over ordered pairs inside the largest component of an undirected graph
// given by sorted adjacency lists; absent when that component has one node.
std::optional<double> undirected_giant_average_distance(
    const std::vector<std::vector<NodeIndex>>& adjacency);

}  // namespace svcnet

#endif  // SVCNET_METRICS_H_
