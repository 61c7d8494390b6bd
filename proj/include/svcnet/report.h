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

#ifndef SVCNET_REPORT_H_
#define SVCNET_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svcnet/community.h"
#include "svcnet/corpus.h"
#include "svcnet/metrics.h"
#include "svcnet/network.h"
#include "svcnet/plfit.h"

namespace svcnet {

inline constexpr const char* kReportSchema = "svcnet.report/1";
inline constexpr const char* kToolVersion = "0.1.0";

struct AnalysisSettings {
  std::uint64_t seed = 42;
  std::size_t walk_length = 4;
  std::size_t plfit_boot = 1000;
  std::size_t er_samples = 10;
  std::size_t top_k = 10;
  AlphaRange alpha_range;
  bool full = false;
};

struct DegreeFit {
  std::optional<PowerLawFit> fit;
  std::optional<std::string> error;  // set when the data cannot be fitted
};

// Everything measured on one graph.
struct GraphMetrics {
  std::size_t nodes = 0;
  std::size_t links = 0;
  ComponentReport components;
  DistanceReport distances;
  double transitivity = 0.0;
  std::optional<std::size_t> communities;
  std::optional<double> modularity;
  DegreeReport degrees;
  DegreeFit fit_in, fit_out, fit_total;
  SmallWorldReport small_world;
  DomainOverlap domain_overlap;
};

struct NetworkReport {
  std::optional<MatcherKind> kind;
  BuildOptions options;
  std::size_t total_nodes = 0;
  std::size_t total_links = 0;
  std::size_t isolated_nodes = 0;
  double isolated_fraction = 0.0;
  ComponentReport components;  // of the trimmed network
  GraphMetrics giant;
  std::optional<GraphMetrics> full;  // untrimmed network, with --full
  std::vector<std::string> warnings;
};

struct MetricsReport {
  AnalysisSettings settings;
  std::optional<CollectionStats> collection;
  std::vector<NetworkReport> networks;
  bool comparison = false;  // emit the cross-network summary
  std::vector<std::string> warnings;
};

GraphMetrics measure(const InteractionNetwork& net, const AnalysisSettings& settings,
                     std::vector<std::string>& warnings);

// Trim isolates, take the giant component, measure it.
NetworkReport analyze_network(const InteractionNetwork& net, const AnalysisSettings& settings);

// Canonical JSON: fixed key order, floats rounded to 6 significant digits,
// undefined values as null.
std::string report_to_json(const MetricsReport& report);

// Property-by-network matrix (one column per network), a projection of the
// JSON report.
std::string report_to_csv(const MetricsReport& report);

// Rounds to 6 significant digits.
double round6(double value);

}  // namespace svcnet

#endif  // SVCNET_REPORT_H_
