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

#include "svcnet/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "svcnet/error.h"

namespace svcnet {
namespace {

using Json = nlohmann::ordered_json;

Json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round6(v);
}

template <typename T>
Json opt_num(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_floating_point_v<T>) {
    return num(*v);
  } else {
    return *v;
  }
}

Json components_json(const ComponentReport& c) {
  Json j;
  j["count"] = c.component_sizes.size();
  j["sizes"] = c.component_sizes;
  j["giant_node_fraction"] = num(c.giant_node_fraction);
  j["giant_link_fraction"] = num(c.giant_link_fraction);
  return j;
}

Json ranking_json(const std::vector<std::pair<std::string, std::size_t>>& list,
                  const char* degree_key) {
  Json arr = Json::array();
  for (const auto& [id, d] : list) {
    Json e;
    e["id"] = id;
    e[degree_key] = d;
    arr.push_back(std::move(e));
  }
  return arr;
}

Json fit_json(const DegreeFit& f) {
  Json j;
  if (!f.fit) {
    j["error"] = f.error.value_or("not fitted");
    return j;
  }
  const PowerLawFit& fit = *f.fit;
  j["alpha"] = num(fit.alpha);
  j["alpha_at_bound"] = fit.alpha_at_bound;
  j["xmin"] = fit.xmin;
  j["ks"] = num(fit.ks);
  j["n_tail"] = fit.n_tail;
  j["n"] = fit.n;
  j["zeros_removed"] = fit.zeros_removed;
  j["p_value"] = opt_num(fit.p_value);
  j["rejected"] = fit.rejected ? Json(*fit.rejected) : Json(nullptr);
  j["n_boot"] = fit.n_boot;
  j["seed"] = fit.seed;
  return j;
}

Json small_world_json(const SmallWorldReport& s) {
  Json j;
  j["nodes"] = s.nodes;
  j["undirected_links"] = s.links;
  j["er_estimate"] = opt_num(s.er_estimate);
  j["er_sampled_mean"] = opt_num(s.er_sampled_mean);
  j["er_sampled_stddev"] = opt_num(s.er_sampled_stddev);
  j["observed_average_distance"] = opt_num(s.observed);
  j["ratio"] = opt_num(s.ratio);
  j["samples"] = s.samples;
  j["seed"] = s.seed;
  return j;
}

Json overlap_json(const DomainOverlap& o) {
  Json j;
  j["available"] = o.available;
  if (!o.available) return j;
  j["purity"] = num(o.purity);
  j["domains"] = o.domains;
  j["table"] = o.counts;
  return j;
}

Json metrics_json(const GraphMetrics& m) {
  Json j;
  j["nodes"] = m.nodes;
  j["links"] = m.links;
  j["components"] = components_json(m.components);
  j["average_distance"] = opt_num(m.distances.average_distance);
  j["diameter"] = opt_num(m.distances.diameter);
  j["reachable_pairs"] = m.distances.reachable_ordered_pairs;
  j["unreachable_pairs"] = m.distances.unreachable_ordered_pairs;
  j["transitivity"] = num(m.transitivity);
  j["communities"] = opt_num(m.communities);
  j["modularity"] = opt_num(m.modularity);
  Json degree;
  degree["in_histogram"] = m.degrees.in_histogram;
  degree["out_histogram"] = m.degrees.out_histogram;
  degree["total_histogram"] = m.degrees.total_histogram;
  degree["hubs"] = ranking_json(m.degrees.hubs, "out_degree");
  degree["authorities"] = ranking_json(m.degrees.authorities, "in_degree");
  j["degree"] = std::move(degree);
  Json fits;
  fits["in"] = fit_json(m.fit_in);
  fits["out"] = fit_json(m.fit_out);
  fits["total"] = fit_json(m.fit_total);
  j["power_law"] = std::move(fits);
  j["small_world"] = small_world_json(m.small_world);
  j["domain_overlap"] = overlap_json(m.domain_overlap);
  return j;
}

Json network_json(const NetworkReport& n) {
  Json j;
  j["kind"] = n.kind ? Json(std::string(to_string(*n.kind))) : Json(nullptr);
  j["build_options"] = {{"zero_input_targets", n.options.zero_input_targets},
                        {"reflexive_subsumption", n.options.reflexive_subsumption}};
  j["total_nodes"] = n.total_nodes;
  j["total_links"] = n.total_links;
  j["isolated_nodes"] = n.isolated_nodes;
  j["isolated_fraction"] = num(n.isolated_fraction);
  j["components"] = components_json(n.components);
  j["giant"] = metrics_json(n.giant);
  if (n.full) j["full"] = metrics_json(*n.full);
  j["warnings"] = n.warnings;
  return j;
}

std::string column_name(const NetworkReport& n, std::size_t i) {
  return n.kind ? std::string(to_string(*n.kind)) : "network" + std::to_string(i);
}

Json comparison_json(const MetricsReport& report) {
  auto pick_min = [&](auto getter) {
    std::optional<double> best;
    for (const auto& n : report.networks) {
      if (auto v = getter(n); v && (!best || *v < *best)) best = *v;
    }
    Json names = Json::array();
    if (!best) return names;
    for (std::size_t i = 0; i < report.networks.size(); ++i) {
      if (auto v = getter(report.networks[i]); v && round6(*v) == round6(*best)) {
        names.push_back(column_name(report.networks[i], i));
      }
    }
    return names;
  };

  Json j;
  j["smallest_diameter"] = pick_min([](const NetworkReport& n) -> std::optional<double> {
    if (!n.giant.distances.diameter) return std::nullopt;
    return static_cast<double>(*n.giant.distances.diameter);
  });
  j["smallest_average_distance"] = pick_min(
      [](const NetworkReport& n) { return n.giant.distances.average_distance; });

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < report.networks.size(); ++i) {
    if (report.networks[i].giant.modularity) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return round6(*report.networks[a].giant.modularity) >
           round6(*report.networks[b].giant.modularity);
  });
  Json modularity_order = Json::array();
  for (std::size_t i : order) modularity_order.push_back(column_name(report.networks[i], i));
  j["modularity_order"] = std::move(modularity_order);

  Json empty = Json::array();
  for (std::size_t i = 0; i < report.networks.size(); ++i) {
    if (report.networks[i].giant.nodes == 0) empty.push_back(column_name(report.networks[i], i));
  }
  j["empty_networks"] = std::move(empty);
  return j;
}

Json report_json(const MetricsReport& report) {
  Json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = kToolVersion;
  j["seed"] = report.settings.seed;
  Json settings;
  settings["walk_length"] = report.settings.walk_length;
  settings["plfit_boot"] = report.settings.plfit_boot;
  settings["er_samples"] = report.settings.er_samples;
  settings["top_k"] = report.settings.top_k;
  settings["plfit_alpha_range"] = {report.settings.alpha_range.min,
                                   report.settings.alpha_range.max};
  settings["full"] = report.settings.full;
  j["settings"] = std::move(settings);
  j["conventions"] = {
      {"components", "weak"},
      {"average_distance", "mean over reachable ordered pairs; unreachable pairs counted"},
      {"parameter_flattening",
       "one parameter per message part; an unannotated complex wrapper element "
       "contributes its direct child elements"},
      {"ontology_axioms", "named-class subClassOf only"},
      {"name_matching", "byte-exact"},
      {"power_law_reject_below", kPowerLawRejectBelow},
  };
  if (report.collection) {
    const CollectionStats& c = *report.collection;
    j["collection"] = {{"services", c.services},
                       {"operations", c.operations},
                       {"parameters", c.parameters},
                       {"annotated_parameters", c.annotated_parameters},
                       {"unannotated_parameters", c.parameters - c.annotated_parameters},
                       {"annotation_coverage", num(c.annotation_coverage)}};
  } else {
    j["collection"] = nullptr;
  }
  j["networks"] = Json::array();
  for (const auto& n : report.networks) j["networks"].push_back(network_json(n));
  if (report.comparison) j["comparison"] = comparison_json(report);
  j["warnings"] = report.warnings;
  return j;
}

}  // namespace

double round6(double value) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return std::strtod(buf, nullptr);
}

GraphMetrics measure(const InteractionNetwork& net, const AnalysisSettings& settings,
                     std::vector<std::string>& warnings) {
  const Digraph& g = net.graph;
  GraphMetrics m;
  m.nodes = g.size();
  m.links = g.edge_count();
  m.components = weak_components(g);
  m.distances = distance_report(g);
  m.transitivity = transitivity(g);
  m.degrees = degree_report(g, settings.top_k);

  if (g.size() > 0) {
    Dendrogram dendrogram = walktrap(g, settings.walk_length);
    ScoredPartition best = best_partition(dendrogram, g);
    m.communities = best.partition.community_count;
    m.modularity = best.modularity;
    std::vector<std::optional<std::string>> domains = net.domains;
    domains.resize(g.size());
    m.domain_overlap = domain_overlap(best.partition, domains);
  }

  auto fit = [&](const std::vector<std::size_t>& degrees, const char* which) {
    DegreeFit out;
    std::vector<std::uint64_t> samples(degrees.begin(), degrees.end());
    std::vector<std::string> fit_warnings;
    try {
      out.fit = fit_power_law_with_gof(samples, settings.plfit_boot, settings.seed,
                                       &fit_warnings, settings.alpha_range);
    } catch (const DegenerateInputError& e) {
      out.error = e.what();
    }
    for (auto& w : fit_warnings) warnings.push_back(std::string(which) + " degree " + w);
    return out;
  };
  m.fit_in = fit(in_degrees(g), "in");
  m.fit_out = fit(out_degrees(g), "out");
  m.fit_total = fit(total_degrees(g), "total");

  std::size_t undirected_links = 0;
  for (const auto& list : g.undirected_adjacency()) undirected_links += list.size();
  undirected_links /= 2;
  m.small_world = er_baseline(g.size(), undirected_links, settings.er_samples, settings.seed);
  attach_observed(m.small_world, m.distances.average_distance);
  return m;
}

NetworkReport analyze_network(const InteractionNetwork& input, const AnalysisSettings& settings) {
  InteractionNetwork net = canonicalize(input);
  NetworkReport report;
  report.kind = net.kind;
  report.options = net.options;
  report.total_nodes = net.graph.size();
  report.total_links = net.graph.edge_count();

  TrimResult trimmed = trim_isolates(net);
  report.isolated_nodes = trimmed.removed;
  report.isolated_fraction = trimmed.isolated_fraction;
  report.components = weak_components(trimmed.network.graph);
  report.giant = measure(giant_component(trimmed.network), settings, report.warnings);
  if (settings.full) report.full = measure(net, settings, report.warnings);
  return report;
}

std::string report_to_json(const MetricsReport& report) {
  return report_json(report).dump(2) + "\n";
}

std::string report_to_csv(const MetricsReport& report) {
  Json j = report_json(report);
  struct Row {
    const char* label;
    std::vector<const char*> path;
  };
  const std::vector<Row> rows = {
      {"total_nodes", {"total_nodes"}},
      {"isolated_fraction", {"isolated_fraction"}},
      {"components", {"components", "count"}},
      {"giant_node_fraction", {"components", "giant_node_fraction"}},
      {"giant_link_fraction", {"components", "giant_link_fraction"}},
      {"nodes", {"giant", "nodes"}},
      {"links", {"giant", "links"}},
      {"average_distance", {"giant", "average_distance"}},
      {"diameter", {"giant", "diameter"}},
      {"er_average_distance", {"giant", "small_world", "er_sampled_mean"}},
      {"transitivity", {"giant", "transitivity"}},
      {"communities", {"giant", "communities"}},
      {"modularity", {"giant", "modularity"}},
      {"power_law_alpha", {"giant", "power_law", "total", "alpha"}},
      {"power_law_xmin", {"giant", "power_law", "total", "xmin"}},
      {"power_law_p_value", {"giant", "power_law", "total", "p_value"}},
  };
  std::ostringstream out;
  out << "property";
  for (std::size_t i = 0; i < report.networks.size(); ++i) {
    out << "," << column_name(report.networks[i], i);
  }
  out << "\n";
  for (const auto& row : rows) {
    out << row.label;
    for (const auto& network : j["networks"]) {
      const Json* cur = &network;
      for (const char* key : row.path) {
        if (!cur->is_object() || !cur->contains(key)) {
          cur = nullptr;
          break;
        }
        cur = &(*cur)[key];
      }
      out << ",";
      if (cur != nullptr && !cur->is_null()) out << cur->dump();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace svcnet
