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

#include <gtest/gtest.h>

#include "json.hpp"
#include "svcnet/gen.h"
#include "svcnet/parallel.h"
#include "test_util.h"

namespace svcnet {
namespace {

using Json = nlohmann::json;
using testing::as_network;
using testing::make_digraph;
using testing::make_undirected;

AnalysisSettings quick() {
  AnalysisSettings s;
  s.plfit_boot = 20;
  s.er_samples = 3;
  return s;
}

Json single_report(const InteractionNetwork& net, const AnalysisSettings& s = quick()) {
  MetricsReport r;
  r.settings = s;
  r.networks.push_back(analyze_network(net, s));
  return Json::parse(report_to_json(r));
}

TEST(Round6Test, SixSignificantDigits) {
  EXPECT_EQ(round6(1.0 / 3.0), 0.333333);
  EXPECT_EQ(round6(5.0 / 14.0), 0.357143);
  EXPECT_EQ(round6(123456789.0), 123457000.0);
  EXPECT_EQ(round6(0.0), 0.0);
}

TEST(ReportTest, DirectedThreePath) {
  Json j = single_report(as_network(make_digraph(3, {{0, 1}, {1, 2}})));
  const Json& g = j["networks"][0]["giant"];
  EXPECT_EQ(g["nodes"], 3);
  EXPECT_EQ(g["links"], 2);
  EXPECT_EQ(g["average_distance"].get<double>(), 1.33333);
  EXPECT_EQ(g["diameter"], 2);
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["tool_version"], kToolVersion);
  EXPECT_EQ(j["seed"], 42);
}

TEST(ReportTest, TwoTrianglesBridge) {
  Digraph g = make_undirected(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  Json j = single_report(as_network(g));
  const Json& giant = j["networks"][0]["giant"];
  EXPECT_EQ(giant["transitivity"].get<double>(), 0.6);
  EXPECT_GE(giant["modularity"].get<double>(), 0.357143);
  EXPECT_EQ(giant["communities"], 2);
}

TEST(ReportTest, TrimsIsolatesAndKeepsGiant) {
  InteractionNetwork net = as_network(make_digraph(10, {{0, 1}, {1, 2}, {3, 4}, {5, 4}}));
  Json j = single_report(net);
  const Json& n = j["networks"][0];
  EXPECT_EQ(n["total_nodes"], 10);
  EXPECT_EQ(n["isolated_nodes"], 4);
  EXPECT_EQ(n["isolated_fraction"].get<double>(), 0.4);
  EXPECT_EQ(n["components"]["sizes"], Json::array({3, 3}));
  EXPECT_EQ(n["giant"]["nodes"], 3);
  EXPECT_FALSE(n.contains("full"));

  AnalysisSettings s = quick();
  s.full = true;
  Json full = single_report(net, s);
  EXPECT_EQ(full["networks"][0]["full"]["nodes"], 10);
}

TEST(ReportTest, EmptyNetworkGivesUndefinedMarkers) {
  Json j = single_report(as_network(make_digraph(4, {})));
  const Json& n = j["networks"][0];
  EXPECT_EQ(n["isolated_fraction"].get<double>(), 1.0);
  const Json& g = n["giant"];
  EXPECT_EQ(g["nodes"], 0);
  EXPECT_TRUE(g["average_distance"].is_null());
  EXPECT_TRUE(g["diameter"].is_null());
  EXPECT_TRUE(g["modularity"].is_null());
  EXPECT_TRUE(g["communities"].is_null());
  EXPECT_TRUE(g["power_law"]["total"].contains("error"));
  EXPECT_TRUE(g["small_world"]["er_sampled_mean"].is_null());
}

TEST(ReportTest, DeterministicAndThreadIndependent) {
  GeneratedCorpus corpus = generate(GenSpec{});
  InteractionNetwork net =
      build_network(corpus.collection, MatcherKind::kExact, &corpus.ontology);
  MetricsReport r;
  r.settings = quick();
  r.networks.push_back(analyze_network(net, r.settings));
  std::string first = report_to_json(r);
  set_thread_cap(1);
  MetricsReport again;
  again.settings = quick();
  again.networks.push_back(analyze_network(net, again.settings));
  set_thread_cap(0);
  EXPECT_EQ(report_to_json(again), first);
}

TEST(ReportTest, GraphmlRoundTripGivesIdenticalReport) {
  GeneratedCorpus corpus = generate(GenSpec{});
  InteractionNetwork net =
      build_network(corpus.collection, MatcherKind::kPlugIn, &corpus.ontology);
  InteractionNetwork back =
      read_graphml(export_network(net, NetworkFormat::kGraphml), "rt.graphml");
  EXPECT_EQ(single_report(back), single_report(net));
}

TEST(ReportTest, CsvIsProjectionOfJson) {
  GeneratedCorpus corpus = generate(GenSpec{});
  MetricsReport r;
  r.settings = quick();
  r.comparison = true;
  for (MatcherKind k : kAllMatchers) {
    r.networks.push_back(
        analyze_network(build_network(corpus.collection, k, &corpus.ontology), r.settings));
  }
  std::string csv = report_to_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "property,equal,exact,plugin,subsume");
  Json j = Json::parse(report_to_json(r));
  std::string diameter_row = "diameter";
  for (const auto& n : j["networks"]) diameter_row += "," + n["giant"]["diameter"].dump();
  EXPECT_NE(csv.find("\n" + diameter_row + "\n"), std::string::npos) << csv;

  const Json& cmp = j["comparison"];
  EXPECT_EQ(cmp["modularity_order"].size(), 4u);
  ASSERT_FALSE(cmp["smallest_diameter"].empty());
  std::size_t smallest = 1000;
  for (const auto& n : j["networks"]) smallest = std::min<std::size_t>(smallest, n["giant"]["diameter"]);
  for (const auto& kind : cmp["smallest_diameter"]) {
    for (const auto& n : j["networks"]) {
      if (n["kind"] == kind) {
        EXPECT_EQ(n["giant"]["diameter"], smallest);
      }
    }
  }
}

}  // namespace
}  // namespace svcnet
