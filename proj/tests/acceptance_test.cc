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

// Acceptance suite. Prints one PASS/FAIL/SKIP line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <boost/math/special_functions/zeta.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "svcnet/commands.h"
#include "svcnet/community.h"
#include "svcnet/corpus.h"
#include "svcnet/gen.h"
#include "svcnet/matcher.h"
#include "svcnet/metrics.h"
#include "svcnet/network.h"
#include "svcnet/plfit.h"
#include "svcnet/random_graphs.h"
#include "test_util.h"

namespace svcnet {
namespace {

enum class Status { kPass, kFail, kSkip };

struct Outcome {
  Status status = Status::kPass;
  std::string detail;
};

Outcome fail(std::string detail) { return {Status::kFail, std::move(detail)}; }

Outcome check(bool ok, std::string detail) {
  return {ok ? Status::kPass : Status::kFail, std::move(detail)};
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------- oracles

DistanceReport floyd_warshall(const Digraph& g) {
  const std::size_t n = g.size();
  const std::uint32_t inf = std::numeric_limits<std::uint32_t>::max() / 4;
  std::vector<std::uint32_t> d(n * n, inf);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0;
  for (auto [u, v] : g.edges()) d[u * n + v] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t dik = d[i * n + k];
      if (dik >= inf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t via = dik + d[k * n + j];
        if (via < d[i * n + j]) d[i * n + j] = via;
      }
    }
  }
  DistanceReport r;
  std::size_t diameter = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::uint32_t x = d[i * n + j];
      if (x >= inf) {
        ++r.unreachable_ordered_pairs;
      } else {
        ++r.reachable_ordered_pairs;
        r.total_distance += x;
        diameter = std::max<std::size_t>(diameter, x);
      }
    }
  }
  if (r.reachable_ordered_pairs > 0) {
    r.average_distance = static_cast<double>(r.total_distance) /
                         static_cast<double>(r.reachable_ordered_pairs);
    r.diameter = diameter;
  }
  return r;
}

// sum_c (e_cc - a_c^2) from edge fractions.
double edge_fraction_modularity(const Digraph& g, const std::vector<std::size_t>& label) {
  auto adj = g.undirected_adjacency();
  double two_m = 0;
  for (const auto& l : adj) two_m += static_cast<double>(l.size());
  if (two_m == 0) return 0.0;
  std::map<std::size_t, double> e, a;
  for (NodeIndex v = 0; v < adj.size(); ++v) {
    a[label[v]] += static_cast<double>(adj[v].size()) / two_m;
    for (NodeIndex u : adj[v]) {
      if (label[u] == label[v]) e[label[v]] += 1.0 / two_m;
    }
  }
  double q = 0;
  for (auto [c, ac] : a) q += e[c] - ac * ac;
  return q;
}

// Triangle and triple counts by enumerating node triples.
double triple_transitivity(const Digraph& g) {
  auto adj = g.undirected_adjacency();
  const std::size_t n = adj.size();
  auto linked = [&](NodeIndex a, NodeIndex b) {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
  };
  double closed = 0, triples = 0;
  for (NodeIndex c = 0; c < n; ++c) {
    for (NodeIndex a = 0; a < n; ++a) {
      for (NodeIndex b = a + 1; b < n; ++b) {
        if (a == c || b == c || !linked(c, a) || !linked(c, b)) continue;
        triples += 1;
        if (linked(a, b)) closed += 1;
      }
    }
  }
  return triples == 0 ? 0.0 : closed / triples;
}

// Inverse-CDF discrete power-law sampler over an explicit table.
class TableSampler {
 public:
  TableSampler(double alpha, unsigned xmin) : alpha_(alpha), xmin_(xmin) {
    double z = boost::math::zeta(alpha);
    for (unsigned k = 1; k < xmin; ++k) z -= std::pow(static_cast<double>(k), -alpha);
    double acc = 0;
    for (std::uint64_t x = xmin; x < xmin + kTable; ++x) {
      acc += std::pow(static_cast<double>(x), -alpha) / z;
      cdf_.push_back(acc);
    }
  }
  std::uint64_t operator()(Rng& rng) const {
    double u = uniform01(rng);
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it != cdf_.end()) return xmin_ + static_cast<std::uint64_t>(it - cdf_.begin());
    double lo = static_cast<double>(xmin_ + kTable) - 0.5;
    double v = (u - cdf_.back()) / (1.0 - cdf_.back());
    return static_cast<std::uint64_t>(
        std::floor(lo * std::pow(1.0 - v, -1.0 / (alpha_ - 1.0)) + 0.5));
  }

 private:
  static constexpr std::uint64_t kTable = 200000;
  double alpha_;
  std::uint64_t xmin_;
  std::vector<double> cdf_;
};

std::set<std::pair<std::string, std::string>> named_edges(const Digraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges()) out.emplace(g.name(u), g.name(v));
  return out;
}

// --------------------------------------------------------------- criteria

Outcome fig1_reconstruction() {
  Timer t;
  ServiceCollection c = load_collection(testing::fixture("fig1"));
  InteractionNetwork net = build_network(c, MatcherKind::kEqual, nullptr);
  double secs = t.seconds();
  auto edges = named_edges(net.graph);
  bool ok = edges == std::set<std::pair<std::string, std::string>>{{"s1/op1", "s2/op2"}};
  return check(ok && secs < 1.0, std::to_string(edges.size()) + " edge(s), op1->op2 " +
                                     (ok ? "only" : "mismatch") + ", " + fmt(secs) + " s");
}

Outcome distance_oracle() {
  Timer t;
  int agree = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng = derive_rng(seed, 1001);
    std::size_t n = 2 + uniform_below(rng, 199);
    double density = 0.01 + 0.19 * uniform01(rng);
    Digraph g = testing::make_digraph(n, sample_gnp_directed(n, density, rng));
    DistanceReport got = distance_report(g);
    DistanceReport want = floyd_warshall(g);
    agree += got.reachable_ordered_pairs == want.reachable_ordered_pairs &&
             got.unreachable_ordered_pairs == want.unreachable_ordered_pairs &&
             got.total_distance == want.total_distance && got.diameter == want.diameter &&
             got.average_distance == want.average_distance;
  }
  double secs = t.seconds();
  return check(agree == 50 && secs < 30.0,
               std::to_string(agree) + "/50 graphs agree exactly, " + fmt(secs) + " s");
}

Outcome transitivity_fixtures() {
  Digraph k4 = testing::make_undirected(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  Digraph star = testing::make_undirected(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  Digraph bridge =
      testing::make_undirected(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  double a = transitivity(k4), b = transitivity(star), c = transitivity(bridge);
  bool ok = a == 1.0 && b == 0.0 && std::abs(c - 0.6) <= 1e-12 &&
            triple_transitivity(k4) == a && triple_transitivity(star) == b &&
            std::abs(triple_transitivity(bridge) - c) <= 1e-12;
  return check(ok, "K4 " + fmt(a) + ", S5 " + fmt(b) + ", two-triangle-bridge " + fmt(c));
}

Outcome modularity_fixtures() {
  Digraph bridge =
      testing::make_undirected(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  Digraph two_k3 =
      testing::make_undirected(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  std::vector<std::size_t> one(6, 0), halves = {0, 0, 0, 1, 1, 1};
  double single = modularity(bridge, {one, 1});
  double cliques = modularity(bridge, {halves, 2});
  double disjoint = modularity(two_k3, {halves, 2});
  bool ok = single == 0.0 && std::abs(cliques - 5.0 / 14.0) <= 1e-12 &&
            std::abs(disjoint - 0.5) <= 1e-12 &&
            std::abs(edge_fraction_modularity(bridge, one) - single) <= 1e-12 &&
            std::abs(edge_fraction_modularity(bridge, halves) - cliques) <= 1e-12 &&
            std::abs(edge_fraction_modularity(two_k3, halves) - disjoint) <= 1e-12;
  return check(ok, "single " + fmt(single) + ", clique partition " + fmt(cliques) +
                       ", disjoint K3s " + fmt(disjoint));
}

Outcome community_recovery() {
  Timer t;
  int exact = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng = derive_rng(seed, 2002);
    PlantedPartition pp = sample_planted_partition({20, 20}, 0.5, 0.02, rng);
    Digraph g = testing::make_undirected(40, pp.edges);
    ScoredPartition best = best_partition(walktrap(g), g);
    // Dense ids follow first occurrence, as do the planted labels.
    exact += best.partition.assignment == pp.labels;
  }
  double secs = t.seconds();
  return check(exact >= 95 && secs < 60.0,
               std::to_string(exact) + "/100 planted partitions recovered, " + fmt(secs) + " s");
}

Outcome power_law_recovery() {
  Timer t;
  std::ostringstream detail;
  bool ok = true;

  TableSampler sampler(2.5, 1);
  Rng rng = derive_rng(3003, 0);
  std::vector<std::uint64_t> xs(10000);
  for (auto& x : xs) x = sampler(rng);
  PowerLawFit fit = fit_power_law(xs);
  ok = ok && std::abs(fit.alpha - 2.5) <= 0.1 && fit.xmin <= 3;
  detail << "alpha_hat " << fmt(fit.alpha) << " xmin_hat " << fit.xmin;

  Rng geo_rng = derive_rng(3003, 1);
  std::vector<std::uint64_t> geo(5000);
  for (auto& x : geo) {
    std::uint64_t k = 1;
    while (uniform01(geo_rng) < 0.5) ++k;
    x = k;
  }
  PowerLawFit geo_fit = fit_power_law_with_gof(geo, 200, 3003);
  ok = ok && *geo_fit.p_value < 0.1;
  detail << "; geometric p " << fmt(*geo_fit.p_value);

  int accepted = 0;
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Rng trial_rng = derive_rng(3004, trial);
    std::vector<std::uint64_t> sample(10000);
    for (auto& x : sample) x = sampler(trial_rng);
    PowerLawFit f = fit_power_law_with_gof(sample, 200, 3004 + trial);
    accepted += *f.p_value >= 0.1;
  }
  ok = ok && accepted >= 18;
  double secs = t.seconds();
  detail << "; power-law p>=0.1 in " << accepted << "/20; " << fmt(secs) << " s";
  return check(ok && secs < 300.0, detail.str());
}

Outcome matcher_algebra() {
  Timer t;
  GenSpec spec;
  spec.hierarchy_depth = 4;
  spec.branching = 2;
  spec.concept_pool_size = 20;
  GeneratedCorpus corpus = generate(spec);
  const Ontology& onto = corpus.ontology;
  Rng rng = derive_rng(4004, 0);
  auto draw = [&] {
    ParameterDesc p{"p" + std::to_string(uniform_below(rng, 8)), std::nullopt, std::nullopt};
    if (!bernoulli(rng, 0.05)) p.concept_iri = onto.iri(uniform_below(rng, onto.size()));
    return p;
  };
  std::size_t pairs = 0, violations = 0, plugin_hits = 0;
  for (int i = 0; i < 100000; ++i) {
    ParameterDesc a = draw(), b = draw();
    ++pairs;
    bool eq = match_params(MatcherKind::kEqual, a, b, &onto);
    bool ex = match_params(MatcherKind::kExact, a, b, &onto);
    bool pg = match_params(MatcherKind::kPlugIn, a, b, &onto);
    bool sb = match_params(MatcherKind::kSubsume, a, b, &onto);
    plugin_hits += pg;
    violations += eq != match_params(MatcherKind::kEqual, b, a, &onto);
    violations += ex != match_params(MatcherKind::kExact, b, a, &onto);
    violations += pg != match_params(MatcherKind::kSubsume, b, a, &onto);
    violations += sb != match_params(MatcherKind::kPlugIn, b, a, &onto);
    violations += ex && pg;
  }
  double secs = t.seconds();
  return check(violations == 0 && plugin_hits > 0 && secs < 10.0,
               std::to_string(pairs) + " pairs, " + std::to_string(violations) +
                   " violations, " + std::to_string(plugin_hits) + " plug-in matches, " +
                   fmt(secs) + " s");
}

Outcome er_baseline_checks() {
  SmallWorldReport small = er_baseline(4, 6, 10, 5005);
  SmallWorldReport big = er_baseline(1000, 5000, 1, 5005);
  bool ok = small.er_sampled_mean && *small.er_sampled_mean == 1.0 && big.er_estimate &&
            std::abs(*big.er_estimate - 3.0) <= 0.01;
  return check(ok, "K4 sampled mean " + fmt(small.er_sampled_mean.value_or(-1)) +
                       ", closed form n=1000 m=5000 " + fmt(big.er_estimate.value_or(-1)));
}

Outcome compare_determinism() {
  auto dir = testing::scratch_dir("acceptance_determinism");
  std::string corpus = dir.string();
  std::ostringstream sink;
  const char* gen_args[] = {"svcnet", "gen", corpus.c_str(), "--services", "40",
                            "--ops-per-service", "5", "--seed", "9"};
  if (run_cli(9, gen_args, sink, sink) != 0) return fail("gen failed: " + sink.str());
  std::string onto = corpus + "/ontology.tsv";
  auto run_compare = [&](const char* threads, std::string& out) {
    const char* args[] = {"svcnet", "--threads", threads, "compare", corpus.c_str(),
                          "--ontology", onto.c_str(), "--seed", "77", "--plfit-boot", "200"};
    std::ostringstream o, e;
    int code = run_cli(11, args, o, e);
    out = o.str();
    return code;
  };
  std::string a, b;
  int ca = run_compare("1", a);
  int cb = run_compare("8", b);
  ServiceCollection c = load_collection(corpus);
  bool ok = ca == 0 && cb == 0 && !a.empty() && a == b && c.operation_count() == 200;
  return check(ok, std::to_string(c.operation_count()) + " operations, " +
                       std::to_string(a.size()) + " bytes, threads 1 vs 8 " +
                       (a == b ? "identical" : "differ"));
}

Outcome sawsdl_tc_table() {
  const char* dir = std::getenv("SVCNET_SAWSDL_TC_DIR");
  const char* onto_path = std::getenv("SVCNET_SAWSDL_TC_ONTOLOGY");
  if (dir == nullptr || onto_path == nullptr) {
    return {Status::kSkip, "corpus absent (set SVCNET_SAWSDL_TC_DIR and SVCNET_SAWSDL_TC_ONTOLOGY)"};
  }
  ServiceCollection c = load_collection(dir);
  Ontology onto = load_ontology(onto_path);
  std::map<MatcherKind, double> isolated;
  std::map<MatcherKind, std::size_t> diameter;
  for (MatcherKind k : kAllMatchers) {
    InteractionNetwork net = build_network(c, k, &onto);
    TrimResult trimmed = trim_isolates(net);
    isolated[k] = trimmed.isolated_fraction;
    diameter[k] = distance_report(giant_component(trimmed.network).graph).diameter.value_or(0);
  }
  bool ok = std::abs(isolated[MatcherKind::kEqual] - 0.44) <= 0.03;
  for (MatcherKind k : {MatcherKind::kExact, MatcherKind::kPlugIn, MatcherKind::kSubsume}) {
    ok = ok && std::abs(isolated[k] - 0.49) <= 0.03;
  }
  std::size_t eq = diameter[MatcherKind::kEqual], ex = diameter[MatcherKind::kExact];
  ok = ok && eq > ex && ex >= diameter[MatcherKind::kPlugIn] &&
       ex >= diameter[MatcherKind::kSubsume];
  std::ostringstream detail;
  detail << "isolated Eq " << fmt(isolated[MatcherKind::kEqual]) << " Ex "
         << fmt(isolated[MatcherKind::kExact]) << " Pg " << fmt(isolated[MatcherKind::kPlugIn])
         << " Sb " << fmt(isolated[MatcherKind::kSubsume]) << "; diameters " << eq << " " << ex
         << " " << diameter[MatcherKind::kPlugIn] << " " << diameter[MatcherKind::kSubsume];
  return check(ok, detail.str());
}

}  // namespace
}  // namespace svcnet

int main() {
  using svcnet::Outcome;
  using svcnet::Status;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "figure 1 equal-matcher network", svcnet::fig1_reconstruction},
      {2, "distances match all-pairs oracle", svcnet::distance_oracle},
      {3, "transitivity fixtures", svcnet::transitivity_fixtures},
      {4, "modularity fixtures", svcnet::modularity_fixtures},
      {5, "planted partition recovery", svcnet::community_recovery},
      {6, "power-law recovery and goodness of fit", svcnet::power_law_recovery},
      {7, "matcher algebra", svcnet::matcher_algebra},
      {8, "ER baseline", svcnet::er_baseline_checks},
      {9, "compare determinism across thread caps", svcnet::compare_determinism},
      {10, "SAWSDL-TC isolated fractions and diameters", svcnet::sawsdl_tc_table},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {Status::kFail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.status == Status::kPass ? "PASS" : o.status == Status::kFail ? "FAIL" : "SKIP";
    if (o.status == Status::kFail) ++failures;
    std::cout << tag << " [" << c.id << "] " << c.name << ": " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria met" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
