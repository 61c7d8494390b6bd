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

#include "svcnet/commands.h"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "svcnet/community.h"
#include "svcnet/corpus.h"
#include "svcnet/error.h"
#include "svcnet/gen.h"
#include "svcnet/matcher.h"
#include "svcnet/network.h"
#include "svcnet/ontology.h"
#include "svcnet/parallel.h"
#include "svcnet/report.h"

namespace svcnet {
namespace {

namespace fs = std::filesystem;

struct BuildFlags {
  std::string matcher = "equal";
  std::string ontology;
  bool zero_input_targets = false;
  bool reflexive_subsumption = false;

  BuildOptions options() const { return {zero_input_targets, reflexive_subsumption}; }
};

void add_build_flags(CLI::App* cmd, BuildFlags& flags, bool with_matcher) {
  if (with_matcher) {
    cmd->add_option("--matcher", flags.matcher, "equal, exact, plugin or subsume")
        ->capture_default_str();
  }
  cmd->add_option("--ontology", flags.ontology, "ontology file (TSV edge list or OWL/RDF XML)");
  cmd->add_flag("--zero-input-targets", flags.zero_input_targets,
                "let operations without inputs receive links");
  cmd->add_flag("--reflexive-subsumption", flags.reflexive_subsumption,
                "plug-in and subsume also accept identical concepts");
}

void add_analysis_flags(CLI::App* cmd, AnalysisSettings& s) {
  cmd->add_option("--seed", s.seed, "random seed")->capture_default_str();
  cmd->add_option("--walk-length", s.walk_length, "walktrap random walk length")
      ->capture_default_str();
  cmd->add_option("--plfit-boot", s.plfit_boot, "bootstrap replicates for the power-law p-value")
      ->capture_default_str();
  cmd->add_option("--er-samples", s.er_samples, "random graphs drawn for the ER baseline")
      ->capture_default_str();
  cmd->add_option("--top-k", s.top_k, "hubs and authorities listed")->capture_default_str();
  cmd->add_option("--plfit-alpha-min", s.alpha_range.min, "lower end of the exponent search")
      ->capture_default_str();
  cmd->add_option("--plfit-alpha-max", s.alpha_range.max, "upper end of the exponent search")
      ->capture_default_str();
  cmd->add_flag("--full", s.full, "also report the untrimmed network");
}

void emit_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << "\n";
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
  if (!file) throw Error("write failed: " + path);
}

// Loads the ontology a matcher needs. Exact falls back to an empty ontology,
// since IRI identity needs no hierarchy.
std::optional<Ontology> ontology_for(MatcherKind kind, const std::string& path,
                                     std::vector<std::string>& warnings) {
  if (!path.empty()) {
    Ontology onto = load_ontology(path);
    for (const auto& w : onto.warnings()) warnings.push_back(w);
    return onto;
  }
  if (kind == MatcherKind::kPlugIn || kind == MatcherKind::kSubsume) {
    throw UsageError("matcher " + std::string(to_string(kind)) + " requires --ontology");
  }
  if (kind == MatcherKind::kExact) {
    warnings.push_back("no ontology given; exact matching compares concept IRIs only");
    return Ontology();
  }
  return std::nullopt;
}

struct Loaded {
  ServiceCollection collection;
  InteractionNetwork network;
  std::vector<std::string> warnings;
};

Loaded load_and_build(const std::string& dir, const BuildFlags& flags) {
  MatcherKind kind = parse_matcher_kind(flags.matcher);
  Loaded loaded;
  loaded.collection = load_collection(dir);
  loaded.warnings = loaded.collection.warnings;
  std::optional<Ontology> onto = ontology_for(kind, flags.ontology, loaded.warnings);
  loaded.network = build_network(loaded.collection, kind, onto ? &*onto : nullptr,
                                 flags.options());
  return loaded;
}

// A directory is built into a network; a file is read as GraphML or an edge list.
InteractionNetwork network_from_input(const std::string& input, const BuildFlags& flags,
                                      bool force_graphml, std::vector<std::string>& warnings,
                                      std::optional<CollectionStats>* stats) {
  if (!fs::exists(input)) throw UsageError("no such file or directory: " + input);
  if (fs::is_directory(input)) {
    if (force_graphml) throw UsageError("--from-graphml expects a file: " + input);
    Loaded loaded = load_and_build(input, flags);
    warnings.insert(warnings.end(), loaded.warnings.begin(), loaded.warnings.end());
    if (stats != nullptr) *stats = collection_stats(loaded.collection);
    return std::move(loaded.network);
  }
  std::string text = read_file(input);
  return force_graphml ? read_graphml(text, input) : read_network(text, input);
}

std::string render(const MetricsReport& report, const std::string& format) {
  if (format == "json") return report_to_json(report);
  if (format == "csv") return report_to_csv(report);
  throw UsageError("unknown report format '" + format + "' (expected json or csv)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Service interaction network extraction and analysis"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  std::size_t threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = SVCNET_THREADS or all cores)");

  // extract
  auto* extract = app.add_subcommand("extract", "build an interaction network from descriptions");
  std::string extract_dir, extract_out, extract_format = "graphml";
  BuildFlags extract_flags;
  extract->add_option("dir", extract_dir, "directory of WSDL/SAWSDL files")->required();
  add_build_flags(extract, extract_flags, true);
  extract->add_option("--format", extract_format, "graphml, dot or edgelist")
      ->capture_default_str();
  extract->add_option("-o,--output", extract_out, "output file (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "compute the metric report of one network");
  std::string analyze_input, analyze_out, analyze_format = "json";
  bool from_graphml = false;
  BuildFlags analyze_flags;
  AnalysisSettings analyze_settings;
  analyze->add_option("input", analyze_input, "network file or description directory")
      ->required();
  analyze->add_flag("--from-graphml", from_graphml, "read the input as GraphML");
  add_build_flags(analyze, analyze_flags, true);
  add_analysis_flags(analyze, analyze_settings);
  analyze->add_option("--format", analyze_format, "json or csv")->capture_default_str();
  analyze->add_option("-o,--output", analyze_out, "output file (default stdout)");

  // compare
  auto* compare = app.add_subcommand("compare", "analyze the networks of all four matchers");
  std::string compare_dir, compare_out, compare_format = "json";
  BuildFlags compare_flags;
  AnalysisSettings compare_settings;
  compare->add_option("dir", compare_dir, "directory of WSDL/SAWSDL files")->required();
  add_build_flags(compare, compare_flags, false);
  add_analysis_flags(compare, compare_settings);
  compare->add_option("--format", compare_format, "json or csv")->capture_default_str();
  compare->add_option("-o,--output", compare_out, "output file (default stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "write a synthetic annotated collection");
  std::string gen_dir;
  GenSpec spec;
  gen->add_option("outdir", gen_dir, "output directory")->required();
  gen->add_option("--services", spec.n_services)->capture_default_str();
  gen->add_option("--ops-per-service", spec.ops_per_service)->capture_default_str();
  gen->add_option("--domains", spec.n_domains)->capture_default_str();
  gen->add_option("--name-pool", spec.name_pool_size, "parameter names per domain")
      ->capture_default_str();
  gen->add_option("--concept-pool", spec.concept_pool_size, "concepts per domain")
      ->capture_default_str();
  gen->add_option("--depth", spec.hierarchy_depth, "hierarchy levels below each domain root")
      ->capture_default_str();
  gen->add_option("--branching", spec.branching)->capture_default_str();
  gen->add_option("--inputs-min", spec.inputs_min)->capture_default_str();
  gen->add_option("--inputs-max", spec.inputs_max)->capture_default_str();
  gen->add_option("--outputs-min", spec.outputs_min)->capture_default_str();
  gen->add_option("--outputs-max", spec.outputs_max)->capture_default_str();
  gen->add_option("--annotation-rate", spec.annotation_rate)->capture_default_str();
  gen->add_option("--cross-domain-rate", spec.cross_domain_rate)->capture_default_str();
  gen->add_option("--seed", spec.seed)->capture_default_str();

  // export
  auto* exp = app.add_subcommand("export", "convert a network or collection to another format");
  std::string export_input, export_out, export_format = "graphml";
  std::size_t export_walk = 4;
  BuildFlags export_flags;
  exp->add_option("input", export_input, "network file or description directory")->required();
  add_build_flags(exp, export_flags, true);
  exp->add_option("--format", export_format,
                  "graphml, dot, edgelist, partition, dendrogram or collection")
      ->capture_default_str();
  exp->add_option("--walk-length", export_walk)->capture_default_str();
  exp->add_option("-o,--output", export_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (threads > 0) set_thread_cap(threads);

    if (extract->parsed()) {
      NetworkFormat format = parse_network_format(extract_format);
      Loaded loaded = load_and_build(extract_dir, extract_flags);
      emit_warnings(loaded.warnings, err);
      write_output(export_network(loaded.network, format), extract_out, out);
    } else if (analyze->parsed()) {
      MetricsReport report;
      report.settings = analyze_settings;
      InteractionNetwork net = network_from_input(analyze_input, analyze_flags, from_graphml,
                                                  report.warnings, &report.collection);
      report.networks.push_back(analyze_network(net, analyze_settings));
      emit_warnings(report.warnings, err);
      write_output(render(report, analyze_format), analyze_out, out);
    } else if (compare->parsed()) {
      if (compare_flags.ontology.empty()) throw UsageError("compare requires --ontology");
      MetricsReport report;
      report.settings = compare_settings;
      report.comparison = true;
      ServiceCollection collection = load_collection(compare_dir);
      report.warnings = collection.warnings;
      Ontology onto = load_ontology(compare_flags.ontology);
      for (const auto& w : onto.warnings()) report.warnings.push_back(w);
      report.collection = collection_stats(collection);
      for (MatcherKind kind : kAllMatchers) {
        InteractionNetwork net =
            build_network(collection, kind, &onto, compare_flags.options());
        report.networks.push_back(analyze_network(net, compare_settings));
      }
      emit_warnings(report.warnings, err);
      write_output(render(report, compare_format), compare_out, out);
    } else if (gen->parsed()) {
      GeneratedCorpus corpus = generate(spec);
      write_corpus(corpus, gen_dir);
      out << "wrote " << corpus.collection.services.size() << " services ("
          << corpus.collection.operation_count() << " operations) to " << gen_dir << "\n";
    } else if (exp->parsed()) {
      std::string text;
      if (export_format == "collection") {
        if (!fs::is_directory(export_input)) {
          throw UsageError("collection export expects a directory: " + export_input);
        }
        ServiceCollection collection = load_collection(export_input);
        emit_warnings(collection.warnings, err);
        text = collection_to_json(collection);
      } else {
        std::vector<std::string> warnings;
        InteractionNetwork net = canonicalize(
            network_from_input(export_input, export_flags, false, warnings, nullptr));
        emit_warnings(warnings, err);
        if (export_format == "partition" || export_format == "dendrogram") {
          if (net.graph.size() == 0) throw UsageError("network has no nodes");
          Dendrogram dendrogram = walktrap(net.graph, export_walk);
          text = export_format == "partition"
                     ? partition_to_csv(best_partition(dendrogram, net.graph).partition,
                                        net.graph)
                     : dendrogram_to_json(dendrogram, net.graph);
        } else {
          text = export_network(net, parse_network_format(export_format));
        }
      }
      write_output(text, export_out, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace svcnet
