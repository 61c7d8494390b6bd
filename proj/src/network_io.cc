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

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "svcnet/error.h"
#include "svcnet/network.h"
#include "xml_dom.h"

namespace svcnet {
namespace {

constexpr std::string_view kGraphmlNs = "http://graphml.graphdrawing.org/xmlns";

std::vector<NodeIndex> sorted_nodes(const Digraph& g) {
  std::vector<NodeIndex> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](NodeIndex a, NodeIndex b) { return g.name(a) < g.name(b); });
  return order;
}

std::vector<std::pair<std::string_view, std::string_view>> sorted_edges(const Digraph& g) {
  std::vector<std::pair<std::string_view, std::string_view>> out;
  out.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) out.emplace_back(g.name(u), g.name(v));
  std::sort(out.begin(), out.end());
  return out;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string export_graphml(const InteractionNetwork& net) {
  const Digraph& g = net.graph;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"" << kGraphmlNs << "\">\n"
      << "  <key id=\"kind\" for=\"graph\" attr.name=\"kind\" attr.type=\"string\"/>\n"
      << "  <key id=\"zero_input_targets\" for=\"graph\" attr.name=\"zero_input_targets\" "
         "attr.type=\"boolean\"/>\n"
      << "  <key id=\"reflexive_subsumption\" for=\"graph\" "
         "attr.name=\"reflexive_subsumption\" attr.type=\"boolean\"/>\n"
      << "  <key id=\"domain\" for=\"node\" attr.name=\"domain\" attr.type=\"string\"/>\n"
      << "  <graph id=\"G\" edgedefault=\"directed\">\n";
  if (net.kind) out << "    <data key=\"kind\">" << to_string(*net.kind) << "</data>\n";
  out << "    <data key=\"zero_input_targets\">" << bool_text(net.options.zero_input_targets)
      << "</data>\n"
      << "    <data key=\"reflexive_subsumption\">"
      << bool_text(net.options.reflexive_subsumption) << "</data>\n";
  for (NodeIndex v : sorted_nodes(g)) {
    out << "    <node id=\"" << xml::escape(g.name(v)) << "\"";
    if (v < net.domains.size() && net.domains[v]) {
      out << "><data key=\"domain\">" << xml::escape(*net.domains[v]) << "</data></node>\n";
    } else {
      out << "/>\n";
    }
  }
  for (const auto& [s, t] : sorted_edges(g)) {
    out << "    <edge source=\"" << xml::escape(s) << "\" target=\"" << xml::escape(t)
        << "\"/>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

std::string export_dot(const InteractionNetwork& net) {
  const Digraph& g = net.graph;
  std::ostringstream out;
  out << "digraph interactions {\n  graph [";
  if (net.kind) out << "kind=" << dot_quote(to_string(*net.kind)) << ", ";
  out << "zero_input_targets=\"" << bool_text(net.options.zero_input_targets)
      << "\", reflexive_subsumption=\"" << bool_text(net.options.reflexive_subsumption)
      << "\"];\n";
  for (NodeIndex v : sorted_nodes(g)) out << "  " << dot_quote(g.name(v)) << ";\n";
  for (const auto& [s, t] : sorted_edges(g)) {
    out << "  " << dot_quote(s) << " -> " << dot_quote(t) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_edgelist(const InteractionNetwork& net) {
  std::string out;
  for (const auto& [s, t] : sorted_edges(net.graph)) {
    out.append(s).append("\t").append(t).append("\n");
  }
  return out;
}

bool parse_bool(const std::string& text, const std::string& where) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ParseError(where + ": expected a boolean, got '" + text + "'");
}

}  // namespace

NetworkFormat parse_network_format(std::string_view text) {
  if (text == "graphml") return NetworkFormat::kGraphml;
  if (text == "dot") return NetworkFormat::kDot;
  if (text == "edgelist") return NetworkFormat::kEdgelist;
  throw UsageError("unknown network format '" + std::string(text) +
                   "' (expected graphml, dot or edgelist)");
}

std::string export_network(const InteractionNetwork& net, NetworkFormat format) {
  switch (format) {
    case NetworkFormat::kGraphml: return export_graphml(net);
    case NetworkFormat::kDot: return export_dot(net);
    case NetworkFormat::kEdgelist: return export_edgelist(net);
  }
  throw UsageError("unknown network format");
}

InteractionNetwork read_graphml(std::string_view text, const std::string& source_name) {
  xml::Document doc = xml::parse(text, source_name);
  const xml::Element& root = *doc.root;
  if (root.name.local != "graphml") throw ParseError(source_name + ": not a GraphML document");
  const std::string ns = root.name.ns;
  const xml::Element* graph = root.first_child(ns, "graph");
  if (graph == nullptr) throw ParseError(source_name + ": no <graph> element");

  // Map key ids to attribute names so foreign GraphML with other ids works.
  std::map<std::string, std::string> key_names;
  for (const xml::Element* key : root.children_named(ns, "key")) {
    const std::string* id = key->attribute("id");
    const std::string* attr = key->attribute("attr.name");
    if (id) key_names[*id] = attr ? *attr : *id;
  }
  auto data_name = [&](const xml::Element& data) -> std::string {
    const std::string* key = data.attribute("key");
    if (key == nullptr) return {};
    auto it = key_names.find(*key);
    return it == key_names.end() ? *key : it->second;
  };

  InteractionNetwork net;
  for (const xml::Element* data : graph->children_named(ns, "data")) {
    std::string where = source_name + ":" + std::to_string(data->line);
    std::string name = data_name(*data);
    if (name == "kind") {
      try {
        net.kind = parse_matcher_kind(data->text);
      } catch (const UsageError& e) {
        throw ParseError(where + ": " + e.what());
      }
    } else if (name == "zero_input_targets") {
      net.options.zero_input_targets = parse_bool(data->text, where);
    } else if (name == "reflexive_subsumption") {
      net.options.reflexive_subsumption = parse_bool(data->text, where);
    }
  }

  std::vector<std::string> names;
  std::map<std::string, NodeIndex> index;
  for (const xml::Element* node : graph->children_named(ns, "node")) {
    const std::string* id = node->attribute("id");
    if (id == nullptr) throw ParseError(source_name + ":" + std::to_string(node->line) + ": node without id");
    if (!index.emplace(*id, names.size()).second) {
      throw ParseError(source_name + ":" + std::to_string(node->line) + ": duplicate node '" + *id + "'");
    }
    names.push_back(*id);
    std::optional<std::string> domain;
    for (const xml::Element* data : node->children_named(ns, "data")) {
      if (data_name(*data) == "domain") domain = data->text;
    }
    net.domains.push_back(std::move(domain));
  }
  std::vector<Edge> edges;
  for (const xml::Element* edge : graph->children_named(ns, "edge")) {
    std::string where = source_name + ":" + std::to_string(edge->line);
    const std::string* s = edge->attribute("source");
    const std::string* t = edge->attribute("target");
    if (s == nullptr || t == nullptr) throw ParseError(where + ": edge without endpoints");
    auto si = index.find(*s);
    auto ti = index.find(*t);
    if (si == index.end() || ti == index.end()) {
      throw ParseError(where + ": edge references an undeclared node");
    }
    if (si->second == ti->second) throw ParseError(where + ": self-loop");
    edges.emplace_back(si->second, ti->second);
  }
  net.graph = Digraph(std::move(names), std::move(edges));
  return net;
}

InteractionNetwork read_edgelist(std::string_view text, const std::string& source_name) {
  std::vector<std::string> names;
  std::map<std::string, NodeIndex> index;
  auto intern = [&](const std::string& id) {
    auto [it, inserted] = index.emplace(id, names.size());
    if (inserted) names.push_back(id);
    return it->second;
  };
  std::vector<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  for (long lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    std::string src, dst;
    if (auto tab = line.find('\t'); tab != std::string::npos) {
      src = line.substr(0, tab);
      dst = line.substr(tab + 1);
    } else {
      std::istringstream fields(line);
      fields >> src >> dst;
    }
    std::string where = source_name + ":" + std::to_string(lineno);
    if (src.empty() || dst.empty() || dst.find('\t') != std::string::npos) {
      throw ParseError(where + ": expected 'source<TAB>target'");
    }
    if (src == dst) throw ParseError(where + ": self-loop");
    NodeIndex u = intern(src);
    NodeIndex v = intern(dst);
    edges.emplace_back(u, v);
  }
  InteractionNetwork net;
  net.domains.assign(names.size(), std::nullopt);
  net.graph = Digraph(std::move(names), std::move(edges));
  return net;
}

InteractionNetwork read_network(std::string_view text, const std::string& source_name) {
  auto first = text.find_first_not_of(" \t\r\n\xEF\xBB\xBF");
  if (first != std::string_view::npos && text[first] == '<') {
    return read_graphml(text, source_name);
  }
  return read_edgelist(text, source_name);
}

}  // namespace svcnet
