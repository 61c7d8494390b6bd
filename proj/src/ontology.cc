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

#include "svcnet/ontology.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

#include "svcnet/corpus.h"
#include "svcnet/error.h"
#include "xml_dom.h"

namespace svcnet {
namespace {

constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
constexpr std::string_view kXmlNs = "http://www.w3.org/XML/1998/namespace";

std::string strip_fragment(const std::string& base) {
  return base.substr(0, base.find('#'));
}

std::string resolve_reference(const std::string& ref, const std::string& base) {
  if (is_absolute_iri(ref) || base.empty()) return ref;
  std::string doc = strip_fragment(base);
  if (ref.empty()) return doc;
  if (ref.front() == '#') return doc + ref;
  auto slash = doc.rfind('/');
  return (slash == std::string::npos ? doc : doc.substr(0, slash + 1)) + ref;
}

struct EdgeCollector {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> concepts;
  std::vector<std::string> warnings;
  std::string source;

  bool accept(const std::string& iri, const xml::Element& at) {
    if (is_absolute_iri(iri)) return true;
    warnings.push_back(source + ":" + std::to_string(at.line) +
                       ": class IRI '" + iri + "' is not absolute; skipped");
    return false;
  }
};

std::string base_of(const xml::Element& e) {
  for (const xml::Element* cur = &e; cur != nullptr; cur = cur->parent) {
    if (const std::string* b = cur->attribute(kXmlNs, "base")) return *b;
  }
  return {};
}

// OWL 2 XML serialization: <SubClassOf><Class IRI=../><Class IRI=../></SubClassOf>.
void read_owl_xml(const xml::Element& root, EdgeCollector& out) {
  std::string base = base_of(root);
  if (const std::string* onto_iri = root.attribute("ontologyIRI"); base.empty() && onto_iri) {
    base = *onto_iri;
  }
  std::map<std::string, std::string> prefixes;
  for (const xml::Element* p : root.children_named(kOwlNs, "Prefix")) {
    const std::string* name = p->attribute("name");
    const std::string* iri = p->attribute("IRI");
    if (name && iri) prefixes[*name] = *iri;
  }
  auto class_iri = [&](const xml::Element& cls) -> std::optional<std::string> {
    if (const std::string* iri = cls.attribute("IRI")) return resolve_reference(*iri, base);
    if (const std::string* abbr = cls.attribute("abbreviatedIRI")) {
      auto colon = abbr->find(':');
      if (colon != std::string::npos) {
        auto it = prefixes.find(abbr->substr(0, colon));
        if (it != prefixes.end()) return it->second + abbr->substr(colon + 1);
      }
    }
    return std::nullopt;
  };

  for (const auto& axiom : root.children) {
    if (axiom->name.ns != kOwlNs) continue;
    const std::string& kind = axiom->name.local;
    if (kind == "Declaration") {
      if (const xml::Element* cls = axiom->first_child(kOwlNs, "Class")) {
        if (auto iri = class_iri(*cls); iri && out.accept(*iri, *cls)) out.concepts.push_back(*iri);
      }
    } else if (kind == "SubClassOf") {
      if (axiom->children.size() != 2 || axiom->children[0]->name.local != "Class" ||
          axiom->children[1]->name.local != "Class") {
        continue;  // class expressions are out of scope
      }
      auto child = class_iri(*axiom->children[0]);
      auto parent = class_iri(*axiom->children[1]);
      if (child && parent && out.accept(*child, *axiom) && out.accept(*parent, *axiom)) {
        out.edges.emplace_back(*child, *parent);
      }
    } else if (kind == "EquivalentClasses") {
      out.warnings.push_back(out.source + ":" + std::to_string(axiom->line) +
                             ": EquivalentClasses axiom ignored");
    }
  }
}

// RDF/XML: <owl:Class rdf:about=..><rdfs:subClassOf rdf:resource=../></owl:Class>.
void read_rdf_xml(const xml::Element& root, EdgeCollector& out) {
  auto subject_iri = [&](const xml::Element& e) -> std::optional<std::string> {
    std::string base = base_of(e);
    if (const std::string* about = e.attribute(kRdfNs, "about")) return resolve_reference(*about, base);
    if (const std::string* id = e.attribute(kRdfNs, "ID")) return strip_fragment(base) + "#" + *id;
    return std::nullopt;
  };
  auto is_class = [](const xml::Element& e) {
    return (e.name.ns == kOwlNs && e.name.local == "Class") ||
           (e.name.ns == kRdfsNs && e.name.local == "Class");
  };

  // Class descriptions may be nested inside rdfs:subClassOf, so walk the tree.
  std::deque<const xml::Element*> queue{&root};
  while (!queue.empty()) {
    const xml::Element* e = queue.front();
    queue.pop_front();
    for (const auto& c : e->children) queue.push_back(c.get());
    if (!is_class(*e)) continue;
    auto child = subject_iri(*e);
    if (!child || !out.accept(*child, *e)) continue;
    out.concepts.push_back(*child);
    for (const auto& prop : e->children) {
      if (prop->name.ns == kOwlNs && prop->name.local == "equivalentClass") {
        out.warnings.push_back(out.source + ":" + std::to_string(prop->line) +
                               ": equivalentClass axiom ignored");
        continue;
      }
      if (prop->name.ns != kRdfsNs || prop->name.local != "subClassOf") continue;
      std::optional<std::string> parent;
      if (const std::string* res = prop->attribute(kRdfNs, "resource")) {
        parent = resolve_reference(*res, base_of(*prop));
      } else if (prop->children.size() == 1 && is_class(*prop->children[0])) {
        parent = subject_iri(*prop->children[0]);
      }
      if (parent && out.accept(*parent, *prop)) out.edges.emplace_back(*child, *parent);
    }
  }
}

}  // namespace

Ontology Ontology::from_edges(
    const std::vector<std::pair<std::string, std::string>>& subclass_edges,
    const std::vector<std::string>& extra_concepts) {
  Ontology onto;
  std::set<std::string> all(extra_concepts.begin(), extra_concepts.end());
  for (const auto& [c, p] : subclass_edges) {
    all.insert(c);
    all.insert(p);
  }
  onto.iris_.assign(all.begin(), all.end());
  for (Index i = 0; i < onto.iris_.size(); ++i) onto.index_.emplace(onto.iris_[i], i);

  std::set<std::pair<Index, Index>> edge_set;
  for (const auto& [c, p] : subclass_edges) {
    if (c == p) {
      onto.warnings_.push_back("reflexive subclass axiom on '" + c + "' ignored");
      continue;
    }
    edge_set.emplace(onto.index_.at(c), onto.index_.at(p));
  }
  onto.edges_.assign(edge_set.begin(), edge_set.end());

  const std::size_t n = onto.iris_.size();
  std::vector<std::vector<Index>> parents(n), children(n);
  for (const auto& [c, p] : onto.edges_) {
    parents[c].push_back(p);
    children[p].push_back(c);
  }

  // Roots first, so every parent's ancestor set is final before its children.
  std::vector<std::size_t> pending(n);
  std::deque<Index> ready;
  for (Index i = 0; i < n; ++i) {
    pending[i] = parents[i].size();
    if (pending[i] == 0) ready.push_back(i);
  }
  std::vector<Index> order;
  order.reserve(n);
  while (!ready.empty()) {
    Index i = ready.front();
    ready.pop_front();
    order.push_back(i);
    for (Index c : children[i]) {
      if (--pending[c] == 0) ready.push_back(c);
    }
  }

  if (order.size() != n) {
    // Every unfinished node has an unfinished parent; follow them to a repeat.
    Index cur = 0;
    while (pending[cur] == 0) ++cur;
    std::vector<Index> path;
    std::vector<std::size_t> seen_at(n, SIZE_MAX);
    while (seen_at[cur] == SIZE_MAX) {
      seen_at[cur] = path.size();
      path.push_back(cur);
      for (Index p : parents[cur]) {
        if (pending[p] != 0) {
          cur = p;
          break;
        }
      }
    }
    std::string cycle;
    for (std::size_t k = seen_at[cur]; k < path.size(); ++k) {
      cycle += onto.iris_[path[k]] + " -> ";
    }
    cycle += onto.iris_[cur];
    throw CycleError("subclass cycle: " + cycle);
  }

  std::vector<boost::dynamic_bitset<>> closure(n, boost::dynamic_bitset<>(n));
  for (Index i : order) {
    for (Index p : parents[i]) {
      closure[i] |= closure[p];
      closure[i].set(p);
    }
  }
  onto.ancestors_.assign(n, {});
  onto.descendants_.assign(n, {});
  for (Index i = 0; i < n; ++i) {
    for (auto a = closure[i].find_first(); a != boost::dynamic_bitset<>::npos;
         a = closure[i].find_next(a)) {
      onto.ancestors_[i].push_back(a);
      onto.descendants_[a].push_back(i);
    }
  }
  return onto;
}

std::optional<Ontology::Index> Ontology::find(std::string_view iri) const {
  auto it = index_.find(std::string(iri));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Ontology::is_strict_subclass(std::string_view child,
                                  std::string_view parent) const {
  auto c = find(child);
  auto p = find(parent);
  if (!c || !p || *c == *p) return false;
  const auto& anc = ancestors_[*c];
  return std::binary_search(anc.begin(), anc.end(), *p);
}

Ontology parse_ontology_tsv(std::string_view text, const std::string& source_name) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> concepts;
  std::istringstream in{std::string(text)};
  std::string line;
  for (long lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::vector<std::string> fields;
    std::istringstream fs(line);
    for (std::string f; std::getline(fs, f, '\t');) {
      auto b = f.find_first_not_of(' ');
      auto e = f.find_last_not_of(' ');
      fields.push_back(b == std::string::npos ? "" : f.substr(b, e - b + 1));
    }
    std::erase_if(fields, [](const std::string& f) { return f.empty(); });
    auto where = source_name + ":" + std::to_string(lineno) + ": ";
    if (fields.empty() || fields.size() > 2) {
      throw ParseError(where + "expected 'child<TAB>parent'");
    }
    for (const auto& f : fields) {
      if (!is_absolute_iri(f)) throw ParseError(where + "'" + f + "' is not an absolute IRI");
    }
    if (fields.size() == 1) {
      concepts.push_back(fields[0]);
    } else {
      edges.emplace_back(fields[0], fields[1]);
    }
  }
  return Ontology::from_edges(edges, concepts);
}

Ontology parse_ontology_owl(std::string_view text, const std::string& source_name) {
  xml::Document doc = xml::parse(text, source_name);
  EdgeCollector collected;
  collected.source = source_name;
  const xml::Element& root = *doc.root;
  if (root.name.ns == kOwlNs && root.name.local == "Ontology") {
    read_owl_xml(root, collected);
  } else if (root.name.ns == kRdfNs && root.name.local == "RDF") {
    read_rdf_xml(root, collected);
  } else {
    throw ParseError(source_name + ": expected an OWL/XML or RDF/XML ontology");
  }
  Ontology onto = Ontology::from_edges(collected.edges, collected.concepts);
  for (auto& w : collected.warnings) onto.add_warning(std::move(w));
  return onto;
}

Ontology parse_ontology(std::string_view text, const std::string& source_name) {
  std::size_t i = 0;
  if (text.starts_with("\xEF\xBB\xBF")) i = 3;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '<') return parse_ontology_owl(text, source_name);
  return parse_ontology_tsv(text, source_name);
}

Ontology load_ontology(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read ontology " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ontology(buf.str(), path);
}

std::string ontology_to_tsv(const Ontology& onto) {
  std::vector<bool> mentioned(onto.size(), false);
  std::vector<std::pair<std::string, std::string>> lines;
  for (const auto& [c, p] : onto.edges()) {
    lines.emplace_back(onto.iri(c), onto.iri(p));
    mentioned[c] = mentioned[p] = true;
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (std::size_t i = 0; i < onto.size(); ++i) {
    if (!mentioned[i]) out += onto.iri(i) + "\n";
  }
  for (const auto& [c, p] : lines) out += c + "\t" + p + "\n";
  return out;
}

}  // namespace svcnet
