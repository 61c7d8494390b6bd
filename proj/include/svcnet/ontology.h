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

#ifndef SVCNET_ONTOLOGY_H_
#define SVCNET_ONTOLOGY_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace svcnet {

// Named-class hierarchy with a precomputed transitive closure. Concepts are
// identified by exact IRI string equality. Immutable once built.
class Ontology {
 public:
  using Index = std::size_t;

  Ontology() = default;

  // Throws CycleError naming one cycle when the edges are not a DAG.
  // (child, parent) pairs; endpoints become concepts automatically.
  static Ontology from_edges(
      const std::vector<std::pair<std::string, std::string>>& subclass_edges,
      const std::vector<std::string>& extra_concepts = {});

  std::size_t size() const { return iris_.size(); }
  bool empty() const { return iris_.empty(); }
  std::optional<Index> find(std::string_view iri) const;
  const std::string& iri(Index i) const { return iris_[i]; }
  const std::vector<std::string>& concepts() const { return iris_; }

  // Direct (child, parent) edges, sorted.
  const std::vector<std::pair<Index, Index>>& edges() const { return edges_; }

  // Strict ancestors / descendants through the closure, sorted by index.
  const std::vector<Index>& ancestors(Index i) const { return ancestors_[i]; }
  const std::vector<Index>& descendants(Index i) const { return descendants_[i]; }

  // True iff child != parent and (child, parent) is in the closure. Unknown
  // IRIs are isolated concepts and never related.
  bool is_strict_subclass(std::string_view child, std::string_view parent) const;

  // Reader warnings (ignored axioms and the like).
  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

 private:
  std::vector<std::string> iris_;
  std::unordered_map<std::string, Index> index_;
  std::vector<std::pair<Index, Index>> edges_;
  std::vector<std::vector<Index>> ancestors_;
  std::vector<std::vector<Index>> descendants_;
  std::vector<std::string> warnings_;
};

// Edge-list TSV: one "child<TAB>parent" pair per line. Blank lines and lines
// starting with '#' are skipped; a line with a single IRI declares a concept.
Ontology parse_ontology_tsv(std::string_view text, const std::string& source_name);

// Named-class subClassOf axioms from OWL/XML or RDF/XML. equivalentClass
// axioms are ignored with a warning; anonymous class expressions are skipped.
Ontology parse_ontology_owl(std::string_view text, const std::string& source_name);

// Sniffs the format: a document whose first non-blank byte is '<' is XML.
Ontology parse_ontology(std::string_view text, const std::string& source_name);
Ontology load_ontology(const std::string& path);

// Serializes the direct edges as TSV (sorted, deterministic).
std::string ontology_to_tsv(const Ontology& onto);

}  // namespace svcnet

#endif  // SVCNET_ONTOLOGY_H_
