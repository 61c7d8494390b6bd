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

#ifndef SVCNET_CORPUS_H_
#define SVCNET_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace svcnet {

// One named input or output of an operation.
struct ParameterDesc {
  std::string name;
  std::optional<std::string> xsd_type;  // QName text as written
  std::optional<std::string> concept_iri;  // absolute IRI

  bool operator==(const ParameterDesc&) const = default;
};

// Canonical set order: (name, concept). xsd_type does not take part in
// identity; the first occurrence wins when deduplicating.
bool parameter_less(const ParameterDesc& a, const ParameterDesc& b);

// Sorts and removes entries with duplicate (name, concept).
void canonicalize_parameters(std::vector<ParameterDesc>& params);

struct OperationId {
  std::string service;
  std::string operation;

  auto operator<=>(const OperationId&) const = default;
  // "service/operation"; used as node id everywhere downstream.
  std::string str() const { return service + "/" + operation; }
};

struct OperationDesc {
  OperationId id;
  std::vector<ParameterDesc> inputs;   // canonical set
  std::vector<ParameterDesc> outputs;  // canonical set

  bool operator==(const OperationDesc&) const = default;
};

struct ServiceDesc {
  std::string name;
  std::optional<std::string> domain;
  std::string source;  // file name the service was read from, may be empty
  std::vector<OperationDesc> operations;

  bool operator==(const ServiceDesc&) const = default;
};

struct ServiceCollection {
  std::vector<ServiceDesc> services;
  std::vector<std::string> warnings;

  bool operator==(const ServiceCollection&) const = default;

  std::size_t operation_count() const;
  // Flattened view in collection order.
  std::vector<const OperationDesc*> operations() const;
  // Domain label of each operation, aligned with operations().
  std::vector<std::optional<std::string>> operation_domains() const;
};

// Result of reading a single description document.
struct ParsedDescription {
  ServiceDesc service;
  std::vector<std::string> warnings;
};

// Reads one WSDL 1.1 document with optional SAWSDL annotations. The service
// name is the first <service name>, else <definitions name>, else
// `fallback_name`. Throws ParseError on malformed XML or a non-WSDL root.
ParsedDescription parse_description(std::string_view document,
                                    const std::string& source_name,
                                    const std::string& fallback_name = "");

// Parses every *.wsdl file in `directory` (sorted by file name). Files that
// fail to parse become warnings. An optional manifest.json maps file names to
// domain labels. Throws UsageError when the directory is missing and
// Error("no descriptions found") when nothing parses.
ServiceCollection load_collection(const std::filesystem::path& directory);

struct CollectionStats {
  std::size_t services = 0;
  std::size_t operations = 0;
  std::size_t parameters = 0;
  std::size_t annotated_parameters = 0;
  double annotation_coverage = 0.0;
};

CollectionStats collection_stats(const ServiceCollection& collection);

// Internal JSON dump with stable key order, and its inverse.
std::string collection_to_json(const ServiceCollection& collection);
ServiceCollection collection_from_json(std::string_view json);

// True for strings of the form scheme ":" rest, with a non-empty rest.
bool is_absolute_iri(std::string_view text);

}  // namespace svcnet

#endif  // SVCNET_CORPUS_H_
