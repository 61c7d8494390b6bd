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

#ifndef SVCNET_GEN_H_
#define SVCNET_GEN_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "svcnet/corpus.h"
#include "svcnet/ontology.h"

namespace svcnet {

// Shape of a synthetic service collection with planted domain structure.
struct GenSpec {
  std::size_t n_services = 20;
  std::size_t ops_per_service = 5;
  std::size_t n_domains = 3;
  std::size_t name_pool_size = 12;     // parameter names per domain
  std::size_t concept_pool_size = 8;   // concepts per domain
  std::size_t hierarchy_depth = 2;     // levels below each domain root
  std::size_t branching = 3;
  std::size_t inputs_min = 1, inputs_max = 2;
  std::size_t outputs_min = 1, outputs_max = 3;
  double annotation_rate = 1.0;
  double cross_domain_rate = 0.05;
  std::uint64_t seed = 1;
};

// Throws UsageError naming the first invalid field.
void validate(const GenSpec& spec);

struct GroundTruth {
  std::vector<std::size_t> operation_domain;  // aligned with collection.operations()
  std::vector<std::vector<std::string>> domain_concepts;
  std::vector<std::vector<std::string>> domain_names;
};

struct GeneratedCorpus {
  ServiceCollection collection;
  Ontology ontology;
  GroundTruth truth;
};

// Balanced concept tree under one root per domain; every domain draws its
// parameter names and concepts from its own disjoint pools, with
// cross_domain_rate of draws going to a uniformly chosen domain instead.
// Parameter name k of a domain is tied to that domain's concept
// k mod concept_pool_size. Deterministic in spec.seed.
GeneratedCorpus generate(const GenSpec& spec);

// Writes one SAWSDL file per service, ontology.tsv and manifest.json.
// load_collection on the directory gives back `corpus.collection`.
void write_corpus(const GeneratedCorpus& corpus, const std::filesystem::path& directory);

// WSDL text for one service, as written by write_corpus.
std::string service_to_wsdl(const ServiceDesc& service);

}  // namespace svcnet

#endif  // SVCNET_GEN_H_
