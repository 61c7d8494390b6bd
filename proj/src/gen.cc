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

#include "svcnet/gen.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "svcnet/error.h"
#include "svcnet/random.h"
#include "xml_dom.h"

namespace svcnet {
namespace {

constexpr std::string_view kOntologyBase = "http://svcnet.example/onto#";

std::string padded(std::size_t value, std::size_t width) {
  std::string s = std::to_string(value);
  return s.size() >= width ? s : std::string(width - s.size(), '0') + s;
}

std::size_t width_for(std::size_t count) {
  return std::to_string(count > 0 ? count - 1 : 0).size();
}

std::size_t draw_count(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + uniform_below(rng, hi - lo + 1);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

void emit_wrapper(std::ostringstream& out, const std::string& name,
                  const std::vector<ParameterDesc>& params) {
  out << "      <xsd:element name=\"" << xml::escape(name) << "\">\n"
      << "        <xsd:complexType>\n"
      << "          <xsd:sequence>\n";
  for (const auto& p : params) {
    out << "            <xsd:element name=\"" << xml::escape(p.name) << "\"";
    if (p.xsd_type) out << " type=\"" << xml::escape(*p.xsd_type) << "\"";
    if (p.concept_iri) out << " sawsdl:modelReference=\"" << xml::escape(*p.concept_iri) << "\"";
    out << "/>\n";
  }
  out << "          </xsd:sequence>\n"
      << "        </xsd:complexType>\n"
      << "      </xsd:element>\n";
}

}  // namespace

void validate(const GenSpec& spec) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw UsageError(std::string("invalid generator spec: ") + what);
  };
  require(spec.n_services > 0, "n_services must be positive");
  require(spec.ops_per_service > 0, "ops_per_service must be positive");
  require(spec.n_domains > 0, "n_domains must be positive");
  require(spec.name_pool_size > 0, "name_pool_size must be positive");
  require(spec.concept_pool_size > 0, "concept_pool_size must be positive");
  require(spec.branching > 0, "branching must be positive");
  require(spec.inputs_min <= spec.inputs_max, "inputs_min > inputs_max");
  require(spec.outputs_min <= spec.outputs_max, "outputs_min > outputs_max");
  require(spec.annotation_rate >= 0.0 && spec.annotation_rate <= 1.0,
          "annotation_rate outside [0,1]");
  require(spec.cross_domain_rate >= 0.0 && spec.cross_domain_rate <= 1.0,
          "cross_domain_rate outside [0,1]");
  // Parameters of one operation side are distinct draws from a name pool.
  if (std::max(spec.inputs_max, spec.outputs_max) > spec.name_pool_size) {
    throw UsageError("parameter pool too small: name_pool_size " +
                     std::to_string(spec.name_pool_size) + " < " +
                     std::to_string(std::max(spec.inputs_max, spec.outputs_max)) +
                     " parameters per operation side");
  }
  std::size_t subtree = 0, level = 1;
  for (std::size_t d = 0; d <= spec.hierarchy_depth; ++d) {
    subtree += level;
    level *= spec.branching;
  }
  if (spec.concept_pool_size > subtree) {
    throw UsageError("concept pool too small: concept_pool_size " +
                     std::to_string(spec.concept_pool_size) + " exceeds the " +
                     std::to_string(subtree) + " concepts of a domain subtree");
  }
}

GeneratedCorpus generate(const GenSpec& spec) {
  validate(spec);
  Rng rng = derive_rng(spec.seed, 0);
  GeneratedCorpus out;

  // Concept forest: Thing <- domain roots <- balanced subtrees.
  const std::string thing = std::string(kOntologyBase) + "Thing";
  std::vector<std::pair<std::string, std::string>> edges;
  out.truth.domain_concepts.resize(spec.n_domains);
  out.truth.domain_names.resize(spec.n_domains);
  for (std::size_t d = 0; d < spec.n_domains; ++d) {
    std::string root = std::string(kOntologyBase) + "d" + std::to_string(d);
    edges.emplace_back(root, thing);
    std::vector<std::string> subtree{root};
    std::vector<std::string> frontier{root};
    for (std::size_t level = 0; level < spec.hierarchy_depth; ++level) {
      std::vector<std::string> next;
      for (const auto& parent : frontier) {
        for (std::size_t b = 0; b < spec.branching; ++b) {
          std::string child = parent + "_" + std::to_string(b);
          edges.emplace_back(child, parent);
          next.push_back(child);
          subtree.push_back(child);
        }
      }
      frontier = std::move(next);
    }
    // Partial Fisher-Yates picks the domain's concept pool.
    for (std::size_t k = 0; k < spec.concept_pool_size; ++k) {
      std::size_t pick = k + uniform_below(rng, subtree.size() - k);
      std::swap(subtree[k], subtree[pick]);
      out.truth.domain_concepts[d].push_back(subtree[k]);
    }
    for (std::size_t k = 0; k < spec.name_pool_size; ++k) {
      out.truth.domain_names[d].push_back("d" + std::to_string(d) + "_p" +
                                          padded(k, width_for(spec.name_pool_size)));
    }
  }
  out.ontology = Ontology::from_edges(edges);

  auto draw_side = [&](std::size_t home, std::size_t count) {
    std::vector<ParameterDesc> params;
    std::set<std::string> used;
    while (params.size() < count) {
      std::size_t d = bernoulli(rng, spec.cross_domain_rate)
                          ? uniform_below(rng, spec.n_domains)
                          : home;
      std::size_t slot = uniform_below(rng, spec.name_pool_size);
      const std::string& name = out.truth.domain_names[d][slot];
      if (!used.insert(name).second) continue;
      ParameterDesc p{name, "xsd:string", std::nullopt};
      if (bernoulli(rng, spec.annotation_rate)) {
        p.concept_iri = out.truth.domain_concepts[d][slot % spec.concept_pool_size];
      }
      params.push_back(std::move(p));
    }
    canonicalize_parameters(params);
    return params;
  };

  const std::size_t svc_width = width_for(spec.n_services);
  const std::size_t op_width = width_for(spec.ops_per_service);
  for (std::size_t s = 0; s < spec.n_services; ++s) {
    std::size_t home = s % spec.n_domains;
    ServiceDesc service;
    service.name = "svc" + padded(s, svc_width);
    service.domain = "domain" + std::to_string(home);
    service.source = service.name + ".wsdl";
    for (std::size_t k = 0; k < spec.ops_per_service; ++k) {
      OperationDesc op;
      op.id = {service.name, "op" + padded(k, op_width)};
      op.inputs = draw_side(home, draw_count(rng, spec.inputs_min, spec.inputs_max));
      op.outputs = draw_side(home, draw_count(rng, spec.outputs_min, spec.outputs_max));
      service.operations.push_back(std::move(op));
      out.truth.operation_domain.push_back(home);
    }
    out.collection.services.push_back(std::move(service));
  }
  return out;
}

std::string service_to_wsdl(const ServiceDesc& service) {
  const std::string tns = "http://svcnet.example/services/" + service.name;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<wsdl:definitions name=\"" << xml::escape(service.name) << "\"\n"
      << "    targetNamespace=\"" << xml::escape(tns) << "\"\n"
      << "    xmlns:wsdl=\"http://schemas.xmlsoap.org/wsdl/\"\n"
      << "    xmlns:xsd=\"http://www.w3.org/2001/XMLSchema\"\n"
      << "    xmlns:sawsdl=\"http://www.w3.org/ns/sawsdl\"\n"
      << "    xmlns:tns=\"" << xml::escape(tns) << "\">\n"
      << "  <wsdl:types>\n"
      << "    <xsd:schema targetNamespace=\"" << xml::escape(tns) << "\">\n";
  for (const auto& op : service.operations) {
    emit_wrapper(out, op.id.operation + "Request", op.inputs);
    emit_wrapper(out, op.id.operation + "Response", op.outputs);
  }
  out << "    </xsd:schema>\n  </wsdl:types>\n";
  for (const auto& op : service.operations) {
    for (const char* suffix : {"Request", "Response"}) {
      std::string msg = xml::escape(op.id.operation + suffix);
      out << "  <wsdl:message name=\"" << msg << "\">\n"
          << "    <wsdl:part name=\"parameters\" element=\"tns:" << msg << "\"/>\n"
          << "  </wsdl:message>\n";
    }
  }
  out << "  <wsdl:portType name=\"" << xml::escape(service.name) << "PortType\">\n";
  for (const auto& op : service.operations) {
    std::string name = xml::escape(op.id.operation);
    out << "    <wsdl:operation name=\"" << name << "\">\n"
        << "      <wsdl:input message=\"tns:" << name << "Request\"/>\n"
        << "      <wsdl:output message=\"tns:" << name << "Response\"/>\n"
        << "    </wsdl:operation>\n";
  }
  out << "  </wsdl:portType>\n"
      << "  <wsdl:service name=\"" << xml::escape(service.name) << "\"/>\n"
      << "</wsdl:definitions>\n";
  return out.str();
}

void write_corpus(const GeneratedCorpus& corpus, const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  nlohmann::ordered_json manifest = nlohmann::ordered_json::object();
  for (const auto& service : corpus.collection.services) {
    std::string file = service.source.empty() ? service.name + ".wsdl" : service.source;
    write_text(directory / file, service_to_wsdl(service));
    if (service.domain) manifest[file] = *service.domain;
  }
  write_text(directory / "manifest.json", manifest.dump(2) + "\n");
  write_text(directory / "ontology.tsv", ontology_to_tsv(corpus.ontology));
}

}  // namespace svcnet
