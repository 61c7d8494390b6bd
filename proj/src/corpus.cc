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

#include "svcnet/corpus.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include "json.hpp"
#include "svcnet/error.h"
#include "svcnet/parallel.h"
#include "xml_dom.h"

namespace svcnet {
namespace {

constexpr std::string_view kWsdlNs = "http://schemas.xmlsoap.org/wsdl/";
constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema";
constexpr std::string_view kSawsdlNs = "http://www.w3.org/ns/sawsdl";
constexpr std::string_view kCollectionSchema = "svcnet.collection/1";

using xml::Element;

std::string location(const std::string& source, const Element& e) {
  return source + ":" + std::to_string(e.line);
}

std::string local_part(std::string_view qname) {
  auto colon = qname.find(':');
  return std::string(colon == std::string_view::npos ? qname
                                                     : qname.substr(colon + 1));
}

// Schema components from every <types>/<schema>, keyed by local name.
struct SchemaIndex {
  std::map<std::string, const Element*> elements;
  std::map<std::string, const Element*> types;
};

class DescriptionReader {
 public:
  DescriptionReader(const Element& root, std::string source)
      : root_(root), source_(std::move(source)) {}

  ParsedDescription read(const std::string& fallback_name);

 private:
  void index_schemas();
  std::optional<std::string> model_reference(const Element& e);
  std::optional<std::string> type_concept(const Element& context,
                                          const std::string& type_qname);
  std::vector<const Element*> wrapper_children(const Element& element);
  ParameterDesc element_parameter(const Element& element);
  std::vector<ParameterDesc> message_parameters(const Element& io);
  void warn(const Element& at, const std::string& what) {
    warnings_.push_back(location(source_, at) + ": " + what);
  }

  const Element& root_;
  std::string source_;
  SchemaIndex schema_;
  std::map<std::string, const Element*> messages_;
  std::vector<std::string> warnings_;
};

void DescriptionReader::index_schemas() {
  for (const Element* types : root_.children_named(kWsdlNs, "types")) {
    for (const Element* schema : types->children_named(kXsdNs, "schema")) {
      for (const auto& child : schema->children) {
        if (child->name.ns != kXsdNs) continue;
        const std::string* name = child->attribute("name");
        if (name == nullptr) continue;
        if (child->name.local == "element") {
          schema_.elements.emplace(*name, child.get());
        } else if (child->name.local == "complexType" ||
                   child->name.local == "simpleType") {
          schema_.types.emplace(*name, child.get());
        }
      }
    }
  }
}

std::optional<std::string> DescriptionReader::model_reference(const Element& e) {
  const std::string* raw = e.attribute(kSawsdlNs, "modelReference");
  if (raw == nullptr) return std::nullopt;
  std::istringstream in(*raw);
  std::vector<std::string> iris;
  for (std::string token; in >> token;) iris.push_back(token);
  if (iris.empty()) return std::nullopt;
  if (iris.size() > 1) {
    warn(e, "modelReference lists " + std::to_string(iris.size()) +
                " IRIs; keeping the first (" + iris.front() + ")");
  }
  if (!is_absolute_iri(iris.front())) {
    warn(e, "modelReference '" + iris.front() + "' is not an absolute IRI; ignored");
    return std::nullopt;
  }
  return iris.front();
}

std::optional<std::string> DescriptionReader::type_concept(
    const Element& context, const std::string& type_qname) {
  auto qname = context.resolve_qname(type_qname);
  if (qname.name.ns == kXsdNs) return std::nullopt;
  auto it = schema_.types.find(qname.name.local);
  if (it == schema_.types.end()) {
    warn(context, "unresolved type '" + type_qname + "'; kept as raw QName");
    return std::nullopt;
  }
  return model_reference(*it->second);
}

// Child elements of a complex-type wrapper, or empty when `element` is not a
// wrapper (simple type, annotated itself, or unknown type).
std::vector<const Element*> DescriptionReader::wrapper_children(
    const Element& element) {
  const Element* complex = element.first_child(kXsdNs, "complexType");
  if (complex == nullptr) {
    const std::string* type = element.attribute("type");
    if (type == nullptr) return {};
    auto qname = element.resolve_qname(*type);
    if (qname.name.ns == kXsdNs) return {};
    auto it = schema_.types.find(qname.name.local);
    if (it == schema_.types.end() || it->second->name.local != "complexType") return {};
    complex = it->second;
  }
  std::vector<const Element*> out;
  for (const auto& group : complex->children) {
    if (group->name.ns != kXsdNs) continue;
    if (group->name.local != "sequence" && group->name.local != "all" &&
        group->name.local != "choice") {
      continue;
    }
    for (const Element* child : group->children_named(kXsdNs, "element")) {
      out.push_back(child);
    }
  }
  return out;
}

bool is_complex_wrapper(const Element& element, const SchemaIndex& schema) {
  if (element.first_child(kXsdNs, "complexType") != nullptr) return true;
  const std::string* type = element.attribute("type");
  if (type == nullptr) return false;
  auto qname = element.resolve_qname(*type);
  if (qname.name.ns == kXsdNs) return false;
  auto it = schema.types.find(qname.name.local);
  return it != schema.types.end() && it->second->name.local == "complexType";
}

ParameterDesc DescriptionReader::element_parameter(const Element& element) {
  const Element* decl = &element;
  ParameterDesc param;
  if (const std::string* ref = element.attribute("ref")) {
    param.name = local_part(*ref);
    auto it = schema_.elements.find(param.name);
    if (it == schema_.elements.end()) {
      warn(element, "unresolved element reference '" + *ref + "'");
      param.xsd_type = *ref;
      param.concept_iri = model_reference(element);
      return param;
    }
    decl = it->second;
  } else if (const std::string* name = element.attribute("name")) {
    param.name = *name;
  }
  param.concept_iri = model_reference(element);
  if (!param.concept_iri && decl != &element) param.concept_iri = model_reference(*decl);
  if (const std::string* type = decl->attribute("type")) {
    param.xsd_type = *type;
    if (!param.concept_iri) param.concept_iri = type_concept(*decl, *type);
  } else if (const Element* inline_simple = decl->first_child(kXsdNs, "simpleType")) {
    if (!param.concept_iri) param.concept_iri = model_reference(*inline_simple);
  }
  return param;
}

std::vector<ParameterDesc> DescriptionReader::message_parameters(
    const Element& io) {
  std::vector<ParameterDesc> params;
  const std::string* message_ref = io.attribute("message");
  if (message_ref == nullptr) {
    warn(io, "<" + io.name.local + "> without message attribute");
    return params;
  }
  auto msg_it = messages_.find(local_part(*message_ref));
  if (msg_it == messages_.end()) {
    warn(io, "unknown message '" + *message_ref + "'");
    return params;
  }

  for (const Element* part : msg_it->second->children_named(kWsdlNs, "part")) {
    const std::string* part_name = part->attribute("name");
    std::optional<std::string> part_concept = model_reference(*part);

    if (const std::string* element_ref = part->attribute("element")) {
      std::string local = local_part(*element_ref);
      auto it = schema_.elements.find(local);
      if (it == schema_.elements.end()) {
        warn(*part, "unresolved element '" + *element_ref + "'; kept as raw QName");
        params.push_back({local, *element_ref, part_concept});
        continue;
      }
      const Element& element = *it->second;
      bool annotated = part_concept ||
                       element.attribute(kSawsdlNs, "modelReference") != nullptr;
      if (!annotated && is_complex_wrapper(element, schema_)) {
        for (const Element* child : wrapper_children(element)) {
          params.push_back(element_parameter(*child));
        }
        continue;
      }
      ParameterDesc param = element_parameter(element);
      if (part_concept) param.concept_iri = part_concept;
      params.push_back(std::move(param));
    } else if (const std::string* type = part->attribute("type")) {
      ParameterDesc param{part_name ? *part_name : "", *type, part_concept};
      if (!param.concept_iri) param.concept_iri = type_concept(*part, *type);
      params.push_back(std::move(param));
    } else {
      warn(*part, "part has neither element nor type");
      params.push_back({part_name ? *part_name : "", std::nullopt, part_concept});
    }
  }

  std::erase_if(params, [&](const ParameterDesc& p) {
    if (!p.name.empty()) return false;
    warn(io, "parameter without a name dropped");
    return true;
  });
  return params;
}

ParsedDescription DescriptionReader::read(const std::string& fallback_name) {
  if (root_.name.ns != kWsdlNs || root_.name.local != "definitions") {
    throw ParseError(source_ + ": root element is not a WSDL 1.1 <definitions>");
  }
  index_schemas();
  for (const Element* message : root_.children_named(kWsdlNs, "message")) {
    if (const std::string* name = message->attribute("name")) {
      messages_.emplace(*name, message);
    }
  }

  ParsedDescription out;
  ServiceDesc& service = out.service;
  if (const Element* svc = root_.first_child(kWsdlNs, "service");
      svc != nullptr && svc->attribute("name") != nullptr) {
    service.name = *svc->attribute("name");
  } else if (const std::string* name = root_.attribute("name")) {
    service.name = *name;
  } else {
    service.name = fallback_name;
  }
  if (service.name.empty()) {
    throw ParseError(source_ + ": cannot determine a service name");
  }

  std::set<std::string> seen;
  for (const Element* port_type : root_.children_named(kWsdlNs, "portType")) {
    for (const Element* op : port_type->children_named(kWsdlNs, "operation")) {
      const std::string* op_name = op->attribute("name");
      if (op_name == nullptr || op_name->empty()) {
        warn(*op, "operation without a name skipped");
        continue;
      }
      if (!seen.insert(*op_name).second) {
        warn(*op, "duplicate operation '" + *op_name + "' skipped");
        continue;
      }
      OperationDesc desc;
      desc.id = {service.name, *op_name};
      const Element* input = op->first_child(kWsdlNs, "input");
      const Element* output = op->first_child(kWsdlNs, "output");
      if (input == nullptr && output == nullptr) {
        warn(*op, "operation '" + *op_name + "' has no input and no output");
      }
      if (input != nullptr) desc.inputs = message_parameters(*input);
      if (output != nullptr) desc.outputs = message_parameters(*output);
      canonicalize_parameters(desc.inputs);
      canonicalize_parameters(desc.outputs);
      service.operations.push_back(std::move(desc));
    }
  }
  out.warnings = std::move(warnings_);
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::ordered_json parameter_json(const ParameterDesc& p) {
  nlohmann::ordered_json j;
  j["name"] = p.name;
  j["xsd_type"] = p.xsd_type ? nlohmann::ordered_json(*p.xsd_type) : nullptr;
  j["concept"] = p.concept_iri ? nlohmann::ordered_json(*p.concept_iri) : nullptr;
  return j;
}

std::optional<std::string> optional_string(const nlohmann::json& j,
                                           const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::string>();
}

ParameterDesc parameter_from_json(const nlohmann::json& j) {
  return {j.at("name").get<std::string>(), optional_string(j, "xsd_type"),
          optional_string(j, "concept")};
}

}  // namespace

bool parameter_less(const ParameterDesc& a, const ParameterDesc& b) {
  return std::tie(a.name, a.concept_iri) < std::tie(b.name, b.concept_iri);
}

void canonicalize_parameters(std::vector<ParameterDesc>& params) {
  std::stable_sort(params.begin(), params.end(), parameter_less);
  auto last = std::unique(params.begin(), params.end(),
                          [](const ParameterDesc& a, const ParameterDesc& b) {
                            return a.name == b.name && a.concept_iri == b.concept_iri;
                          });
  params.erase(last, params.end());
}

bool is_absolute_iri(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 >= text.size()) {
    return false;
  }
  if (!std::isalpha(static_cast<unsigned char>(text[0]))) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    char c = text[i];
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
      return false;
    }
  }
  return std::none_of(text.begin(), text.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '>' || c == '"';
  });
}

std::size_t ServiceCollection::operation_count() const {
  std::size_t n = 0;
  for (const auto& s : services) n += s.operations.size();
  return n;
}

std::vector<const OperationDesc*> ServiceCollection::operations() const {
  std::vector<const OperationDesc*> out;
  out.reserve(operation_count());
  for (const auto& s : services) {
    for (const auto& op : s.operations) out.push_back(&op);
  }
  return out;
}

std::vector<std::optional<std::string>> ServiceCollection::operation_domains() const {
  std::vector<std::optional<std::string>> out;
  out.reserve(operation_count());
  for (const auto& s : services) out.insert(out.end(), s.operations.size(), s.domain);
  return out;
}

ParsedDescription parse_description(std::string_view document,
                                    const std::string& source_name,
                                    const std::string& fallback_name) {
  xml::Document doc = xml::parse(document, source_name);
  return DescriptionReader(*doc.root, source_name).read(fallback_name);
}

ServiceCollection load_collection(const std::filesystem::path& directory) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory)) {
    throw UsageError("collection directory not found: " + directory.string());
  }

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".wsdl") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });

  std::map<std::string, std::string> domains;
  if (fs::path manifest = directory / "manifest.json"; fs::exists(manifest)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(manifest));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(manifest.string() + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(manifest.string() + ": expected an object");
    for (const auto& [file, label] : j.items()) {
      if (!label.is_string()) {
        throw ParseError(manifest.string() + ": domain for '" + file + "' is not a string");
      }
      domains[file] = label.get<std::string>();
    }
  }

  struct FileResult {
    std::optional<ParsedDescription> parsed;
    std::string failure;
  };
  std::vector<FileResult> results(files.size());
  parallel_for(files.size(), [&](std::size_t i) {
    try {
      results[i].parsed = parse_description(read_file(files[i]),
                                            files[i].filename().string(),
                                            files[i].stem().string());
    } catch (const Error& e) {
      results[i].failure = e.what();
    }
  });

  ServiceCollection collection;
  std::set<std::string> names;
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::string file = files[i].filename().string();
    if (!results[i].parsed) {
      collection.warnings.push_back(results[i].failure);
      continue;
    }
    ParsedDescription& parsed = *results[i].parsed;
    for (auto& w : parsed.warnings) collection.warnings.push_back(std::move(w));
    ServiceDesc service = std::move(parsed.service);
    if (!names.insert(service.name).second) {
      std::string renamed = service.name + "~" + files[i].stem().string();
      collection.warnings.push_back(file + ": service name '" + service.name +
                                    "' already used; renamed to '" + renamed + "'");
      service.name = renamed;
      names.insert(renamed);
      for (auto& op : service.operations) op.id.service = renamed;
    }
    service.source = file;
    if (auto it = domains.find(file); it != domains.end()) service.domain = it->second;
    collection.services.push_back(std::move(service));
  }
  if (collection.services.empty()) {
    throw Error("no descriptions found in " + directory.string());
  }
  return collection;
}

CollectionStats collection_stats(const ServiceCollection& collection) {
  CollectionStats stats;
  stats.services = collection.services.size();
  for (const auto& service : collection.services) {
    for (const auto& op : service.operations) {
      ++stats.operations;
      for (const auto* side : {&op.inputs, &op.outputs}) {
        for (const auto& p : *side) {
          ++stats.parameters;
          if (p.concept_iri) ++stats.annotated_parameters;
        }
      }
    }
  }
  if (stats.parameters > 0) {
    stats.annotation_coverage = static_cast<double>(stats.annotated_parameters) /
                                static_cast<double>(stats.parameters);
  }
  return stats;
}

std::string collection_to_json(const ServiceCollection& collection) {
  nlohmann::ordered_json root;
  root["schema"] = kCollectionSchema;
  root["services"] = nlohmann::ordered_json::array();
  for (const auto& service : collection.services) {
    nlohmann::ordered_json s;
    s["name"] = service.name;
    s["domain"] = service.domain ? nlohmann::ordered_json(*service.domain) : nullptr;
    s["source"] = service.source;
    s["operations"] = nlohmann::ordered_json::array();
    for (const auto& op : service.operations) {
      nlohmann::ordered_json o;
      o["name"] = op.id.operation;
      o["inputs"] = nlohmann::ordered_json::array();
      for (const auto& p : op.inputs) o["inputs"].push_back(parameter_json(p));
      o["outputs"] = nlohmann::ordered_json::array();
      for (const auto& p : op.outputs) o["outputs"].push_back(parameter_json(p));
      s["operations"].push_back(std::move(o));
    }
    root["services"].push_back(std::move(s));
  }
  root["warnings"] = collection.warnings;
  return root.dump(2) + "\n";
}

ServiceCollection collection_from_json(std::string_view json) {
  ServiceCollection collection;
  try {
    auto root = nlohmann::json::parse(json);
    if (root.value("schema", "") != kCollectionSchema) {
      throw ParseError("collection dump: unsupported schema");
    }
    for (const auto& s : root.at("services")) {
      ServiceDesc service;
      service.name = s.at("name").get<std::string>();
      service.domain = optional_string(s, "domain");
      service.source = s.value("source", "");
      for (const auto& o : s.at("operations")) {
        OperationDesc op;
        op.id = {service.name, o.at("name").get<std::string>()};
        for (const auto& p : o.at("inputs")) op.inputs.push_back(parameter_from_json(p));
        for (const auto& p : o.at("outputs")) op.outputs.push_back(parameter_from_json(p));
        canonicalize_parameters(op.inputs);
        canonicalize_parameters(op.outputs);
        service.operations.push_back(std::move(op));
      }
      collection.services.push_back(std::move(service));
    }
    collection.warnings = root.value("warnings", std::vector<std::string>{});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("collection dump: ") + e.what());
  }
  return collection;
}

}  // namespace svcnet
