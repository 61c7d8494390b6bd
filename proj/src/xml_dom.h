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

#ifndef SVCNET_XML_DOM_H_
#define SVCNET_XML_DOM_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace svcnet::xml {

// Expanded name: namespace URI (empty when none) plus local part.
struct Name {
  std::string ns;
  std::string local;

  auto operator<=>(const Name&) const = default;
};

// Minimal namespace-aware element tree built on expat. Only what the WSDL and
// OWL readers need: names, attributes, children, text and in-scope prefixes.
struct Element {
  Name name;
  std::map<Name, std::string> attributes;
  std::vector<std::unique_ptr<Element>> children;
  std::string text;
  // Prefix declarations made on this element ("" is the default namespace).
  std::map<std::string, std::string> declared_prefixes;
  const Element* parent = nullptr;
  long line = 0;

  const std::string* attribute(std::string_view ns,
                               std::string_view local) const;
  // Attribute without a namespace.
  const std::string* attribute(std::string_view local) const {
    return attribute("", local);
  }

  std::vector<const Element*> children_named(std::string_view ns,
                                             std::string_view local) const;
  const Element* first_child(std::string_view ns,
                             std::string_view local) const;

  // Resolves a prefix against this element and its ancestors.
  std::optional<std::string> lookup_prefix(const std::string& prefix) const;

  // Splits "p:local" and resolves p. Unbound prefixes leave ns empty and
  // set `resolved` false.
  struct QName {
    Name name;
    bool resolved = true;
  };
  QName resolve_qname(std::string_view text) const;
};

struct Document {
  std::unique_ptr<Element> root;
};

// Throws ParseError("<source>:<line>:<column>: <reason>") on malformed input.
Document parse(std::string_view bytes, const std::string& source_name);

std::string escape(std::string_view text);

}  // namespace svcnet::xml

#endif  // SVCNET_XML_DOM_H_
