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

#include "xml_dom.h"

#include <expat.h>

#include <memory>
#include <string>
#include <utility>

#include "svcnet/error.h"

namespace svcnet::xml {
namespace {

constexpr char kNsSeparator = '\x01';

Name split_expanded(const XML_Char* raw) {
  std::string_view s(raw);
  auto pos = s.find(kNsSeparator);
  if (pos == std::string_view::npos) return {"", std::string(s)};
  return {std::string(s.substr(0, pos)), std::string(s.substr(pos + 1))};
}

struct Builder {
  XML_Parser parser = nullptr;
  std::unique_ptr<Element> root;
  Element* current = nullptr;
  std::map<std::string, std::string> pending_prefixes;
};

void on_ns_start(void* data, const XML_Char* prefix, const XML_Char* uri) {
  auto* b = static_cast<Builder*>(data);
  b->pending_prefixes[prefix ? prefix : ""] = uri ? uri : "";
}

void on_start(void* data, const XML_Char* name, const XML_Char** atts) {
  auto* b = static_cast<Builder*>(data);
  auto element = std::make_unique<Element>();
  element->name = split_expanded(name);
  element->line = static_cast<long>(XML_GetCurrentLineNumber(b->parser));
  element->declared_prefixes = std::move(b->pending_prefixes);
  b->pending_prefixes.clear();
  for (int i = 0; atts[i] != nullptr; i += 2) {
    element->attributes[split_expanded(atts[i])] = atts[i + 1];
  }
  Element* raw = element.get();
  if (b->current == nullptr) {
    b->root = std::move(element);
  } else {
    raw->parent = b->current;
    b->current->children.push_back(std::move(element));
  }
  b->current = raw;
}

void on_end(void* data, const XML_Char*) {
  auto* b = static_cast<Builder*>(data);
  b->current = const_cast<Element*>(b->current->parent);
}

void on_text(void* data, const XML_Char* s, int len) {
  auto* b = static_cast<Builder*>(data);
  if (b->current != nullptr) b->current->text.append(s, static_cast<std::size_t>(len));
}

}  // namespace

const std::string* Element::attribute(std::string_view ns,
                                      std::string_view local) const {
  auto it = attributes.find(Name{std::string(ns), std::string(local)});
  return it == attributes.end() ? nullptr : &it->second;
}

std::vector<const Element*> Element::children_named(
    std::string_view ns, std::string_view local) const {
  std::vector<const Element*> out;
  for (const auto& child : children) {
    if (child->name.ns == ns && child->name.local == local) out.push_back(child.get());
  }
  return out;
}

const Element* Element::first_child(std::string_view ns,
                                    std::string_view local) const {
  for (const auto& child : children) {
    if (child->name.ns == ns && child->name.local == local) return child.get();
  }
  return nullptr;
}

std::optional<std::string> Element::lookup_prefix(
    const std::string& prefix) const {
  if (prefix == "xml") return "http://www.w3.org/XML/1998/namespace";
  for (const Element* e = this; e != nullptr; e = e->parent) {
    auto it = e->declared_prefixes.find(prefix);
    if (it != e->declared_prefixes.end()) return it->second;
  }
  return std::nullopt;
}

Element::QName Element::resolve_qname(std::string_view text) const {
  QName out;
  auto colon = text.find(':');
  std::string prefix;
  if (colon == std::string_view::npos) {
    out.name.local = std::string(text);
  } else {
    prefix = std::string(text.substr(0, colon));
    out.name.local = std::string(text.substr(colon + 1));
  }
  if (auto uri = lookup_prefix(prefix)) {
    out.name.ns = *uri;
  } else if (!prefix.empty()) {
    out.resolved = false;
  }
  return out;
}

Document parse(std::string_view bytes, const std::string& source_name) {
  Builder builder;
  XML_Parser parser = XML_ParserCreateNS(nullptr, kNsSeparator);
  if (parser == nullptr) throw Error("cannot allocate XML parser");
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)>
      guard(parser, &XML_ParserFree);
  builder.parser = parser;
  XML_SetUserData(parser, &builder);
  XML_SetElementHandler(parser, on_start, on_end);
  XML_SetCharacterDataHandler(parser, on_text);
  XML_SetStartNamespaceDeclHandler(parser, on_ns_start);

  if (XML_Parse(parser, bytes.data(), static_cast<int>(bytes.size()),
                XML_TRUE) == XML_STATUS_ERROR) {
    throw ParseError(source_name + ":" +
                     std::to_string(XML_GetCurrentLineNumber(parser)) + ":" +
                     std::to_string(XML_GetCurrentColumnNumber(parser)) + ": " +
                     XML_ErrorString(XML_GetErrorCode(parser)));
  }
  if (!builder.root) throw ParseError(source_name + ": empty document");
  return Document{std::move(builder.root)};
}

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace svcnet::xml
