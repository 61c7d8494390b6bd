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

#include "svcnet/matcher.h"

#include "svcnet/error.h"

namespace svcnet {

std::string_view to_string(MatcherKind kind) {
  switch (kind) {
    case MatcherKind::kEqual: return "equal";
    case MatcherKind::kExact: return "exact";
    case MatcherKind::kPlugIn: return "plugin";
    case MatcherKind::kSubsume: return "subsume";
  }
  return "?";
}

MatcherKind parse_matcher_kind(std::string_view text) {
  for (MatcherKind kind : kAllMatchers) {
    if (to_string(kind) == text) return kind;
  }
  throw UsageError("unknown matcher '" + std::string(text) +
                   "' (expected equal, exact, plugin or subsume)");
}

bool match_params(MatcherKind kind, const ParameterDesc& provided,
                  const ParameterDesc& required, const Ontology* onto,
                  const MatchOptions& options) {
  if (kind == MatcherKind::kEqual) return provided.name == required.name;
  if (onto == nullptr) {
    throw UsageError("matcher '" + std::string(to_string(kind)) + "' needs an ontology");
  }
  if (!provided.concept_iri || !required.concept_iri) return false;
  const std::string& have = *provided.concept_iri;
  const std::string& want = *required.concept_iri;
  switch (kind) {
    case MatcherKind::kExact:
      return have == want;
    case MatcherKind::kPlugIn:
      return (options.reflexive_subsumption && have == want) ||
             onto->is_strict_subclass(have, want);
    case MatcherKind::kSubsume:
      return (options.reflexive_subsumption && have == want) ||
             onto->is_strict_subclass(want, have);
    case MatcherKind::kEqual:
      break;
  }
  return false;
}

}  // namespace svcnet
