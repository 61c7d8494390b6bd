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

#ifndef SVCNET_MATCHER_H_
#define SVCNET_MATCHER_H_

#include <array>
#include <string>
#include <string_view>

#include "svcnet/corpus.h"
#include "svcnet/ontology.h"

namespace svcnet {

// The four binary parameter matching functions. Equal is syntactic; the
// other three compare ontology concepts.
enum class MatcherKind { kEqual, kExact, kPlugIn, kSubsume };

inline constexpr std::array<MatcherKind, 4> kAllMatchers = {
    MatcherKind::kEqual, MatcherKind::kExact, MatcherKind::kPlugIn,
    MatcherKind::kSubsume};

// "equal", "exact", "plugin", "subsume".
std::string_view to_string(MatcherKind kind);
// Throws UsageError for anything else.
MatcherKind parse_matcher_kind(std::string_view text);

constexpr bool is_semantic(MatcherKind kind) { return kind != MatcherKind::kEqual; }

struct MatchOptions {
  // Plug-in and subsume also accept identical concepts.
  bool reflexive_subsumption = false;
};

// Does `provided` (an output) satisfy `required` (an input)?
//   Equal:   byte-exact name equality; xsd_type is ignored.
//   Exact:   both concepts present and identical.
//   PlugIn:  provided concept strictly below the required one.
//   Subsume: provided concept strictly above the required one.
// Semantic kinds return false when either concept is missing and throw
// UsageError when `onto` is null.
bool match_params(MatcherKind kind, const ParameterDesc& provided,
                  const ParameterDesc& required, const Ontology* onto,
                  const MatchOptions& options = {});

}  // namespace svcnet

#endif  // SVCNET_MATCHER_H_
