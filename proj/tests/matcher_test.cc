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

#include <gtest/gtest.h>

#include "svcnet/error.h"
#include "svcnet/gen.h"
#include "svcnet/random.h"

namespace svcnet {
namespace {

const std::string kA = "http://m.example/#A";
const std::string kB = "http://m.example/#B";  // B below A
const std::string kC = "http://m.example/#C";  // C below B

ParameterDesc param(std::string name, std::optional<std::string> concept_iri) {
  return {std::move(name), std::nullopt, std::move(concept_iri)};
}

class MatcherTest : public ::testing::Test {
 protected:
  Ontology onto = Ontology::from_edges({{kB, kA}, {kC, kB}});
};

TEST_F(MatcherTest, EqualComparesNamesBytewise) {
  EXPECT_TRUE(match_params(MatcherKind::kEqual, param("x", kA), param("x", kC), nullptr));
  EXPECT_FALSE(match_params(MatcherKind::kEqual, param("x", kA), param("X", kA), nullptr));
  EXPECT_FALSE(match_params(MatcherKind::kEqual, param("x ", kA), param("x", kA), nullptr));
}

TEST_F(MatcherTest, ExactComparesIris) {
  EXPECT_TRUE(match_params(MatcherKind::kExact, param("x", kA), param("y", kA), &onto));
  EXPECT_FALSE(match_params(MatcherKind::kExact, param("x", kA), param("x", kB), &onto));
  EXPECT_FALSE(match_params(MatcherKind::kExact, param("x", std::nullopt),
                            param("x", std::nullopt), &onto));
}

TEST_F(MatcherTest, PlugInAndSubsumeAreStrict) {
  EXPECT_TRUE(match_params(MatcherKind::kPlugIn, param("p", kC), param("r", kA), &onto));
  EXPECT_FALSE(match_params(MatcherKind::kPlugIn, param("p", kA), param("r", kC), &onto));
  EXPECT_FALSE(match_params(MatcherKind::kPlugIn, param("p", kA), param("r", kA), &onto));
  EXPECT_TRUE(match_params(MatcherKind::kSubsume, param("p", kA), param("r", kC), &onto));
  EXPECT_FALSE(match_params(MatcherKind::kSubsume, param("p", kB), param("r", kB), &onto));

  MatchOptions reflexive{true};
  EXPECT_TRUE(
      match_params(MatcherKind::kPlugIn, param("p", kA), param("r", kA), &onto, reflexive));
  EXPECT_TRUE(
      match_params(MatcherKind::kSubsume, param("p", kA), param("r", kA), &onto, reflexive));
  EXPECT_FALSE(
      match_params(MatcherKind::kPlugIn, param("p", kA), param("r", kB), &onto, reflexive));
}

TEST_F(MatcherTest, UnknownConceptsNeverMatchSemantically) {
  const std::string other = "http://m.example/#Z";
  EXPECT_FALSE(match_params(MatcherKind::kPlugIn, param("p", other), param("r", kA), &onto));
  EXPECT_FALSE(match_params(MatcherKind::kSubsume, param("p", kA), param("r", other), &onto));
  EXPECT_TRUE(match_params(MatcherKind::kExact, param("p", other), param("r", other), &onto));
}

TEST_F(MatcherTest, SemanticKindsNeedAnOntology) {
  EXPECT_THROW(match_params(MatcherKind::kPlugIn, param("p", kC), param("r", kA), nullptr),
               UsageError);
}

TEST(MatcherKindTest, ParseAndPrint) {
  for (MatcherKind k : kAllMatchers) EXPECT_EQ(parse_matcher_kind(to_string(k)), k);
  EXPECT_THROW(parse_matcher_kind("PlugIn"), UsageError);
  EXPECT_FALSE(is_semantic(MatcherKind::kEqual));
  EXPECT_TRUE(is_semantic(MatcherKind::kSubsume));
}

// Algebraic properties over parameters drawn from a generated hierarchy.
TEST(MatcherPropertyTest, AlgebraOverGeneratedPairs) {
  GenSpec spec;
  spec.hierarchy_depth = 3;
  spec.concept_pool_size = 12;
  GeneratedCorpus corpus = generate(spec);
  const Ontology& onto = corpus.ontology;
  Rng rng = derive_rng(7, 0);
  auto draw = [&] {
    std::optional<std::string> c;
    if (!bernoulli(rng, 0.05)) c = onto.iri(uniform_below(rng, onto.size()));
    return param("n" + std::to_string(uniform_below(rng, 6)), c);
  };
  for (int i = 0; i < 20000; ++i) {
    ParameterDesc a = draw();
    ParameterDesc b = draw();
    for (bool reflexive : {false, true}) {
      MatchOptions o{reflexive};
      EXPECT_EQ(match_params(MatcherKind::kEqual, a, b, &onto, o),
                match_params(MatcherKind::kEqual, b, a, &onto, o));
      EXPECT_EQ(match_params(MatcherKind::kExact, a, b, &onto, o),
                match_params(MatcherKind::kExact, b, a, &onto, o));
      EXPECT_EQ(match_params(MatcherKind::kPlugIn, a, b, &onto, o),
                match_params(MatcherKind::kSubsume, b, a, &onto, o));
    }
    EXPECT_FALSE(match_params(MatcherKind::kExact, a, b, &onto) &&
                 match_params(MatcherKind::kPlugIn, a, b, &onto));
    EXPECT_FALSE(match_params(MatcherKind::kPlugIn, a, b, &onto) &&
                 match_params(MatcherKind::kSubsume, a, b, &onto));
  }
}

}  // namespace
}  // namespace svcnet
