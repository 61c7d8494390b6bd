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

#include "svcnet/ontology.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "svcnet/error.h"
#include "svcnet/random.h"
#include "test_util.h"

namespace svcnet {
namespace {

const std::string kShop = "http://onto.example/shop#";

std::vector<std::pair<std::string, std::string>> edge_iris(const Ontology& o) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [c, p] : o.edges()) out.emplace_back(o.iri(c), o.iri(p));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(OntologyTest, TsvFixture) {
  Ontology o = load_ontology(testing::fixture("sawsdl/shop.tsv"));
  EXPECT_EQ(o.size(), 8u);
  EXPECT_EQ(o.edges().size(), 4u);
  EXPECT_TRUE(o.find(kShop + "Title").has_value());
  EXPECT_TRUE(o.is_strict_subclass(kShop + "Novel", kShop + "Item"));
  EXPECT_TRUE(o.is_strict_subclass(kShop + "Novel", kShop + "Book"));
  EXPECT_FALSE(o.is_strict_subclass(kShop + "Item", kShop + "Novel"));
  EXPECT_FALSE(o.is_strict_subclass(kShop + "Book", kShop + "Book"));
  EXPECT_FALSE(o.is_strict_subclass(kShop + "Unknown", kShop + "Book"));
  EXPECT_TRUE(o.warnings().empty());
}

TEST(OntologyTest, OwlXmlAndRdfXmlAgreeWithTsv) {
  Ontology tsv = load_ontology(testing::fixture("sawsdl/shop.tsv"));
  Ontology owl = load_ontology(testing::fixture("sawsdl/shop.owl"));
  Ontology rdf = load_ontology(testing::fixture("sawsdl/shop.rdf"));
  EXPECT_EQ(owl.concepts(), tsv.concepts());
  EXPECT_EQ(edge_iris(owl), edge_iris(tsv));
  EXPECT_EQ(edge_iris(rdf), edge_iris(tsv));
  // RDF/XML also declares the equivalentClass target it ignores.
  ASSERT_FALSE(rdf.warnings().empty());
  EXPECT_NE(rdf.warnings()[0].find("equivalentClass"), std::string::npos);
  EXPECT_EQ(ontology_to_tsv(owl), ontology_to_tsv(tsv));
}

TEST(OntologyTest, TsvRoundTrip) {
  Ontology o = load_ontology(testing::fixture("sawsdl/shop.tsv"));
  Ontology back = parse_ontology(ontology_to_tsv(o), "rt.tsv");
  EXPECT_EQ(back.concepts(), o.concepts());
  EXPECT_EQ(edge_iris(back), edge_iris(o));
}

TEST(OntologyTest, TsvErrorsCarryLineNumbers) {
  try {
    parse_ontology_tsv("# header\nhttp://a#X\thttp://a#Y\nnot-an-iri\thttp://a#Y\n", "o.tsv");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("o.tsv:3:", 0), 0u) << e.what();
  }
  EXPECT_THROW(parse_ontology_tsv("http://a#X\thttp://a#Y\thttp://a#Z\n", "o.tsv"),
               ParseError);
}

TEST(OntologyTest, CycleIsRejectedAndNamed) {
  try {
    Ontology::from_edges({{"http://a#A", "http://a#B"},
                          {"http://a#B", "http://a#C"},
                          {"http://a#C", "http://a#A"},
                          {"http://a#D", "http://a#A"}});
    FAIL();
  } catch (const CycleError& e) {
    std::string msg = e.what();
    for (const char* c : {"#A", "#B", "#C"}) EXPECT_NE(msg.find(c), std::string::npos) << msg;
    EXPECT_EQ(msg.find("#D"), std::string::npos) << msg;
  }
}

TEST(OntologyTest, ReflexiveAxiomIgnoredWithWarning) {
  Ontology o = Ontology::from_edges({{"http://a#A", "http://a#A"}});
  EXPECT_EQ(o.size(), 1u);
  EXPECT_TRUE(o.edges().empty());
  EXPECT_EQ(o.warnings().size(), 1u);
}

TEST(OntologyTest, SniffsFormatByContent) {
  Ontology o = parse_ontology("  \n<rdf:RDF xmlns:rdf='http://www.w3.org/1999/02/22-rdf-syntax-ns#'/>",
                              "x");
  EXPECT_EQ(o.size(), 0u);
  EXPECT_THROW(parse_ontology("<html/>", "x"), ParseError);
  EXPECT_THROW(load_ontology("/no/such/ontology.tsv"), UsageError);
}

// Closure against a depth-first reachability oracle on random DAGs.
TEST(OntologyTest, ClosureMatchesReachability) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng = derive_rng(seed, 0);
    const std::size_t n = 5 + uniform_below(rng, 40);
    std::vector<std::string> iri;
    for (std::size_t i = 0; i < n; ++i) iri.push_back("http://r.example/#c" + std::to_string(1000 + i));
    std::vector<std::vector<std::size_t>> up(n);
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t c = 1; c < n; ++c) {
      for (std::size_t p = 0; p < c; ++p) {
        if (bernoulli(rng, 0.1)) {
          up[c].push_back(p);
          edges.emplace_back(iri[c], iri[p]);
        }
      }
    }
    Ontology o = Ontology::from_edges(edges, iri);
    ASSERT_EQ(o.size(), n);
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<bool> seen(n, false);
      std::vector<std::size_t> stack = up[c];
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        if (seen[v]) continue;
        seen[v] = true;
        for (std::size_t p : up[v]) stack.push_back(p);
      }
      for (std::size_t p = 0; p < n; ++p) {
        ASSERT_EQ(o.is_strict_subclass(iri[c], iri[p]), static_cast<bool>(seen[p]))
            << "seed " << seed << " " << c << " " << p;
      }
      // iri[] is already in sorted order, so indexes coincide.
      std::size_t ancestors = std::count(seen.begin(), seen.end(), true);
      EXPECT_EQ(o.ancestors(c).size(), ancestors);
    }
  }
}

}  // namespace
}  // namespace svcnet
