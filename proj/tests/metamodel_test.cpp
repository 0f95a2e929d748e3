// Copyright 2026 The umlprof Authors
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


#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "test_util.hpp"
#include "umlprof/error.hpp"
#include "umlprof/metamodel.hpp"

namespace umlprof {
namespace {

using testing::reaches;
using testing::reference_edges;

TEST(MetaClassNames, ClosedSetRoundTrips) {
  std::set<std::string_view> names;
  for (MetaClass m : kAllMetaClasses) {
    names.insert(to_string(m));
    EXPECT_EQ(parse_metaclass(to_string(m)), m);
  }
  EXPECT_EQ(names.size(), 11u);
  const std::set<std::string_view> expected = {
      "UMLClass",  "UMLAbstractClass", "UMLAttribute",    "UMLOperation",
      "UMLPackage", "UMLAssociation",  "UMLObject",       "UMLMessage",
      "UMLLifeline", "UMLClassDiagram", "UMLSequenceDiagram"};
  EXPECT_EQ(names, expected);
}

TEST(MetaClassNames, ListingSpellings) {
  EXPECT_EQ(parse_metaclass("UMLAttribute"), MetaClass::kUMLAttribute);
  EXPECT_EQ(parse_metaclass("UMLClass"), MetaClass::kUMLClass);
  EXPECT_EQ(parse_metaclass("UMLAbstractClass"), MetaClass::kUMLAbstractClass);
  EXPECT_EQ(parse_metaclass("UMLSequenceDiagram"), MetaClass::kUMLSequenceDiagram);
}

TEST(MetaClassNames, CaseSensitive) {
  try {
    parse_metaclass("umlclass");
    FAIL() << "expected unknown-metaclass";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownMetaclass);
    EXPECT_EQ(e.subject(), "umlclass");
  }
  EXPECT_FALSE(try_parse_metaclass("UMLCLASS"));
  EXPECT_FALSE(try_parse_metaclass(" UMLClass"));
  EXPECT_FALSE(try_parse_metaclass(""));
}

TEST(Conformance, Examples) {
  EXPECT_TRUE(conforms_to(MetaClass::kUMLClass, MetaClass::kUMLClass));
  EXPECT_TRUE(conforms_to(MetaClass::kUMLClass, MetaClass::kUMLAbstractClass));
  EXPECT_FALSE(conforms_to(MetaClass::kUMLPackage, MetaClass::kUMLAbstractClass));
  EXPECT_FALSE(conforms_to(MetaClass::kUMLAbstractClass, MetaClass::kUMLClass));
  EXPECT_FALSE(conforms_to(MetaClass::kUMLObject, MetaClass::kUMLAbstractClass));
}

TEST(Conformance, StandardMatchesSearchOracle) {
  for (MetaClass a : kAllMetaClasses) {
    for (MetaClass b : kAllMetaClasses) {
      EXPECT_EQ(conforms_to(a, b), reaches(a, b, reference_edges()))
          << to_string(a) << " <= " << to_string(b);
    }
  }
}

TEST(Conformance, ReflexiveAndTransitive) {
  const auto& t = ConformanceTable::standard();
  for (MetaClass a : kAllMetaClasses) {
    EXPECT_TRUE(t.conforms_to(a, a));
    for (MetaClass b : kAllMetaClasses) {
      for (MetaClass c : kAllMetaClasses) {
        if (t.conforms_to(a, b) && t.conforms_to(b, c)) {
          EXPECT_TRUE(t.conforms_to(a, c));
        }
      }
    }
  }
}

TEST(Conformance, AntisymmetricOffDiagonal) {
  const auto& t = ConformanceTable::standard();
  for (MetaClass a : kAllMetaClasses) {
    for (MetaClass b : kAllMetaClasses) {
      if (a != b) EXPECT_FALSE(t.conforms_to(a, b) && t.conforms_to(b, a));
    }
  }
}

TEST(Conformance, ChainClosure) {
  const std::array<MetaClassEdge, 2> edges = {
      MetaClassEdge{MetaClass::kUMLClass, MetaClass::kUMLAbstractClass},
      MetaClassEdge{MetaClass::kUMLAbstractClass, MetaClass::kUMLPackage}};
  ConformanceTable t(edges);
  EXPECT_TRUE(t.conforms_to(MetaClass::kUMLClass, MetaClass::kUMLPackage));
  EXPECT_FALSE(t.conforms_to(MetaClass::kUMLPackage, MetaClass::kUMLClass));
}

TEST(Conformance, RejectsCycles) {
  const std::array<MetaClassEdge, 3> edges = {
      MetaClassEdge{MetaClass::kUMLClass, MetaClass::kUMLAbstractClass},
      MetaClassEdge{MetaClass::kUMLAbstractClass, MetaClass::kUMLPackage},
      MetaClassEdge{MetaClass::kUMLPackage, MetaClass::kUMLClass}};
  EXPECT_THROW(ConformanceTable{edges}, std::invalid_argument);
}

// Random acyclic edge sets (edges only go from lower to higher index, then
// the indices are permuted) against the search oracle.
TEST(Conformance, RandomDagsMatchSearchOracle) {
  std::mt19937_64 rng(20261015);
  for (int round = 0; round < 200; ++round) {
    std::array<MetaClass, kMetaClassCount> order = kAllMetaClasses;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<MetaClassEdge> edges;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        if (std::bernoulli_distribution(0.12)(rng)) edges.emplace_back(order[i], order[j]);
      }
    }
    ConformanceTable t(edges);
    for (MetaClass a : kAllMetaClasses) {
      for (MetaClass b : kAllMetaClasses) {
        ASSERT_EQ(t.conforms_to(a, b), reaches(a, b, edges));
      }
    }
  }
}

TEST(ElementProperties, Names) {
  EXPECT_EQ(try_parse_property("name"), ElementProperty::kName);
  EXPECT_EQ(try_parse_property("metaclass"), ElementProperty::kMetaclass);
  EXPECT_EQ(try_parse_property("attributes"), ElementProperty::kAttributes);
  EXPECT_EQ(try_parse_property("stereotypes"), ElementProperty::kStereotypes);
  EXPECT_FALSE(try_parse_property("keywords"));
}

}  // namespace
}  // namespace umlprof
