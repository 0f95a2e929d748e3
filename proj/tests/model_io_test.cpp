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
#include <random>
#include <string>
#include <vector>

#include "generators.hpp"
#include "umlprof/corpus.hpp"
#include "umlprof/error.hpp"
#include "umlprof/model.hpp"

namespace umlprof {
namespace {

constexpr std::string_view kDecl = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";

ErrorKind kind_of(const std::string& doc) {
  try {
    parse_model(doc);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "document parsed without error";
  return ErrorKind::kXmlMalformed;
}

std::string model_with(std::string_view elements, std::string_view rest = "") {
  return std::string(kDecl) + "<MODEL name=\"m\"><ELEMENTS>" + std::string(elements) +
         "</ELEMENTS>" + std::string(rest) + "</MODEL>";
}

TEST(ParseModel, Minimal) {
  const ModelDocument m = parse_model(std::string(kDecl) + "<MODEL name=\"x\"/>");
  EXPECT_EQ(m.name, "x");
  EXPECT_TRUE(m.elements.empty());
  EXPECT_TRUE(m.imports.empty());
  EXPECT_TRUE(m.associations.empty());
  EXPECT_TRUE(m.diagrams.empty());
}

TEST(ParseModel, CorpusClassModel) {
  const ModelDocument m = parse_model(serialize_model(corpus::builtin_class_model()));
  ASSERT_EQ(m.elements.size(), 5u);
  std::vector<std::string> names;
  for (const auto& e : m.elements) {
    EXPECT_EQ(e.metaclass, MetaClass::kUMLClass);
    names.push_back(e.name);
  }
  EXPECT_EQ(names, (std::vector<std::string>{"Annotation", "MedicalImage", "Annotator",
                                             "Patient", "KeyWords"}));
}

TEST(ParseModel, DuplicateId) {
  EXPECT_EQ(kind_of(model_with("<ELEMENT id=\"e1\" metaclass=\"UMLClass\"/>"
                               "<ELEMENT id=\"e1\" metaclass=\"UMLClass\"/>")),
            ErrorKind::kDuplicateId);
  EXPECT_EQ(kind_of(model_with("<ELEMENT id=\"e1\" metaclass=\"UMLClass\"/>",
                               "<DIAGRAMS><DIAGRAM id=\"e1\" kind=\"class\"/></DIAGRAMS>")),
            ErrorKind::kDuplicateId);
}

TEST(ParseModel, StructuralErrors) {
  EXPECT_EQ(kind_of(model_with("<ELEMENT id=\"e1\" metaclass=\"UMLWidget\"/>")),
            ErrorKind::kUnknownMetaclass);
  EXPECT_EQ(kind_of(model_with("<ELEMENT metaclass=\"UMLClass\"/>")),
            ErrorKind::kMissingElement);
  EXPECT_EQ(kind_of(model_with("<ELEMENT id=\"e1\" metaclass=\"UMLClass\">"
                               "<ATTRIBUTE name=\"a\"/><ATTRIBUTE name=\"a\"/></ELEMENT>")),
            ErrorKind::kInvalidValue);
  EXPECT_EQ(kind_of(model_with("", "<ASSOCIATIONS><ASSOCIATION id=\"a\" source=\"x\" "
                                   "target=\"y\" sourceMult=\"1..\"/></ASSOCIATIONS>")),
            ErrorKind::kInvalidValue);
  EXPECT_EQ(kind_of(model_with("", "<DIAGRAMS><DIAGRAM id=\"d\" kind=\"state\"/></DIAGRAMS>")),
            ErrorKind::kInvalidValue);
  EXPECT_EQ(kind_of(model_with("", "<DIAGRAMS><DIAGRAM id=\"d\" kind=\"class\">"
                                   "<LIFELINE ref=\"x\"/></DIAGRAM></DIAGRAMS>")),
            ErrorKind::kInvalidValue);
  EXPECT_EQ(kind_of(model_with("", "<DIAGRAMS><DIAGRAM id=\"d\" kind=\"sequence\">"
                                   "<MESSAGE seq=\"0\" from=\"a\" to=\"b\"/></DIAGRAM>"
                                   "</DIAGRAMS>")),
            ErrorKind::kInvalidValue);
  EXPECT_EQ(kind_of(std::string(kDecl) + "<PROFILE/>"), ErrorKind::kMissingElement);
  EXPECT_EQ(kind_of("<MODEL"), ErrorKind::kXmlMalformed);
}

TEST(ParseModel, UnknownElementsWarn) {
  std::vector<Diagnostic> warnings;
  parse_model(model_with("<ELEMENT id=\"e1\" metaclass=\"UMLClass\"><NOTE/></ELEMENT>",
                         "<LAYOUT/>"),
              &warnings);
  ASSERT_EQ(warnings.size(), 2u);
  EXPECT_EQ(warnings[0].code, "W001");
}

TEST(Multiplicity, Grammar) {
  for (auto ok : {"", "*", "0", "1", "12", "0..1", "1..*", "2..5"}) {
    EXPECT_TRUE(is_valid_multiplicity(ok)) << ok;
  }
  for (auto bad : {"-1", "1..", "..1", "a", "1..2..3", "*..1", " 1", "1 ..2"}) {
    EXPECT_FALSE(is_valid_multiplicity(bad)) << bad;
  }
}

TEST(SerializeModel, EmptyDocument) {
  const std::string xml = serialize_model(ModelDocument{});
  EXPECT_NE(xml.find("<ELEMENTS/>"), std::string::npos);
  EXPECT_EQ(parse_model(xml), ModelDocument{});
}

TEST(SerializeModel, RandomModelsRoundTrip) {
  testing::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const ModelDocument m = testing::random_model(rng);
    const std::string once = serialize_model(m);
    const ModelDocument back = parse_model(once);
    ASSERT_EQ(back, m) << once;
    ASSERT_EQ(serialize_model(back), once);
    ASSERT_EQ(back.elements.size(), m.elements.size());
    std::size_t msgs = 0, back_msgs = 0;
    for (const auto& d : m.diagrams) msgs += d.messages.size();
    for (const auto& d : back.diagrams) back_msgs += d.messages.size();
    ASSERT_EQ(msgs, back_msgs);
  }
}

TEST(Resolve, CorpusAllBound) {
  const auto rm = resolve(corpus::builtin_class_model(),
                          make_registry({corpus::builtin_profile()}));
  EXPECT_TRUE(rm.diagnostics().empty());
  EXPECT_FALSE(rm.sites().empty());
  for (const auto& site : rm.sites()) EXPECT_NE(site.stereotype, nullptr);
}

TEST(Resolve, MissingProfile) {
  ModelDocument m;
  m.imports = {"NoSuchProfile"};
  const auto rm = resolve(m, {});
  ASSERT_EQ(rm.diagnostics().size(), 1u);
  EXPECT_EQ(rm.diagnostics()[0].code, "E102");
}

TEST(Resolve, UnresolvedApplications) {
  ModelDocument m;
  m.imports = {"P"};
  ModelElement e{"e1", MetaClass::kUMLClass, "E", std::nullopt, {}, {}};
  e.applications = {{"P", "Nope", {}}, {"Q", "S", {}}};
  m.elements = {e};
  Profile p;
  p.name = "P";
  const auto rm = resolve(m, make_registry({p}));
  ASSERT_EQ(rm.diagnostics().size(), 2u);
  for (const auto& d : rm.diagnostics()) {
    EXPECT_EQ(d.code, "E102");
    EXPECT_EQ(d.element, "e1");
  }
  for (const auto& site : rm.sites()) EXPECT_EQ(site.stereotype, nullptr);
}

TEST(Resolve, EmptyModel) {
  const auto rm = resolve(ModelDocument{}, {});
  EXPECT_TRUE(rm.diagnostics().empty());
  EXPECT_TRUE(rm.sites().empty());
}

TEST(Resolve, RegistryOrderIndependent) {
  testing::Rng rng(12);
  for (int i = 0; i < 30; ++i) {
    std::vector<Profile> profiles;
    for (int k = 0; k < 4; ++k) profiles.push_back(testing::random_profile(rng));
    ModelDocument m = testing::random_model(rng);
    m.imports.clear();
    for (const auto& p : profiles) m.imports.push_back(p.name);
    // Point some applications at real stereotypes.
    for (auto& e : m.elements) {
      for (auto& a : e.applications) {
        const Profile& p = profiles[rng() % profiles.size()];
        a.profile = p.name;
        if (!p.stereotypes.empty()) a.stereotype = p.stereotypes[rng() % p.stereotypes.size()].name;
      }
    }
    const auto first = resolve(m, make_registry(profiles));
    std::reverse(profiles.begin(), profiles.end());
    const auto second = resolve(m, make_registry(profiles));
    ASSERT_EQ(first.diagnostics(), second.diagnostics());
    ASSERT_EQ(first.sites().size(), second.sites().size());
    for (std::size_t k = 0; k < first.sites().size(); ++k) {
      const auto& a = first.sites()[k];
      const auto& b = second.sites()[k];
      ASSERT_EQ(a.owner_id, b.owner_id);
      ASSERT_EQ(a.stereotype == nullptr, b.stereotype == nullptr);
      if (a.stereotype) ASSERT_EQ(*a.stereotype, *b.stereotype);
    }
  }
}

TEST(Resolve, NavigationByFarEndRole) {
  const auto rm = resolve(corpus::builtin_class_model(),
                          make_registry({corpus::builtin_profile()}));
  EXPECT_EQ(rm.navigate("e1", "keywords"), std::vector<std::string>{"e5"});
  EXPECT_EQ(rm.navigate("e1", "image"), std::vector<std::string>{"e2"});
  EXPECT_EQ(rm.navigate("e2", "annotations"), std::vector<std::string>{"e1"});
  EXPECT_TRUE(rm.navigate("e1", "annotations").empty());
  EXPECT_TRUE(rm.navigate("e4", "nothing").empty());
}

TEST(Resolve, CopiesShareState) {
  const auto rm = resolve(corpus::builtin_class_model(), {});
  const ResolvedModel copy = rm;
  EXPECT_EQ(&copy.document(), &rm.document());
}

}  // namespace
}  // namespace umlprof
