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

#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "umlprof/error.hpp"
#include "umlprof/profile.hpp"

namespace umlprof {
namespace {

constexpr std::string_view kDecl = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";

std::string with_body(std::string_view body) {
  return std::string(kDecl) +
         "<PROFILE version=\"1.0\"><HEADER><NAME>P</NAME><DISPLAYNAME>P</DISPLAYNAME>"
         "<DESCRIPTION>d</DESCRIPTION></HEADER><BODY><STEREOTYPELIST>" +
         std::string(body) + "</STEREOTYPELIST></BODY></PROFILE>";
}

ErrorKind kind_of(std::string_view doc) {
  try {
    parse_profile(doc);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "document parsed without error";
  return ErrorKind::kInvalidValue;
}

TEST(ParseProfile, PublishedListing) {
  const Profile p = parse_profile(testing::kPublishedListing);
  EXPECT_EQ(p.name, "MedicalImageAnnotation");
  EXPECT_EQ(p.display_name, "MedicalImageAnnotation");
  EXPECT_EQ(p.description, "Medical Image Annotation conceptual modeling");
  EXPECT_EQ(p.version, "1.0");
  ASSERT_EQ(p.stereotypes.size(), 1u);
  const Stereotype& s = p.stereotypes[0];
  EXPECT_EQ(s.name, "MedicalImageAnnotationObject");
  EXPECT_EQ(s.description, "Object view.");
  const std::set<MetaClass> expected = {MetaClass::kUMLAbstractClass,
                                        MetaClass::kUMLAttribute, MetaClass::kUMLPackage,
                                        MetaClass::kUMLSequenceDiagram};
  EXPECT_EQ(s.base_classes, expected);
  EXPECT_FALSE(s.icon);
  EXPECT_TRUE(s.tag_defs.empty());
  EXPECT_TRUE(s.constraints.empty());
  EXPECT_TRUE(lint_profile(p).empty());
}

TEST(ParseProfile, PublishedListingRoundTrips) {
  const Profile p = parse_profile(testing::kPublishedListing);
  const std::string once = serialize_profile(p);
  EXPECT_EQ(parse_profile(once), p);
  EXPECT_EQ(serialize_profile(parse_profile(once)), once);
}

TEST(ParseProfile, UnclosedListingIsMalformed) {
  const std::string_view listing = testing::kPublishedListing;
  const auto cut = listing.find("\n</STEREOTYPELIST>");
  EXPECT_EQ(kind_of(listing.substr(0, cut)), ErrorKind::kXmlMalformed);
}

TEST(ParseProfile, HeaderOnly) {
  const Profile p = parse_profile(testing::kPublishedHeaderOnly);
  EXPECT_EQ(p.name, "MedicalImageAnnotation");
  EXPECT_TRUE(p.stereotypes.empty());
}

TEST(ParseProfile, EmptyStereotypeList) {
  std::vector<Diagnostic> warnings;
  const Profile p = parse_profile(with_body(""), &warnings);
  EXPECT_TRUE(p.stereotypes.empty());
  EXPECT_TRUE(warnings.empty());
  EXPECT_TRUE(lint_profile(p).empty());
}

TEST(ParseProfile, UnknownMetaclassNamesOffender) {
  try {
    parse_profile(with_body(
        "<STEREOTYPE><NAME>W</NAME><BASECLASSES><BASECLASS>UMLWidget</BASECLASS>"
        "</BASECLASSES></STEREOTYPE>"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownMetaclass);
    EXPECT_EQ(e.subject(), "UMLWidget");
    EXPECT_EQ(e.context(), "W");
    EXPECT_NE(std::string(e.what()).find("UMLWidget"), std::string::npos);
  }
}

TEST(ParseProfile, ConstraintSyntaxErrorCarriesNameAndPosition) {
  try {
    parse_profile(with_body(
        "<STEREOTYPE><NAME>S</NAME><BASECLASSES><BASECLASS>UMLClass</BASECLASS>"
        "</BASECLASSES><CONSTRAINTLIST><CONSTRAINT><NAME>c1</NAME>"
        "<EXPR>self.name &lt;&gt;</EXPR></CONSTRAINT></CONSTRAINTLIST></STEREOTYPE>"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConstraintSyntax);
    EXPECT_EQ(e.context(), "c1");
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 13);
  }
}

TEST(ParseProfile, MissingRequiredElements) {
  EXPECT_EQ(kind_of(std::string(kDecl) + "<PROFILE version=\"1.0\"/>"),
            ErrorKind::kMissingElement);
  EXPECT_EQ(kind_of(std::string(kDecl) +
                    "<PROFILE><HEADER><DISPLAYNAME>x</DISPLAYNAME>"
                    "<DESCRIPTION>d</DESCRIPTION></HEADER></PROFILE>"),
            ErrorKind::kMissingElement);
  EXPECT_EQ(kind_of(with_body("<STEREOTYPE><DESCRIPTION>d</DESCRIPTION></STEREOTYPE>")),
            ErrorKind::kMissingElement);
  EXPECT_EQ(kind_of(std::string(kDecl) + "<MODEL name=\"x\"/>"),
            ErrorKind::kMissingElement);
}

TEST(ParseProfile, MalformedInputs) {
  EXPECT_EQ(kind_of(""), ErrorKind::kXmlMalformed);
  EXPECT_EQ(kind_of("<PROFILE>"), ErrorKind::kXmlMalformed);
  EXPECT_EQ(kind_of("not xml"), ErrorKind::kXmlMalformed);
  EXPECT_EQ(kind_of("<!DOCTYPE PROFILE [<!ENTITY x \"y\">]><PROFILE/>"),
            ErrorKind::kXmlMalformed);
}

TEST(ParseProfile, UnknownElementsWarn) {
  std::vector<Diagnostic> warnings;
  const Profile p = parse_profile(
      with_body("<STEREOTYPE><NAME>S</NAME><BASECLASSES><BASECLASS>UMLClass</BASECLASS>"
                "</BASECLASSES><COLOR>red</COLOR></STEREOTYPE><EXTRA/>"),
      &warnings);
  ASSERT_EQ(p.stereotypes.size(), 1u);
  ASSERT_EQ(warnings.size(), 2u);
  for (const auto& w : warnings) {
    EXPECT_EQ(w.code, "W001");
    EXPECT_EQ(w.severity(), Severity::kWarning);
  }
}

TEST(ParseProfile, OptionalSections) {
  const Profile p = parse_profile(with_body(
      "<STEREOTYPE><NAME>S</NAME><DESCRIPTION> spaced </DESCRIPTION>"
      "<BASECLASSES><BASECLASS>UMLClass</BASECLASS><BASECLASS>UMLObject</BASECLASS>"
      "</BASECLASSES><ICON>s16</ICON><TAGDEFINITIONLIST><TAGDEFINITION><NAME>k</NAME>"
      "<TYPE>enum</TYPE><DEFAULT>b</DEFAULT><CHOICES><CHOICE>a</CHOICE><CHOICE>b</CHOICE>"
      "</CHOICES></TAGDEFINITION></TAGDEFINITIONLIST><CONSTRAINTLIST><CONSTRAINT>"
      "<NAME>c</NAME><EXPR>self.name = 'x'</EXPR></CONSTRAINT></CONSTRAINTLIST>"
      "</STEREOTYPE>"));
  ASSERT_EQ(p.stereotypes.size(), 1u);
  const Stereotype& s = p.stereotypes[0];
  EXPECT_EQ(s.description, "spaced");
  EXPECT_EQ(s.icon, "s16");
  ASSERT_EQ(s.tag_defs.size(), 1u);
  EXPECT_EQ(s.tag_defs[0].type, TagType::kEnum);
  EXPECT_EQ(s.tag_defs[0].choices, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(s.tag_defs[0].default_value, "b");
  ASSERT_EQ(s.constraints.size(), 1u);
  EXPECT_EQ(s.constraints[0].compiled, parse_constraint("self.name = 'x'"));
}

TEST(SerializeProfile, EmptyStereotypeListElement) {
  Profile p;
  p.name = "P";
  const std::string xml = serialize_profile(p);
  EXPECT_EQ(xml.rfind(kDecl, 0), 0u);
  EXPECT_NE(xml.find("<STEREOTYPELIST/>"), std::string::npos);
  EXPECT_NE(xml.find("<PROFILE version=\"1.0\">"), std::string::npos);
  EXPECT_EQ(parse_profile(xml), p);
}

TEST(SerializeProfile, HeaderOrderAndIndent) {
  const std::string xml = serialize_profile(parse_profile(testing::kPublishedListing));
  const auto name = xml.find("    <NAME>MedicalImageAnnotation</NAME>");
  const auto display = xml.find("<DISPLAYNAME>");
  const auto desc = xml.find("<DESCRIPTION>");
  ASSERT_NE(name, std::string::npos);
  EXPECT_LT(name, display);
  EXPECT_LT(display, desc);
  EXPECT_NE(xml.find("\n  <HEADER>\n"), std::string::npos);
}

TEST(SerializeProfile, RandomProfilesRoundTrip) {
  testing::Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const Profile p = testing::random_profile(rng);
    const std::string once = serialize_profile(p);
    const Profile back = parse_profile(once);
    ASSERT_EQ(back, p) << once;
    ASSERT_EQ(serialize_profile(back), once);
  }
}

TEST(SerializeProfile, GeneratedProfilesLintClean) {
  testing::Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const Profile p = testing::random_profile(rng);
    EXPECT_TRUE(lint_profile(p).empty()) << serialize_profile(p);
  }
}

Stereotype basic(std::string name) {
  Stereotype s;
  s.name = std::move(name);
  s.base_classes = {MetaClass::kUMLClass};
  return s;
}

TEST(LintProfile, DuplicateStereotype) {
  Profile p;
  p.name = "P";
  p.stereotypes = {basic("Annotation"), basic("Annotation")};
  const auto d = lint_profile(p);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "E101");
  EXPECT_EQ(d[0].element, "Annotation");
}

TEST(LintProfile, EachRule) {
  Profile p;
  p.name = "P";
  Stereotype empty = basic("Empty");
  empty.base_classes.clear();
  Stereotype tags = basic("Tags");
  tags.tag_defs = {{"t", TagType::kInt, {}, std::nullopt},
                   {"t", TagType::kString, {}, std::nullopt},
                   {"e", TagType::kEnum, {"a"}, std::string("z")},
                   {"i", TagType::kInt, {}, std::string("x")},
                   {"n", TagType::kEnum, {}, std::nullopt}};
  Stereotype cons = basic("Cons");
  cons.constraints = {make_constraint("c", "true"), make_constraint("c", "false")};
  p.stereotypes = {empty, tags, cons};
  std::multiset<std::string> codes;
  for (const auto& d : lint_profile(p)) codes.insert(d.code);
  EXPECT_EQ(codes, (std::multiset<std::string>{"E103", "E104", "E105", "E107",
                                               "E108", "E106"}));
}

TEST(LintProfile, EmptyProfileClean) {
  Profile p;
  p.name = "P";
  EXPECT_TRUE(lint_profile(p).empty());
}

TEST(TagValues, Conformance) {
  const TagDefinition i{"i", TagType::kInt, {}, std::nullopt};
  EXPECT_TRUE(tag_value_conforms(i, "3"));
  EXPECT_TRUE(tag_value_conforms(i, "-3"));
  EXPECT_FALSE(tag_value_conforms(i, "three"));
  EXPECT_FALSE(tag_value_conforms(i, "3.0"));
  EXPECT_FALSE(tag_value_conforms(i, ""));
  EXPECT_FALSE(tag_value_conforms(i, "99999999999999999999"));
  const TagDefinition r{"r", TagType::kReal, {}, std::nullopt};
  EXPECT_TRUE(tag_value_conforms(r, "2.5"));
  EXPECT_TRUE(tag_value_conforms(r, "7"));
  EXPECT_FALSE(tag_value_conforms(r, "inf"));
  EXPECT_FALSE(tag_value_conforms(r, "1e999"));
  const TagDefinition b{"b", TagType::kBool, {}, std::nullopt};
  EXPECT_TRUE(tag_value_conforms(b, "true"));
  EXPECT_FALSE(tag_value_conforms(b, "True"));
  const TagDefinition e{"e", TagType::kEnum, {"CT", "MRI"}, std::nullopt};
  EXPECT_TRUE(tag_value_conforms(e, "MRI"));
  EXPECT_FALSE(tag_value_conforms(e, "mri"));
  const TagDefinition s{"s", TagType::kString, {}, std::nullopt};
  EXPECT_TRUE(tag_value_conforms(s, ""));
}

}  // namespace
}  // namespace umlprof
