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

#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "umlprof/constraint.hpp"
#include "umlprof/diagnostic.hpp"
#include "umlprof/metamodel.hpp"

namespace umlprof {

enum class TagType { kString, kInt, kReal, kBool, kEnum };

std::string_view to_string(TagType t);
std::optional<TagType> try_parse_tag_type(std::string_view name);

struct TagDefinition {
  std::string name;
  TagType type = TagType::kString;
  std::vector<std::string> choices;  // nonempty iff type == kEnum
  std::optional<std::string> default_value;

  bool operator==(const TagDefinition&) const = default;
};

// True when `literal` is a well-formed value of the tag's declared type.
bool tag_value_conforms(const TagDefinition& def, std::string_view literal);

struct ConstraintDef {
  std::string name;
  std::string source_text;
  ConstraintAst compiled;

  bool operator==(const ConstraintDef&) const = default;
};

// Compiles `source` and packages it; propagates parse_constraint errors.
ConstraintDef make_constraint(std::string name, std::string source);

struct Stereotype {
  std::string name;
  std::string description;
  std::set<MetaClass> base_classes;
  std::optional<std::string> icon;
  std::vector<TagDefinition> tag_defs;
  std::vector<ConstraintDef> constraints;

  const TagDefinition* find_tag(std::string_view tag) const;

  bool operator==(const Stereotype&) const = default;
};

struct Profile {
  std::string name;
  std::string display_name;
  std::string description;
  std::string version = "1.0";
  std::vector<Stereotype> stereotypes;

  // First stereotype with this name; duplicates are a lint finding.
  const Stereotype* find(std::string_view stereotype) const;

  bool operator==(const Profile&) const = default;
};

// Reads the StarUML profile XML dialect (plus our optional ICON,
// TAGDEFINITIONLIST and CONSTRAINTLIST sections). Unknown elements inside
// known containers are skipped and reported as W001 into `warnings`.
Profile parse_profile(std::string_view document,
                      std::vector<Diagnostic>* warnings = nullptr);

std::string serialize_profile(const Profile& profile);

std::vector<Diagnostic> lint_profile(const Profile& profile);

}  // namespace umlprof
