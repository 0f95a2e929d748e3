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

#include "umlprof/metamodel.hpp"

#include <stdexcept>
#include <string>

#include "umlprof/error.hpp"

namespace umlprof {

namespace {

constexpr std::array<std::string_view, kMetaClassCount> kNames = {
    "UMLClass",        "UMLAbstractClass", "UMLAttribute",
    "UMLOperation",    "UMLPackage",       "UMLAssociation",
    "UMLObject",       "UMLMessage",       "UMLLifeline",
    "UMLClassDiagram", "UMLSequenceDiagram",
};

constexpr MetaClassEdge kStandardEdges[] = {
    {MetaClass::kUMLClass, MetaClass::kUMLAbstractClass},
};

}  // namespace

std::string_view to_string(MetaClass m) {
  return kNames[static_cast<std::size_t>(m)];
}

std::optional<MetaClass> try_parse_metaclass(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<MetaClass>(i);
  }
  return std::nullopt;
}

MetaClass parse_metaclass(std::string_view name) {
  if (auto m = try_parse_metaclass(name)) return *m;
  throw Error(ErrorKind::kUnknownMetaclass,
              "unknown metaclass '" + std::string(name) + "'")
      .with_subject(std::string(name));
}

ConformanceTable::ConformanceTable(std::span<const MetaClassEdge> edges)
    : edges_(edges.begin(), edges.end()) {
  for (std::size_t i = 0; i < kMetaClassCount; ++i) closure_[i].set(i);
  for (const auto& [sub, super] : edges_) closure_[index(sub)].set(index(super));
  // Warshall
  for (std::size_t k = 0; k < kMetaClassCount; ++k) {
    for (std::size_t i = 0; i < kMetaClassCount; ++i) {
      if (closure_[i][k]) closure_[i] |= closure_[k];
    }
  }
  for (std::size_t i = 0; i < kMetaClassCount; ++i) {
    for (std::size_t j = i + 1; j < kMetaClassCount; ++j) {
      if (closure_[i][j] && closure_[j][i]) {
        throw std::invalid_argument(
            "metaclass generalization cycle through " +
            std::string(kNames[i]) + " and " + std::string(kNames[j]));
      }
    }
  }
}

const ConformanceTable& ConformanceTable::standard() {
  static const ConformanceTable table{kStandardEdges};
  return table;
}

std::string_view to_string(ElementProperty p) {
  switch (p) {
    case ElementProperty::kName:
      return "name";
    case ElementProperty::kMetaclass:
      return "metaclass";
    case ElementProperty::kAttributes:
      return "attributes";
    case ElementProperty::kStereotypes:
      return "stereotypes";
  }
  return "";
}

std::optional<ElementProperty> try_parse_property(std::string_view name) {
  if (name == "name") return ElementProperty::kName;
  if (name == "metaclass") return ElementProperty::kMetaclass;
  if (name == "attributes") return ElementProperty::kAttributes;
  if (name == "stereotypes") return ElementProperty::kStereotypes;
  return std::nullopt;
}

}  // namespace umlprof
