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

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace umlprof {

// The closed set of UML-lite metaclasses. Spellings follow StarUML's
// BASECLASS vocabulary and are case-sensitive.
enum class MetaClass : std::uint8_t {
  kUMLClass,
  kUMLAbstractClass,
  kUMLAttribute,
  kUMLOperation,
  kUMLPackage,
  kUMLAssociation,
  kUMLObject,
  kUMLMessage,
  kUMLLifeline,
  kUMLClassDiagram,
  kUMLSequenceDiagram,
};

inline constexpr std::size_t kMetaClassCount = 11;

inline constexpr std::array<MetaClass, kMetaClassCount> kAllMetaClasses = {
    MetaClass::kUMLClass,        MetaClass::kUMLAbstractClass,
    MetaClass::kUMLAttribute,    MetaClass::kUMLOperation,
    MetaClass::kUMLPackage,      MetaClass::kUMLAssociation,
    MetaClass::kUMLObject,       MetaClass::kUMLMessage,
    MetaClass::kUMLLifeline,     MetaClass::kUMLClassDiagram,
    MetaClass::kUMLSequenceDiagram,
};

std::string_view to_string(MetaClass m);

// Throws Error{kUnknownMetaclass} carrying the offending spelling.
MetaClass parse_metaclass(std::string_view name);
std::optional<MetaClass> try_parse_metaclass(std::string_view name);

using MetaClassEdge = std::pair<MetaClass, MetaClass>;  // (sub, super)

// Reflexive-transitive closure of a declared generalization edge list.
// Construction rejects cyclic edge sets with std::invalid_argument.
class ConformanceTable {
 public:
  explicit ConformanceTable(std::span<const MetaClassEdge> edges);

  // {UMLClass ⊑ UMLAbstractClass}; everything else conforms only to itself.
  static const ConformanceTable& standard();

  bool conforms_to(MetaClass sub, MetaClass base) const {
    return closure_[index(sub)][index(base)];
  }

  const std::vector<MetaClassEdge>& declared_edges() const { return edges_; }

 private:
  static std::size_t index(MetaClass m) { return static_cast<std::size_t>(m); }

  std::vector<MetaClassEdge> edges_;
  std::array<std::bitset<kMetaClassCount>, kMetaClassCount> closure_{};
};

inline bool conforms_to(MetaClass sub, MetaClass base,
                        const ConformanceTable& table) {
  return table.conforms_to(sub, base);
}

inline bool conforms_to(MetaClass sub, MetaClass base) {
  return ConformanceTable::standard().conforms_to(sub, base);
}

// Element properties readable from constraint expressions.
enum class ElementProperty : std::uint8_t {
  kName,
  kMetaclass,
  kAttributes,
  kStereotypes,
};

std::string_view to_string(ElementProperty p);
std::optional<ElementProperty> try_parse_property(std::string_view name);

}  // namespace umlprof
