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

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "umlprof/diagnostic.hpp"
#include "umlprof/metamodel.hpp"
#include "umlprof/profile.hpp"

namespace umlprof {

struct StereotypeApplication {
  std::string profile;
  std::string stereotype;
  std::map<std::string, std::string> tags;  // raw literals, coerced later

  bool operator==(const StereotypeApplication&) const = default;
};

struct Attribute {
  std::string name;
  std::string type;

  bool operator==(const Attribute&) const = default;
};

struct ModelElement {
  std::string id;
  MetaClass metaclass = MetaClass::kUMLClass;
  std::string name;
  std::optional<std::string> owner;
  std::vector<Attribute> attributes;
  std::vector<StereotypeApplication> applications;

  bool operator==(const ModelElement&) const = default;
};

// `INT | INT..INT | INT..* | *`; the empty string means "unspecified".
bool is_valid_multiplicity(std::string_view text);

struct Association {
  std::string id;
  std::string source;
  std::string target;
  std::string source_role;
  std::string target_role;
  std::string source_mult;
  std::string target_mult;
  std::vector<StereotypeApplication> applications;

  bool operator==(const Association&) const = default;
};

enum class DiagramKind { kClass, kSequence };
enum class MessageKind { kCall, kReturn };

std::string_view to_string(DiagramKind k);
std::string_view to_string(MessageKind k);

struct Message {
  std::int64_t seq = 1;
  std::string from;
  std::string to;
  std::string label;
  MessageKind kind = MessageKind::kCall;

  bool operator==(const Message&) const = default;
};

struct Diagram {
  std::string id;
  DiagramKind kind = DiagramKind::kClass;
  std::vector<std::string> members;    // class diagrams
  std::vector<std::string> lifelines;  // sequence diagrams
  std::vector<Message> messages;       // sequence diagrams

  bool operator==(const Diagram&) const = default;
};

struct ModelDocument {
  std::string name;
  std::vector<std::string> imports;
  std::vector<ModelElement> elements;
  std::vector<Association> associations;
  std::vector<Diagram> diagrams;

  const ModelElement* find_element(std::string_view id) const;
  const Association* find_association(std::string_view id) const;
  const Diagram* find_diagram(std::string_view id) const;

  bool operator==(const ModelDocument&) const = default;
};

// Structural parse only. Dangling references are left for the validator's
// E5xx rules so partial models stay inspectable.
ModelDocument parse_model(std::string_view document,
                          std::vector<Diagnostic>* warnings = nullptr);

std::string serialize_model(const ModelDocument& model);

// Profiles keyed by name; std::map keeps resolution independent of the
// order profiles were registered in.
using ProfileRegistry = std::map<std::string, Profile, std::less<>>;

// One stereotype application on an element or association, bound (or not)
// to its definition.
struct ApplicationSite {
  std::string owner_id;
  MetaClass owner_metaclass;
  const StereotypeApplication* application;
  const Stereotype* stereotype;  // null when resolution failed
};

// A model with every stereotype application bound to its definition.
// Copies share one immutable state block.
class ResolvedModel {
 public:
  const ModelDocument& document() const { return state_->document; }
  const ProfileRegistry& profiles() const { return state_->profiles; }
  const std::vector<ApplicationSite>& sites() const { return state_->sites; }

  // E102 findings recorded during resolution.
  const std::vector<Diagnostic>& diagnostics() const {
    return state_->diagnostics;
  }

  const ModelElement* element(std::string_view id) const;
  const Association* association(std::string_view id) const;
  bool contains(std::string_view id) const {
    return element(id) != nullptr || association(id) != nullptr;
  }

  // Applications on the element or association with this id, in order.
  std::vector<const ApplicationSite*> sites_of(std::string_view id) const;

  // Elements reachable from `id` over associations whose far-end role is
  // `role`, ascending by reached id.
  std::vector<std::string> navigate(std::string_view id,
                                    std::string_view role) const;

 private:
  friend ResolvedModel resolve(ModelDocument model,
                               const ProfileRegistry& registry);

  ResolvedModel() = default;

  struct State {
    ModelDocument document;
    ProfileRegistry profiles;
    std::vector<ApplicationSite> sites;
    std::vector<Diagnostic> diagnostics;
    std::map<std::string, std::size_t, std::less<>> element_index;
    std::map<std::string, std::size_t, std::less<>> association_index;
    // (from id, role) -> reached ids, sorted
    std::map<std::pair<std::string, std::string>, std::vector<std::string>,
             std::less<>>
        navigation;
  };

  std::shared_ptr<const State> state_;
};

// Total: failures become E102 diagnostics on the result.
ResolvedModel resolve(ModelDocument model, const ProfileRegistry& registry);

ProfileRegistry make_registry(std::vector<Profile> profiles);

}  // namespace umlprof
