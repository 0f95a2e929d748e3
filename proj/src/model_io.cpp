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

#include <algorithm>
#include <charconv>
#include <set>
#include <string>
#include <utility>

#include "umlprof/error.hpp"
#include "umlprof/model.hpp"
#include "xml.hpp"

namespace umlprof {

std::string_view to_string(DiagramKind k) {
  return k == DiagramKind::kClass ? "class" : "sequence";
}

std::string_view to_string(MessageKind k) {
  return k == MessageKind::kCall ? "call" : "return";
}

bool is_valid_multiplicity(std::string_view text) {
  if (text.empty() || text == "*") return true;
  auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) return all_digits(text);
  const std::string_view lower = text.substr(0, dots);
  const std::string_view upper = text.substr(dots + 2);
  return all_digits(lower) && (upper == "*" || all_digits(upper));
}

const ModelElement* ModelDocument::find_element(std::string_view id) const {
  for (const auto& e : elements) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const Association* ModelDocument::find_association(std::string_view id) const {
  for (const auto& a : associations) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

const Diagram* ModelDocument::find_diagram(std::string_view id) const {
  for (const auto& d : diagrams) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

namespace {

class ModelReader {
 public:
  explicit ModelReader(std::vector<Diagnostic>* warnings) : warnings_(warnings) {}

  ModelDocument read(const xml::Node& root) {
    if (root.name != "MODEL") {
      throw Error(ErrorKind::kMissingElement,
                  "expected root element MODEL, found " + root.name)
          .at(root.line, root.column)
          .with_subject(root.name);
    }
    ModelDocument m;
    m.name = std::string(root.attribute("name").value_or(""));
    for (const auto& c : root.children) {
      if (c.name == "IMPORTS") {
        for (const auto& i : c.children) {
          if (i.name == "IMPORT") {
            m.imports.emplace_back(required(i, "profile"));
          } else {
            unknown("IMPORTS", i);
          }
        }
      } else if (c.name == "ELEMENTS") {
        for (const auto& e : c.children) {
          if (e.name == "ELEMENT") {
            m.elements.push_back(read_element(e));
          } else {
            unknown("ELEMENTS", e);
          }
        }
      } else if (c.name == "ASSOCIATIONS") {
        for (const auto& a : c.children) {
          if (a.name == "ASSOCIATION") {
            m.associations.push_back(read_association(a));
          } else {
            unknown("ASSOCIATIONS", a);
          }
        }
      } else if (c.name == "DIAGRAMS") {
        for (const auto& d : c.children) {
          if (d.name == "DIAGRAM") {
            m.diagrams.push_back(read_diagram(d));
          } else {
            unknown("DIAGRAMS", d);
          }
        }
      } else {
        unknown("MODEL", c);
      }
    }
    return m;
  }

 private:
  void unknown(std::string_view container, const xml::Node& n) {
    if (!warnings_) return;
    warnings_->push_back(make_diagnostic(
        codes::kUnknownXmlElement,
        "ignored unknown element <" + n.name + "> in <" + std::string(container) +
            "> at line " + std::to_string(n.line),
        std::nullopt, {{"element", n.name}, {"container", std::string(container)}}));
  }

  static std::string required(const xml::Node& n, std::string_view attr) {
    auto v = n.attribute(attr);
    if (!v) {
      throw Error(ErrorKind::kMissingElement,
                  "missing required attribute '" + std::string(attr) + "' on <" +
                      n.name + "> at line " + std::to_string(n.line))
          .at(n.line, n.column)
          .with_subject(std::string(attr));
    }
    return std::string(*v);
  }

  static std::string optional_attr(const xml::Node& n, std::string_view attr) {
    return std::string(n.attribute(attr).value_or(""));
  }

  [[noreturn]] static void invalid(const xml::Node& n, std::string message,
                                   std::string subject = {}) {
    throw Error(ErrorKind::kInvalidValue,
                message + " at line " + std::to_string(n.line))
        .at(n.line, n.column)
        .with_subject(std::move(subject));
  }

  std::string claim_id(const xml::Node& n) {
    std::string id = required(n, "id");
    if (id.empty()) invalid(n, "empty id on <" + n.name + ">");
    if (!ids_.insert(id).second) {
      throw Error(ErrorKind::kDuplicateId,
                  "duplicate id '" + id + "' at line " + std::to_string(n.line))
          .at(n.line, n.column)
          .with_subject(id);
    }
    return id;
  }

  StereotypeApplication read_apply(const xml::Node& n) {
    StereotypeApplication a;
    a.profile = required(n, "profile");
    a.stereotype = required(n, "stereotype");
    for (const auto& t : n.children) {
      if (t.name != "TAG") {
        unknown("APPLY", t);
        continue;
      }
      std::string name = required(t, "name");
      if (!a.tags.emplace(name, required(t, "value")).second) {
        invalid(t, "duplicate tag '" + name + "'", name);
      }
    }
    return a;
  }

  ModelElement read_element(const xml::Node& n) {
    ModelElement e;
    e.id = claim_id(n);
    const std::string metaclass = required(n, "metaclass");
    auto m = try_parse_metaclass(metaclass);
    if (!m) {
      throw Error(ErrorKind::kUnknownMetaclass,
                  "unknown metaclass '" + metaclass + "' on element '" + e.id + "'")
          .at(n.line, n.column)
          .with_subject(metaclass)
          .with_context(e.id);
    }
    e.metaclass = *m;
    e.name = optional_attr(n, "name");
    if (auto owner = n.attribute("owner")) e.owner = std::string(*owner);
    std::set<std::string> attribute_names;
    for (const auto& c : n.children) {
      if (c.name == "ATTRIBUTE") {
        Attribute a{required(c, "name"), optional_attr(c, "type")};
        if (!attribute_names.insert(a.name).second) {
          invalid(c, "duplicate attribute '" + a.name + "' on element '" + e.id + "'",
                  a.name);
        }
        e.attributes.push_back(std::move(a));
      } else if (c.name == "APPLY") {
        e.applications.push_back(read_apply(c));
      } else {
        unknown("ELEMENT", c);
      }
    }
    return e;
  }

  Association read_association(const xml::Node& n) {
    Association a;
    a.id = claim_id(n);
    a.source = required(n, "source");
    a.target = required(n, "target");
    a.source_role = optional_attr(n, "sourceRole");
    a.target_role = optional_attr(n, "targetRole");
    a.source_mult = optional_attr(n, "sourceMult");
    a.target_mult = optional_attr(n, "targetMult");
    for (const auto* mult : {&a.source_mult, &a.target_mult}) {
      if (!is_valid_multiplicity(*mult)) {
        invalid(n, "malformed multiplicity '" + *mult + "' on association '" +
                       a.id + "'",
                *mult);
      }
    }
    for (const auto& c : n.children) {
      if (c.name == "APPLY") {
        a.applications.push_back(read_apply(c));
      } else {
        unknown("ASSOCIATION", c);
      }
    }
    return a;
  }

  Diagram read_diagram(const xml::Node& n) {
    Diagram d;
    d.id = claim_id(n);
    const std::string kind = required(n, "kind");
    if (kind == "class") {
      d.kind = DiagramKind::kClass;
    } else if (kind == "sequence") {
      d.kind = DiagramKind::kSequence;
    } else {
      invalid(n, "unknown diagram kind '" + kind + "'", kind);
    }
    const bool is_class = d.kind == DiagramKind::kClass;
    for (const auto& c : n.children) {
      if (c.name == "MEMBER" || c.name == "LIFELINE" || c.name == "MESSAGE") {
        if ((c.name == "MEMBER") != is_class) {
          invalid(c, "<" + c.name + "> is not allowed in a " + kind + " diagram");
        }
      }
      if (c.name == "MEMBER") {
        d.members.push_back(required(c, "ref"));
      } else if (c.name == "LIFELINE") {
        d.lifelines.push_back(required(c, "ref"));
      } else if (c.name == "MESSAGE") {
        d.messages.push_back(read_message(c));
      } else {
        unknown("DIAGRAM", c);
      }
    }
    return d;
  }

  Message read_message(const xml::Node& n) {
    Message m;
    const std::string seq = required(n, "seq");
    auto [ptr, ec] = std::from_chars(seq.data(), seq.data() + seq.size(), m.seq);
    if (seq.empty() || ec != std::errc() || ptr != seq.data() + seq.size() ||
        m.seq < 1) {
      invalid(n, "message seq '" + seq + "' is not a positive integer", seq);
    }
    m.from = required(n, "from");
    m.to = required(n, "to");
    m.label = optional_attr(n, "label");
    const std::string kind = optional_attr(n, "kind");
    if (kind.empty() || kind == "call") {
      m.kind = MessageKind::kCall;
    } else if (kind == "return") {
      m.kind = MessageKind::kReturn;
    } else {
      invalid(n, "unknown message kind '" + kind + "'", kind);
    }
    return m;
  }

  std::vector<Diagnostic>* warnings_;
  std::set<std::string> ids_;
};

void write_applications(xml::Writer& w,
                        const std::vector<StereotypeApplication>& apps) {
  for (const auto& a : apps) {
    if (a.tags.empty()) {
      w.empty("APPLY", {{"profile", a.profile}, {"stereotype", a.stereotype}});
      continue;
    }
    w.open("APPLY", {{"profile", a.profile}, {"stereotype", a.stereotype}});
    for (const auto& [name, value] : a.tags) {
      w.empty("TAG", {{"name", name}, {"value", value}});
    }
    w.close("APPLY");
  }
}

}  // namespace

ModelDocument parse_model(std::string_view document,
                          std::vector<Diagnostic>* warnings) {
  const xml::Node root = xml::parse(document);
  return ModelReader(warnings).read(root);
}

std::string serialize_model(const ModelDocument& m) {
  using Attrs = std::vector<std::pair<std::string_view, std::string_view>>;
  xml::Writer w;
  w.open("MODEL", {{"name", m.name}});

  if (m.imports.empty()) {
    w.empty("IMPORTS");
  } else {
    w.open("IMPORTS");
    for (const auto& i : m.imports) w.empty("IMPORT", {{"profile", i}});
    w.close("IMPORTS");
  }

  if (m.elements.empty()) {
    w.empty("ELEMENTS");
  } else {
    w.open("ELEMENTS");
    for (const auto& e : m.elements) {
      Attrs attrs = {{"id", e.id}, {"metaclass", to_string(e.metaclass)},
                     {"name", e.name}};
      if (e.owner) attrs.emplace_back("owner", *e.owner);
      if (e.attributes.empty() && e.applications.empty()) {
        w.empty("ELEMENT", attrs);
        continue;
      }
      w.open("ELEMENT", attrs);
      for (const auto& a : e.attributes) {
        w.empty("ATTRIBUTE", {{"name", a.name}, {"type", a.type}});
      }
      write_applications(w, e.applications);
      w.close("ELEMENT");
    }
    w.close("ELEMENTS");
  }

  if (m.associations.empty()) {
    w.empty("ASSOCIATIONS");
  } else {
    w.open("ASSOCIATIONS");
    for (const auto& a : m.associations) {
      Attrs attrs = {{"id", a.id}, {"source", a.source}, {"target", a.target}};
      if (!a.source_role.empty()) attrs.emplace_back("sourceRole", a.source_role);
      if (!a.target_role.empty()) attrs.emplace_back("targetRole", a.target_role);
      if (!a.source_mult.empty()) attrs.emplace_back("sourceMult", a.source_mult);
      if (!a.target_mult.empty()) attrs.emplace_back("targetMult", a.target_mult);
      if (a.applications.empty()) {
        w.empty("ASSOCIATION", attrs);
        continue;
      }
      w.open("ASSOCIATION", attrs);
      write_applications(w, a.applications);
      w.close("ASSOCIATION");
    }
    w.close("ASSOCIATIONS");
  }

  if (m.diagrams.empty()) {
    w.empty("DIAGRAMS");
  } else {
    w.open("DIAGRAMS");
    for (const auto& d : m.diagrams) {
      const Attrs attrs = {{"id", d.id}, {"kind", to_string(d.kind)}};
      if (d.members.empty() && d.lifelines.empty() && d.messages.empty()) {
        w.empty("DIAGRAM", attrs);
        continue;
      }
      w.open("DIAGRAM", attrs);
      for (const auto& ref : d.members) w.empty("MEMBER", {{"ref", ref}});
      for (const auto& ref : d.lifelines) w.empty("LIFELINE", {{"ref", ref}});
      for (const auto& msg : d.messages) {
        const std::string seq = std::to_string(msg.seq);
        w.empty("MESSAGE", {{"seq", seq},
                            {"from", msg.from},
                            {"to", msg.to},
                            {"label", msg.label},
                            {"kind", to_string(msg.kind)}});
      }
      w.close("DIAGRAM");
    }
    w.close("DIAGRAMS");
  }

  w.close("MODEL");
  return w.finish();
}

// -- Resolution ---------------------------------------------------------------

ProfileRegistry make_registry(std::vector<Profile> profiles) {
  ProfileRegistry registry;
  for (auto& p : profiles) {
    std::string name = p.name;
    registry.insert_or_assign(std::move(name), std::move(p));
  }
  return registry;
}

const ModelElement* ResolvedModel::element(std::string_view id) const {
  auto it = state_->element_index.find(id);
  return it == state_->element_index.end() ? nullptr
                                           : &state_->document.elements[it->second];
}

const Association* ResolvedModel::association(std::string_view id) const {
  auto it = state_->association_index.find(id);
  return it == state_->association_index.end()
             ? nullptr
             : &state_->document.associations[it->second];
}

std::vector<const ApplicationSite*> ResolvedModel::sites_of(std::string_view id) const {
  std::vector<const ApplicationSite*> out;
  for (const auto& s : state_->sites) {
    if (s.owner_id == id) out.push_back(&s);
  }
  return out;
}

std::vector<std::string> ResolvedModel::navigate(std::string_view id,
                                                 std::string_view role) const {
  auto it = state_->navigation.find(std::pair<std::string, std::string>(id, role));
  return it == state_->navigation.end() ? std::vector<std::string>{} : it->second;
}

ResolvedModel resolve(ModelDocument model, const ProfileRegistry& registry) {
  auto state = std::make_shared<ResolvedModel::State>();
  state->document = std::move(model);
  const ModelDocument& doc = state->document;

  std::set<std::string> imported;
  for (const auto& name : doc.imports) {
    if (!imported.insert(name).second) continue;
    auto it = registry.find(name);
    if (it == registry.end()) {
      state->diagnostics.push_back(make_diagnostic(
          codes::kUnresolvedReference, "unresolved profile import '" + name + "'",
          std::nullopt, {{"profile", name}}));
      continue;
    }
    state->profiles.emplace(name, it->second);
  }

  for (std::size_t i = 0; i < doc.elements.size(); ++i) {
    state->element_index.emplace(doc.elements[i].id, i);
  }
  for (std::size_t i = 0; i < doc.associations.size(); ++i) {
    state->association_index.emplace(doc.associations[i].id, i);
  }

  auto bind = [&](const std::string& owner, MetaClass metaclass,
                  const StereotypeApplication& app) {
    ApplicationSite site{owner, metaclass, &app, nullptr};
    auto it = state->profiles.find(app.profile);
    if (it == state->profiles.end()) {
      const bool known = registry.count(app.profile) > 0;
      state->diagnostics.push_back(make_diagnostic(
          codes::kUnresolvedReference,
          known ? "stereotype «" + app.stereotype + "» uses profile '" +
                      app.profile + "' which the model does not import"
                : "stereotype «" + app.stereotype + "» uses unknown profile '" +
                      app.profile + "'",
          owner, {{"profile", app.profile}, {"stereotype", app.stereotype}}));
    } else if (const Stereotype* s = it->second.find(app.stereotype)) {
      site.stereotype = s;
    } else {
      state->diagnostics.push_back(make_diagnostic(
          codes::kUnresolvedReference,
          "profile '" + app.profile + "' has no stereotype «" + app.stereotype + "»",
          owner, {{"profile", app.profile}, {"stereotype", app.stereotype}}));
    }
    state->sites.push_back(site);
  };

  for (const auto& e : doc.elements) {
    for (const auto& app : e.applications) bind(e.id, e.metaclass, app);
  }
  for (const auto& a : doc.associations) {
    for (const auto& app : a.applications) {
      bind(a.id, MetaClass::kUMLAssociation, app);
    }
  }

  for (const auto& a : doc.associations) {
    if (!a.target_role.empty()) {
      state->navigation[{a.source, a.target_role}].push_back(a.target);
    }
    if (!a.source_role.empty()) {
      state->navigation[{a.target, a.source_role}].push_back(a.source);
    }
  }
  for (auto& [key, reached] : state->navigation) {
    std::stable_sort(reached.begin(), reached.end());
  }

  ResolvedModel rm;
  rm.state_ = std::move(state);
  return rm;
}

}  // namespace umlprof
