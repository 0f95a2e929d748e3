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
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "umlprof/error.hpp"
#include "umlprof/profile.hpp"
#include "xml.hpp"

namespace umlprof {

std::string_view to_string(TagType t) {
  switch (t) {
    case TagType::kString: return "string";
    case TagType::kInt: return "int";
    case TagType::kReal: return "real";
    case TagType::kBool: return "bool";
    case TagType::kEnum: return "enum";
  }
  return "string";
}

std::optional<TagType> try_parse_tag_type(std::string_view name) {
  for (auto t : {TagType::kString, TagType::kInt, TagType::kReal, TagType::kBool,
                 TagType::kEnum}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

bool tag_value_conforms(const TagDefinition& def, std::string_view literal) {
  const char* first = literal.data();
  const char* last = literal.data() + literal.size();
  switch (def.type) {
    case TagType::kString:
      return true;
    case TagType::kInt: {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(first, last, v);
      return !literal.empty() && ec == std::errc() && ptr == last;
    }
    case TagType::kReal: {
      double v = 0;
      auto [ptr, ec] = std::from_chars(first, last, v);
      return !literal.empty() && ec == std::errc() && ptr == last &&
             std::isfinite(v);
    }
    case TagType::kBool:
      return literal == "true" || literal == "false";
    case TagType::kEnum:
      return std::find(def.choices.begin(), def.choices.end(), literal) !=
             def.choices.end();
  }
  return false;
}

ConstraintDef make_constraint(std::string name, std::string source) {
  ConstraintAst compiled = parse_constraint(source);
  return ConstraintDef{std::move(name), std::move(source), std::move(compiled)};
}

const TagDefinition* Stereotype::find_tag(std::string_view tag) const {
  for (const auto& t : tag_defs) {
    if (t.name == tag) return &t;
  }
  return nullptr;
}

const Stereotype* Profile::find(std::string_view stereotype) const {
  for (const auto& s : stereotypes) {
    if (s.name == stereotype) return &s;
  }
  return nullptr;
}

namespace {

class ProfileReader {
 public:
  explicit ProfileReader(std::vector<Diagnostic>* warnings) : warnings_(warnings) {}

  Profile read(const xml::Node& root) {
    if (root.name != "PROFILE") {
      throw Error(ErrorKind::kMissingElement,
                  "expected root element PROFILE, found " + root.name)
          .at(root.line, root.column)
          .with_subject(root.name);
    }
    Profile p;
    p.version = std::string(root.attribute("version").value_or("1.0"));
    const xml::Node* header = nullptr;
    const xml::Node* body = nullptr;
    for (const auto& c : root.children) {
      if (c.name == "HEADER" && !header) {
        header = &c;
      } else if (c.name == "BODY" && !body) {
        body = &c;
      } else {
        unknown("PROFILE", c);
      }
    }
    if (!header) missing("HEADER", root);
    read_header(*header, p);
    if (body) read_body(*body, p);
    return p;
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

  [[noreturn]] static void missing(std::string_view what, const xml::Node& parent,
                                   std::string context = {}) {
    std::string msg = "missing required element <" + std::string(what) +
                      "> in <" + parent.name + ">";
    if (!context.empty()) msg += " of '" + context + "'";
    throw Error(ErrorKind::kMissingElement, std::move(msg))
        .at(parent.line, parent.column)
        .with_subject(std::string(what))
        .with_context(std::move(context));
  }

  void read_header(const xml::Node& header, Profile& p) {
    const xml::Node* name = nullptr;
    const xml::Node* display = nullptr;
    const xml::Node* description = nullptr;
    for (const auto& c : header.children) {
      if (c.name == "NAME" && !name) {
        name = &c;
      } else if (c.name == "DISPLAYNAME" && !display) {
        display = &c;
      } else if (c.name == "DESCRIPTION" && !description) {
        description = &c;
      } else {
        unknown("HEADER", c);
      }
    }
    if (!name) missing("NAME", header);
    if (!display) missing("DISPLAYNAME", header);
    if (!description) missing("DESCRIPTION", header);
    p.name = std::string(name->trimmed_text());
    if (p.name.empty()) {
      throw Error(ErrorKind::kInvalidValue, "profile NAME is empty")
          .at(name->line, name->column);
    }
    p.display_name = std::string(display->trimmed_text());
    p.description = std::string(description->trimmed_text());
  }

  void read_body(const xml::Node& body, Profile& p) {
    for (const auto& c : body.children) {
      if (c.name != "STEREOTYPELIST") {
        unknown("BODY", c);
        continue;
      }
      for (const auto& s : c.children) {
        if (s.name == "STEREOTYPE") {
          p.stereotypes.push_back(read_stereotype(s));
        } else {
          unknown("STEREOTYPELIST", s);
        }
      }
    }
  }

  Stereotype read_stereotype(const xml::Node& node) {
    Stereotype s;
    const xml::Node* name = node.child("NAME");
    if (!name) missing("NAME", node);
    s.name = std::string(name->trimmed_text());
    if (s.name.empty()) {
      throw Error(ErrorKind::kInvalidValue, "stereotype NAME is empty")
          .at(name->line, name->column);
    }
    bool seen_name = false;
    for (const auto& c : node.children) {
      if (c.name == "NAME" && !seen_name) {
        seen_name = true;
      } else if (c.name == "DESCRIPTION") {
        s.description = std::string(c.trimmed_text());
      } else if (c.name == "BASECLASSES") {
        read_base_classes(c, s);
      } else if (c.name == "ICON") {
        if (!c.trimmed_text().empty()) s.icon = std::string(c.trimmed_text());
      } else if (c.name == "TAGDEFINITIONLIST") {
        for (const auto& t : c.children) {
          if (t.name == "TAGDEFINITION") {
            s.tag_defs.push_back(read_tag(t, s.name));
          } else {
            unknown("TAGDEFINITIONLIST", t);
          }
        }
      } else if (c.name == "CONSTRAINTLIST") {
        for (const auto& k : c.children) {
          if (k.name == "CONSTRAINT") {
            s.constraints.push_back(read_constraint(k, s.name));
          } else {
            unknown("CONSTRAINTLIST", k);
          }
        }
      } else {
        unknown("STEREOTYPE", c);
      }
    }
    return s;
  }

  void read_base_classes(const xml::Node& node, Stereotype& s) {
    for (const auto& b : node.children) {
      if (b.name != "BASECLASS") {
        unknown("BASECLASSES", b);
        continue;
      }
      const std::string_view text = b.trimmed_text();
      auto m = try_parse_metaclass(text);
      if (!m) {
        throw Error(ErrorKind::kUnknownMetaclass,
                    "unknown metaclass '" + std::string(text) +
                        "' in base classes of stereotype '" + s.name + "'")
            .at(b.line, b.column)
            .with_subject(std::string(text))
            .with_context(s.name);
      }
      s.base_classes.insert(*m);
    }
  }

  TagDefinition read_tag(const xml::Node& node, const std::string& owner) {
    TagDefinition t;
    const xml::Node* name = node.child("NAME");
    const xml::Node* type = node.child("TYPE");
    if (!name) missing("NAME", node, owner);
    if (!type) missing("TYPE", node, owner);
    t.name = std::string(name->trimmed_text());
    auto parsed = try_parse_tag_type(type->trimmed_text());
    if (!parsed) {
      throw Error(ErrorKind::kInvalidValue,
                  "unknown tag type '" + std::string(type->trimmed_text()) +
                      "' for tag '" + t.name + "' of stereotype '" + owner + "'")
          .at(type->line, type->column)
          .with_subject(std::string(type->trimmed_text()))
          .with_context(owner);
    }
    t.type = *parsed;
    for (const auto& c : node.children) {
      if (c.name == "NAME" || c.name == "TYPE") continue;
      if (c.name == "DEFAULT") {
        t.default_value = std::string(c.trimmed_text());
      } else if (c.name == "CHOICES") {
        for (const auto& ch : c.children) {
          if (ch.name == "CHOICE") {
            t.choices.emplace_back(ch.trimmed_text());
          } else {
            unknown("CHOICES", ch);
          }
        }
      } else {
        unknown("TAGDEFINITION", c);
      }
    }
    return t;
  }

  ConstraintDef read_constraint(const xml::Node& node, const std::string& owner) {
    const xml::Node* name = node.child("NAME");
    const xml::Node* expr = node.child("EXPR");
    if (!name) missing("NAME", node, owner);
    if (!expr) missing("EXPR", node, owner);
    for (const auto& c : node.children) {
      if (c.name != "NAME" && c.name != "EXPR") unknown("CONSTRAINT", c);
    }
    std::string cname(name->trimmed_text());
    try {
      return make_constraint(cname, std::string(expr->trimmed_text()));
    } catch (Error& e) {
      throw Error(e.kind(), "constraint '" + cname + "' of stereotype '" + owner +
                                "': " + e.what())
          .at(e.line(), e.column())
          .with_subject(e.subject())
          .with_context(cname)
          .with_expected(e.expected());
    }
  }

  std::vector<Diagnostic>* warnings_;
};

}  // namespace

Profile parse_profile(std::string_view document, std::vector<Diagnostic>* warnings) {
  const xml::Node root = xml::parse(document);
  return ProfileReader(warnings).read(root);
}

std::string serialize_profile(const Profile& p) {
  xml::Writer w;
  w.open("PROFILE", {{"version", p.version}});
  w.open("HEADER");
  w.text_element("NAME", p.name);
  w.text_element("DISPLAYNAME", p.display_name);
  w.text_element("DESCRIPTION", p.description);
  w.close("HEADER");
  w.open("BODY");
  if (p.stereotypes.empty()) {
    w.empty("STEREOTYPELIST");
  } else {
    w.open("STEREOTYPELIST");
    for (const auto& s : p.stereotypes) {
      w.open("STEREOTYPE");
      w.text_element("NAME", s.name);
      w.text_element("DESCRIPTION", s.description);
      if (s.base_classes.empty()) {
        w.empty("BASECLASSES");
      } else {
        w.open("BASECLASSES");
        for (auto m : s.base_classes) w.text_element("BASECLASS", to_string(m));
        w.close("BASECLASSES");
      }
      if (s.icon && !s.icon->empty()) w.text_element("ICON", *s.icon);
      if (!s.tag_defs.empty()) {
        w.open("TAGDEFINITIONLIST");
        for (const auto& t : s.tag_defs) {
          w.open("TAGDEFINITION");
          w.text_element("NAME", t.name);
          w.text_element("TYPE", to_string(t.type));
          if (t.default_value) w.text_element("DEFAULT", *t.default_value);
          if (!t.choices.empty()) {
            w.open("CHOICES");
            for (const auto& c : t.choices) w.text_element("CHOICE", c);
            w.close("CHOICES");
          }
          w.close("TAGDEFINITION");
        }
        w.close("TAGDEFINITIONLIST");
      }
      if (!s.constraints.empty()) {
        w.open("CONSTRAINTLIST");
        for (const auto& c : s.constraints) {
          w.open("CONSTRAINT");
          w.text_element("NAME", c.name);
          w.text_element("EXPR", c.source_text);
          w.close("CONSTRAINT");
        }
        w.close("CONSTRAINTLIST");
      }
      w.close("STEREOTYPE");
    }
    w.close("STEREOTYPELIST");
  }
  w.close("BODY");
  w.close("PROFILE");
  return w.finish();
}

std::vector<Diagnostic> lint_profile(const Profile& p) {
  std::vector<Diagnostic> out;
  std::set<std::string> stereotype_names;
  for (const auto& s : p.stereotypes) {
    if (!stereotype_names.insert(s.name).second) {
      out.push_back(make_diagnostic(codes::kDuplicateStereotype,
                                    "duplicate stereotype name '" + s.name + "'",
                                    s.name, {{"stereotype", s.name}}));
    }
    if (s.base_classes.empty()) {
      out.push_back(make_diagnostic(codes::kEmptyBaseClasses,
                                    "stereotype '" + s.name + "' has no base class",
                                    s.name, {{"stereotype", s.name}}));
    }
    std::set<std::string> tag_names;
    for (const auto& t : s.tag_defs) {
      if (!tag_names.insert(t.name).second) {
        out.push_back(make_diagnostic(
            codes::kDuplicateTag,
            "duplicate tag '" + t.name + "' in stereotype '" + s.name + "'", s.name,
            {{"stereotype", s.name}, {"tag", t.name}}));
      }
      const bool is_enum = t.type == TagType::kEnum;
      if (is_enum == t.choices.empty()) {
        out.push_back(make_diagnostic(
            codes::kEnumChoicesMismatch,
            is_enum ? "enum tag '" + t.name + "' declares no choices"
                    : "non-enum tag '" + t.name + "' declares choices",
            s.name, {{"stereotype", s.name}, {"tag", t.name}}));
      }
      if (t.default_value && !tag_value_conforms(t, *t.default_value)) {
        out.push_back(make_diagnostic(
            is_enum ? codes::kEnumDefaultNotChoice : codes::kTagDefaultMistyped,
            is_enum ? "default '" + *t.default_value + "' of tag '" + t.name +
                          "' is not one of its choices"
                    : "default '" + *t.default_value + "' of tag '" + t.name +
                          "' is not a valid " + std::string(to_string(t.type)),
            s.name,
            {{"stereotype", s.name}, {"tag", t.name}, {"actual", *t.default_value}}));
      }
    }
    std::set<std::string> constraint_names;
    for (const auto& c : s.constraints) {
      if (!constraint_names.insert(c.name).second) {
        out.push_back(make_diagnostic(
            codes::kDuplicateConstraint,
            "duplicate constraint '" + c.name + "' in stereotype '" + s.name + "'",
            s.name, {{"stereotype", s.name}, {"constraint", c.name}}));
      }
    }
  }
  return out;
}

}  // namespace umlprof
