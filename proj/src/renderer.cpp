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

#include "umlprof/renderer.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "umlprof/error.hpp"

namespace umlprof {

std::string_view to_string(DisplayMode m) {
  switch (m) {
    case DisplayMode::kTextual: return "textual";
    case DisplayMode::kIconic: return "iconic";
    case DisplayMode::kDecoration: return "decoration";
  }
  return "textual";
}

std::optional<DisplayMode> try_parse_display_mode(std::string_view s) {
  for (auto m : {DisplayMode::kTextual, DisplayMode::kIconic, DisplayMode::kDecoration}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

namespace {

const Diagram& find_diagram(const ResolvedModel& rm, std::string_view id,
                            DiagramKind expected) {
  const Diagram* d = rm.document().find_diagram(id);
  if (!d) {
    throw Error(ErrorKind::kUnknownDiagram, "no diagram with id '" + std::string(id) + "'")
        .with_subject(std::string(id));
  }
  if (d->kind != expected) {
    throw Error(ErrorKind::kWrongDiagramKind,
                "diagram '" + std::string(id) + "' is a " +
                    std::string(to_string(d->kind)) + " diagram, not a " +
                    std::string(to_string(expected)) + " diagram")
        .with_subject(std::string(id));
  }
  return *d;
}

// One display token per applied stereotype, e.g. `<<Interface>>`,
// `[icon:if16]`, or both for decoration.
std::vector<std::string> stereotype_tokens(const ResolvedModel& rm,
                                           std::string_view owner, DisplayMode mode) {
  std::vector<std::string> out;
  for (const ApplicationSite* site : rm.sites_of(owner)) {
    const std::string text = "<<" + site->application->stereotype + ">>";
    std::optional<std::string> icon;
    if (site->stereotype && site->stereotype->icon) {
      icon = "[icon:" + *site->stereotype->icon + "]";
    }
    switch (mode) {
      case DisplayMode::kTextual:
        out.push_back(text);
        break;
      case DisplayMode::kIconic:
        out.push_back(icon.value_or(text));
        break;
      case DisplayMode::kDecoration:
        out.push_back(text);
        if (icon) out.push_back(*icon);
        break;
    }
  }
  return out;
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n':
      case '\r': out += ' '; break;
      default: out += c;
    }
  }
  return out;
}

std::string join_label(const std::vector<std::string>& lines) {
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) out += "\\n";
    out += dot_escape(lines[i]);
  }
  return out;
}

// Line breaks inside names or labels would split trace lines.
std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

std::string display_name(const ResolvedModel& rm, const std::string& id) {
  const ModelElement* e = rm.element(id);
  return one_line(e && !e->name.empty() ? e->name : id);
}

}  // namespace

std::string render_class_diagram(const ResolvedModel& rm, std::string_view diagram_id,
                                 DisplayMode mode) {
  const Diagram& d = find_diagram(rm, diagram_id, DiagramKind::kClass);
  std::set<std::string> members;
  for (const auto& ref : d.members) {
    if (rm.element(ref)) members.insert(ref);
  }

  std::string out = "digraph \"" + dot_escape(d.id) + "\" {\n";
  out += "  node [shape=box];\n";
  out += "  edge [arrowhead=none];\n";
  for (const auto& id : members) {
    const ModelElement& e = *rm.element(id);
    std::vector<std::string> lines = stereotype_tokens(rm, id, mode);
    lines.push_back(e.name);
    for (const auto& a : e.attributes) {
      lines.push_back(a.type.empty() ? a.name : a.name + " : " + a.type);
    }
    out += "  \"" + dot_escape(id) + "\" [label=\"" + join_label(lines) + "\"];\n";
  }

  std::vector<const Association*> edges;
  for (const auto& a : rm.document().associations) {
    if (members.count(a.source) && members.count(a.target)) edges.push_back(&a);
  }
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Association* x, const Association* y) { return x->id < y->id; });
  for (const Association* a : edges) {
    std::vector<std::string> attrs;
    auto end_label = [](const std::string& role, const std::string& mult) {
      std::vector<std::string> parts;
      if (!role.empty()) parts.push_back(role);
      if (!mult.empty()) parts.push_back(mult);
      return join_label(parts);
    };
    const std::string tail = end_label(a->source_role, a->source_mult);
    const std::string head = end_label(a->target_role, a->target_mult);
    const std::vector<std::string> stereo = stereotype_tokens(rm, a->id, mode);
    if (!stereo.empty()) attrs.push_back("label=\"" + join_label(stereo) + "\"");
    if (!tail.empty()) attrs.push_back("taillabel=\"" + tail + "\"");
    if (!head.empty()) attrs.push_back("headlabel=\"" + head + "\"");
    out += "  \"" + dot_escape(a->source) + "\" -> \"" + dot_escape(a->target) + "\"";
    if (!attrs.empty()) {
      out += " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) {
        if (i) out += ", ";
        out += attrs[i];
      }
      out += "]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string render_sequence_diagram(const ResolvedModel& rm,
                                    std::string_view diagram_id, DisplayMode mode) {
  const Diagram& d = find_diagram(rm, diagram_id, DiagramKind::kSequence);
  std::string out = "sequence " + d.id + "\n";
  for (const auto& id : d.lifelines) {
    out += "lifeline ";
    for (const auto& token : stereotype_tokens(rm, id, mode)) {
      out += one_line(token) + " ";
    }
    out += display_name(rm, id) + "\n";
  }
  std::vector<const Message*> messages;
  for (const auto& m : d.messages) messages.push_back(&m);
  std::stable_sort(messages.begin(), messages.end(),
                   [](const Message* a, const Message* b) { return a->seq < b->seq; });
  for (const Message* m : messages) {
    out += std::to_string(m->seq) + ". " + display_name(rm, m->from) +
           (m->kind == MessageKind::kReturn ? " --> " : " -> ") +
           display_name(rm, m->to) + " : " + one_line(m->label) + "\n";
  }
  return out;
}

std::string render_diagram(const ResolvedModel& rm, std::string_view diagram_id,
                           DisplayMode mode) {
  const Diagram* d = rm.document().find_diagram(diagram_id);
  if (d && d->kind == DiagramKind::kSequence) {
    return render_sequence_diagram(rm, diagram_id, mode);
  }
  return render_class_diagram(rm, diagram_id, mode);
}

}  // namespace umlprof
