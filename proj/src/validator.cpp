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

#include "umlprof/validator.hpp"

#include <map>
#include <set>
#include <string>

#include "umlprof/constraint.hpp"

namespace umlprof {

std::string_view to_string(StereotypeMode m) {
  return m == StereotypeMode::kStrict ? "strict" : "uml2";
}

std::optional<StereotypeMode> try_parse_stereotype_mode(std::string_view s) {
  if (s == "strict") return StereotypeMode::kStrict;
  if (s == "uml2") return StereotypeMode::kUml2;
  return std::nullopt;
}

namespace {

std::string base_class_list(const Stereotype& s) {
  std::string out;
  for (auto m : s.base_classes) {
    if (!out.empty()) out += ", ";
    out += to_string(m);
  }
  return out;
}

}  // namespace

std::vector<Diagnostic> check_applicability(const ResolvedModel& rm) {
  std::vector<Diagnostic> out;
  for (const auto& site : rm.sites()) {
    if (!site.stereotype) continue;
    bool applicable = false;
    for (auto base : site.stereotype->base_classes) {
      applicable = applicable || conforms_to(site.owner_metaclass, base);
    }
    if (applicable) continue;
    const std::string metaclass(to_string(site.owner_metaclass));
    out.push_back(make_diagnostic(
        codes::kNotApplicable,
        "stereotype «" + site.stereotype->name + "» extends {" +
            base_class_list(*site.stereotype) + "} and cannot apply to a " +
            metaclass,
        site.owner_id,
        {{"stereotype", site.stereotype->name},
         {"expected", base_class_list(*site.stereotype)},
         {"actual", metaclass}}));
  }
  return out;
}

std::vector<Diagnostic> check_stereotype_count(const ResolvedModel& rm,
                                               const ValidationOptions& opts) {
  std::vector<Diagnostic> out;
  if (opts.stereotype_mode != StereotypeMode::kStrict) return out;
  auto check = [&out](const std::string& id,
                      const std::vector<StereotypeApplication>& apps) {
    if (apps.size() < 2) return;
    std::string names;
    for (const auto& a : apps) {
      if (!names.empty()) names += ", ";
      names += a.stereotype;
    }
    out.push_back(make_diagnostic(
        codes::kTooManyStereotypes,
        std::to_string(apps.size()) +
            " stereotypes applied; strict mode allows one per element (" + names +
            ")",
        id, {{"actual", std::to_string(apps.size())}, {"expected", "1"}}));
  };
  for (const auto& e : rm.document().elements) check(e.id, e.applications);
  for (const auto& a : rm.document().associations) check(a.id, a.applications);
  return out;
}

std::vector<Diagnostic> check_tags(const ResolvedModel& rm) {
  std::vector<Diagnostic> out;
  for (const auto& site : rm.sites()) {
    if (!site.stereotype) continue;
    const Stereotype& s = *site.stereotype;
    for (const auto& [name, value] : site.application->tags) {
      const TagDefinition* def = s.find_tag(name);
      if (!def) {
        out.push_back(make_diagnostic(
            codes::kUnknownTag,
            "stereotype «" + s.name + "» declares no tag '" + name + "'",
            site.owner_id, {{"stereotype", s.name}, {"tag", name}}));
      } else if (!tag_value_conforms(*def, value)) {
        out.push_back(make_diagnostic(
            codes::kTagValueMistyped,
            "tag '" + name + "' of «" + s.name + "» expects " +
                std::string(to_string(def->type)) + ", got '" + value + "'",
            site.owner_id,
            {{"stereotype", s.name},
             {"tag", name},
             {"expected", std::string(to_string(def->type))},
             {"actual", value}}));
      }
    }
    for (const auto& def : s.tag_defs) {
      if (site.application->tags.count(def.name) || def.default_value) continue;
      out.push_back(make_diagnostic(
          codes::kMissingTag,
          "stereotype «" + s.name + "» requires tag '" + def.name + "'",
          site.owner_id, {{"stereotype", s.name}, {"tag", def.name}}));
    }
  }
  return out;
}

std::vector<Diagnostic> check_constraints(const ResolvedModel& rm) {
  std::vector<Diagnostic> out;
  for (const auto& site : rm.sites()) {
    if (!site.stereotype) continue;
    const Stereotype& s = *site.stereotype;
    for (const auto& c : s.constraints) {
      const Value v = evaluate(c.compiled, site.owner_id, rm);
      std::map<std::string, std::string> detail = {
          {"stereotype", s.name}, {"constraint", c.name}, {"expr", c.source_text}};
      if (v.is_bool()) {
        if (v.as_bool()) continue;
        out.push_back(make_diagnostic(
            codes::kConstraintViolated,
            "constraint '" + c.name + "' of «" + s.name + "» is violated: " +
                c.source_text,
            site.owner_id, std::move(detail)));
      } else if (v.is_invalid()) {
        detail["reason"] = v.invalid_reason();
        out.push_back(make_diagnostic(
            codes::kConstraintInvalid,
            "constraint '" + c.name + "' of «" + s.name +
                "» could not be evaluated: " + v.invalid_reason(),
            site.owner_id, std::move(detail)));
      } else {
        detail["actual"] = std::string(v.type_name());
        out.push_back(make_diagnostic(
            codes::kConstraintNotBoolean,
            "constraint '" + c.name + "' of «" + s.name + "» yields " +
                std::string(v.type_name()) + ", not Bool",
            site.owner_id, std::move(detail)));
      }
    }
  }
  return out;
}

std::vector<Diagnostic> check_wellformed(const ModelDocument& m) {
  std::vector<Diagnostic> out;
  std::set<std::string, std::less<>> element_ids;
  for (const auto& e : m.elements) element_ids.insert(e.id);
  auto exists = [&](const std::string& id) { return element_ids.count(id) > 0; };

  for (const auto& a : m.associations) {
    for (const auto* end : {&a.source, &a.target}) {
      if (exists(*end)) continue;
      out.push_back(make_diagnostic(
          codes::kDanglingAssociationEnd,
          "association end refers to unknown element '" + *end + "'", a.id,
          {{"actual", *end}}));
    }
  }

  for (const auto& d : m.diagrams) {
    for (const auto* refs : {&d.members, &d.lifelines}) {
      for (const auto& ref : *refs) {
        if (exists(ref)) continue;
        out.push_back(make_diagnostic(codes::kUnknownDiagramMember,
                                      "diagram refers to unknown element '" + ref + "'",
                                      d.id, {{"actual", ref}}));
      }
    }
    const std::set<std::string> lifelines(d.lifelines.begin(), d.lifelines.end());
    std::set<std::int64_t> seqs;
    for (const auto& msg : d.messages) {
      for (const auto* end : {&msg.from, &msg.to}) {
        if (lifelines.count(*end)) continue;
        out.push_back(make_diagnostic(
            codes::kMessageEndpointNotLifeline,
            "message " + std::to_string(msg.seq) + " endpoint '" + *end +
                "' is not a lifeline of this diagram",
            d.id, {{"seq", std::to_string(msg.seq)}, {"actual", *end}}));
      }
      if (!seqs.insert(msg.seq).second) {
        out.push_back(make_diagnostic(
            codes::kDuplicateMessageSeq,
            "message seq " + std::to_string(msg.seq) + " is used more than once",
            d.id, {{"seq", std::to_string(msg.seq)}}));
      }
    }
  }

  // Owner chains: report each cycle once, on its smallest id.
  std::map<std::string, std::string> owner_of;
  for (const auto& e : m.elements) {
    if (!e.owner) continue;
    if (!exists(*e.owner)) {
      out.push_back(make_diagnostic(codes::kDanglingOwner,
                                    "owner refers to unknown element '" + *e.owner + "'",
                                    e.id, {{"actual", *e.owner}}));
      continue;
    }
    owner_of.emplace(e.id, *e.owner);
  }
  std::set<std::string> reported;
  for (const auto& [start, unused] : owner_of) {
    std::vector<std::string> path;
    std::set<std::string> on_path;
    std::string cur = start;
    while (owner_of.count(cur) && !on_path.count(cur)) {
      on_path.insert(cur);
      path.push_back(cur);
      cur = owner_of.at(cur);
    }
    if (!on_path.count(cur)) continue;  // chain ends at a root
    std::set<std::string> cycle;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      cycle.insert(*it);
      if (*it == cur) break;
    }
    const std::string& smallest = *cycle.begin();
    if (!reported.insert(smallest).second) continue;
    std::string members;
    for (const auto& id : cycle) {
      if (!members.empty()) members += ", ";
      members += id;
    }
    out.push_back(make_diagnostic(codes::kOwnerCycle,
                                  "ownership cycle through {" + members + "}",
                                  smallest, {{"cycle", members}}));
  }
  return out;
}

ValidationReport check_document(const ModelDocument& m,
                                const ProfileRegistry& registry,
                                const ValidationOptions& opts) {
  std::vector<Diagnostic> all = check_wellformed(m);
  const ResolvedModel rm = resolve(m, registry);
  auto add = [&all](std::vector<Diagnostic> more) {
    all.insert(all.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
  };
  add(rm.diagnostics());
  add(check_applicability(rm));
  add(check_stereotype_count(rm, opts));
  add(check_tags(rm));
  add(check_constraints(rm));
  sort_diagnostics(all);
  return ValidationReport::from(std::move(all));
}

int exit_status(const ValidationReport& report, const ValidationOptions& opts) {
  if (report.errors > 0) return 1;
  if (opts.fail_on_warning && report.warnings > 0) return 1;
  return 0;
}

}  // namespace umlprof
