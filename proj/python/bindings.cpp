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


// Python bindings. Everything crosses the boundary as text (XML documents,
// constraint source, reports) or as plain dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "umlprof/cli.hpp"
#include "umlprof/constraint.hpp"
#include "umlprof/corpus.hpp"
#include "umlprof/error.hpp"
#include "umlprof/model.hpp"
#include "umlprof/profile.hpp"
#include "umlprof/renderer.hpp"
#include "umlprof/validator.hpp"

namespace py = pybind11;
using namespace umlprof;

namespace {

py::handle g_error_type;

py::dict to_dict(const Diagnostic& d) {
  py::dict out;
  out["code"] = d.code;
  out["severity"] = std::string(to_string(d.severity()));
  out["element"] = d.element ? py::object(py::str(*d.element)) : py::object(py::none());
  out["message"] = d.message;
  out["detail"] = d.detail;
  return out;
}

py::list to_list(const std::vector<Diagnostic>& ds) {
  py::list out;
  for (const auto& d : ds) out.append(to_dict(d));
  return out;
}

py::dict to_dict(const Profile& p) {
  py::list stereotypes;
  for (const auto& s : p.stereotypes) {
    py::list bases;
    for (MetaClass m : s.base_classes) bases.append(std::string(to_string(m)));
    py::list tags;
    for (const auto& t : s.tag_defs) {
      py::dict tag;
      tag["name"] = t.name;
      tag["type"] = std::string(to_string(t.type));
      tag["default"] = t.default_value ? py::object(py::str(*t.default_value))
                                       : py::object(py::none());
      tag["choices"] = t.choices;
      tags.append(tag);
    }
    py::list constraints;
    for (const auto& c : s.constraints) {
      py::dict con;
      con["name"] = c.name;
      con["source"] = c.source_text;
      constraints.append(con);
    }
    py::dict st;
    st["name"] = s.name;
    st["description"] = s.description;
    st["base_classes"] = bases;
    st["icon"] = s.icon ? py::object(py::str(*s.icon)) : py::object(py::none());
    st["tags"] = tags;
    st["constraints"] = constraints;
    stereotypes.append(st);
  }
  py::dict out;
  out["name"] = p.name;
  out["display_name"] = p.display_name;
  out["description"] = p.description;
  out["version"] = p.version;
  out["stereotypes"] = stereotypes;
  return out;
}

py::object to_python(const Value& v) {
  if (v.is_bool()) return py::bool_(v.as_bool());
  if (v.is_int()) return py::int_(v.as_int());
  if (v.is_real()) return py::float_(v.as_real());
  if (v.is_string()) return py::str(v.as_string());
  if (v.is_element()) return py::cast(v.as_element());
  if (v.is_invalid()) return py::cast(Invalid{v.invalid_reason()});
  py::list out;
  for (const auto& item : v.as_collection()) out.append(to_python(item));
  return out;
}

ProfileRegistry registry_of(const std::vector<std::string>& profiles) {
  std::vector<Profile> parsed;
  for (const auto& text : profiles) parsed.push_back(parse_profile(text));
  return make_registry(std::move(parsed));
}

ValidationOptions options_of(const std::string& mode, bool fail_on_warning) {
  ValidationOptions opts;
  auto m = try_parse_stereotype_mode(mode);
  if (!m) throw py::value_error("unknown stereotype mode: " + mode);
  opts.stereotype_mode = *m;
  opts.fail_on_warning = fail_on_warning;
  return opts;
}

py::dict report_dict(const ValidationReport& r, const ValidationOptions& opts) {
  py::dict out;
  out["diagnostics"] = to_list(r.diagnostics);
  out["errors"] = r.errors;
  out["warnings"] = r.warnings;
  out["exit_status"] = exit_status(r, opts);
  out["text"] = r.to_text();
  out["json"] = r.to_json();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of umlprof.";

  g_error_type = PyErr_NewException("umlprof._core.UmlprofError", PyExc_ValueError, nullptr);
  m.attr("UmlprofError") = g_error_type;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(g_error_type)(
          std::string(to_string(e.kind())) + ": " + e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      exc.attr("line") = e.line();
      exc.attr("column") = e.column();
      exc.attr("subject") = e.subject();
      exc.attr("expected") = e.expected();
      PyErr_SetObject(g_error_type.ptr(), exc.ptr());
    }
  });

  py::class_<ElementRef>(m, "Element")
      .def_readonly("id", &ElementRef::id)
      .def("__eq__", [](const ElementRef& a, const ElementRef& b) { return a == b; })
      .def("__hash__", [](const ElementRef& a) { return py::hash(py::str(a.id)); })
      .def("__repr__", [](const ElementRef& a) { return "Element(" + a.id + ")"; });
  py::class_<Invalid>(m, "Invalid")
      .def_readonly("reason", &Invalid::reason)
      .def("__bool__", [](const Invalid&) { return false; })
      .def("__repr__", [](const Invalid& i) { return "Invalid(" + i.reason + ")"; });

  m.def("parse_profile", [](const std::string& xml) {
    std::vector<Diagnostic> warnings;
    py::dict out = to_dict(parse_profile(xml, &warnings));
    out["warnings"] = to_list(warnings);
    return out;
  }, py::arg("xml"));

  m.def("lint_profile", [](const std::string& xml) {
    std::vector<Diagnostic> ds;
    const Profile p = parse_profile(xml, &ds);
    for (auto& d : lint_profile(p)) ds.push_back(std::move(d));
    sort_diagnostics(ds);
    return to_list(ds);
  }, py::arg("xml"));

  m.def("normalize_profile", [](const std::string& xml) {
    return serialize_profile(parse_profile(xml));
  }, py::arg("xml"));

  m.def("normalize_model", [](const std::string& xml) {
    return serialize_model(parse_model(xml));
  }, py::arg("xml"));

  m.def("validate", [](const std::string& model, const std::vector<std::string>& profiles,
                       const std::string& mode, bool fail_on_warning) {
    const ValidationOptions opts = options_of(mode, fail_on_warning);
    std::vector<Diagnostic> warnings;
    std::vector<Profile> parsed;
    for (const auto& text : profiles) parsed.push_back(parse_profile(text, &warnings));
    const ModelDocument doc = parse_model(model, &warnings);
    ValidationReport report = check_document(doc, make_registry(std::move(parsed)), opts);
    std::vector<Diagnostic> all = std::move(report.diagnostics);
    all.insert(all.end(), warnings.begin(), warnings.end());
    sort_diagnostics(all);
    return report_dict(ValidationReport::from(std::move(all)), opts);
  }, py::arg("model"), py::arg("profiles") = std::vector<std::string>{},
     py::arg("mode") = "strict", py::arg("fail_on_warning") = false);

  m.def("render", [](const std::string& model, const std::vector<std::string>& profiles,
                     const std::string& diagram, const std::string& display) {
    auto mode = try_parse_display_mode(display);
    if (!mode) throw py::value_error("unknown display mode: " + display);
    const ResolvedModel rm = resolve(parse_model(model), registry_of(profiles));
    return render_diagram(rm, diagram, *mode);
  }, py::arg("model"), py::arg("profiles"), py::arg("diagram"),
     py::arg("display") = "textual");

  m.def("format_constraint", [](const std::string& source) {
    return pretty_print(parse_constraint(source));
  }, py::arg("source"));

  m.def("evaluate", [](const std::string& source, const std::string& model,
                       const std::vector<std::string>& profiles, const std::string& context) {
    const ConstraintAst ast = parse_constraint(source);
    const ResolvedModel rm = resolve(parse_model(model), registry_of(profiles));
    return to_python(evaluate(ast, context, rm));
  }, py::arg("source"), py::arg("model"), py::arg("profiles"), py::arg("context"));

  m.def("builtin_profile", [] { return serialize_profile(corpus::builtin_profile()); });
  m.def("builtin_class_model", [] { return serialize_model(corpus::builtin_class_model()); });
  m.def("builtin_sequence_model",
        [] { return serialize_model(corpus::builtin_sequence_model()); });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
