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

#include "umlprof/diagnostic.hpp"

#include <algorithm>
#include <utility>

#include "json.hpp"

namespace umlprof {

std::string_view to_string(Severity s) {
  return s == Severity::kError ? "error" : "warning";
}

Severity Diagnostic::severity() const {
  return !code.empty() && code.front() == 'W' ? Severity::kWarning
                                               : Severity::kError;
}

Diagnostic make_diagnostic(std::string_view code, std::string message,
                           std::optional<std::string> element,
                           std::map<std::string, std::string> detail) {
  return Diagnostic{std::string(code), std::move(message), std::move(element),
                    std::move(detail)};
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     const std::string_view ea = a.element.value_or("");
                     const std::string_view eb = b.element.value_or("");
                     if (a.element.has_value() != b.element.has_value()) {
                       return !a.element.has_value();
                     }
                     if (ea != eb) return ea < eb;
                     return a.code < b.code;
                   });
}

std::set<std::string> code_set(const std::vector<Diagnostic>& diagnostics) {
  std::set<std::string> out;
  for (const auto& d : diagnostics) out.insert(d.code);
  return out;
}

ValidationReport ValidationReport::from(std::vector<Diagnostic> diagnostics) {
  ValidationReport r;
  r.append(diagnostics);
  return r;
}

void ValidationReport::append(const std::vector<Diagnostic>& more) {
  for (const auto& d : more) {
    (d.severity() == Severity::kError ? errors : warnings) += 1;
    diagnostics.push_back(d);
  }
}

std::string ValidationReport::to_text() const {
  std::string out;
  for (const auto& d : diagnostics) {
    out += d.code;
    out += ' ';
    out += to_string(d.severity());
    out += ' ';
    out += d.element.value_or("-");
    out += ": ";
    out += d.message;
    out += '\n';
  }
  out += std::to_string(errors) + (errors == 1 ? " error, " : " errors, ");
  out += std::to_string(warnings) + (warnings == 1 ? " warning\n" : " warnings\n");
  return out;
}

std::string ValidationReport::to_json() const {
  auto array = nlohmann::ordered_json::array();
  for (const auto& d : diagnostics) {
    nlohmann::ordered_json entry;
    entry["code"] = d.code;
    entry["severity"] = std::string(to_string(d.severity()));
    if (d.element) {
      entry["element"] = *d.element;
    } else {
      entry["element"] = nullptr;
    }
    entry["message"] = d.message;
    array.push_back(std::move(entry));
  }
  return array.dump(2) + "\n";
}

}  // namespace umlprof
