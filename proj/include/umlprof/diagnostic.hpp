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

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace umlprof {

enum class Severity { kError, kWarning };

std::string_view to_string(Severity s);

// Stable diagnostic codes. Tests and tooling match on these, never on the
// message wording.
namespace codes {
inline constexpr std::string_view kUnknownXmlElement = "W001";

inline constexpr std::string_view kDuplicateStereotype = "E101";
inline constexpr std::string_view kUnresolvedReference = "E102";
inline constexpr std::string_view kEmptyBaseClasses = "E103";
inline constexpr std::string_view kDuplicateTag = "E104";
inline constexpr std::string_view kEnumDefaultNotChoice = "E105";
inline constexpr std::string_view kDuplicateConstraint = "E106";
inline constexpr std::string_view kTagDefaultMistyped = "E107";
inline constexpr std::string_view kEnumChoicesMismatch = "E108";

inline constexpr std::string_view kNotApplicable = "E201";
inline constexpr std::string_view kTooManyStereotypes = "E202";

inline constexpr std::string_view kConstraintViolated = "E301";
inline constexpr std::string_view kConstraintInvalid = "E302";
inline constexpr std::string_view kConstraintNotBoolean = "E303";

inline constexpr std::string_view kTagValueMistyped = "E401";
inline constexpr std::string_view kUnknownTag = "E402";
inline constexpr std::string_view kMissingTag = "E403";

inline constexpr std::string_view kDanglingAssociationEnd = "E501";
inline constexpr std::string_view kMessageEndpointNotLifeline = "E502";
inline constexpr std::string_view kDuplicateMessageSeq = "E503";
inline constexpr std::string_view kUnknownDiagramMember = "E504";
inline constexpr std::string_view kOwnerCycle = "E505";
inline constexpr std::string_view kDanglingOwner = "E506";
}  // namespace codes

struct Diagnostic {
  std::string code;
  std::string message;
  std::optional<std::string> element;
  // Structured payload: stereotype, constraint, expected, actual, ...
  std::map<std::string, std::string> detail;

  // Derived from the code prefix: E* is an error, W* a warning.
  Severity severity() const;

  bool operator==(const Diagnostic&) const = default;
};

Diagnostic make_diagnostic(std::string_view code, std::string message,
                           std::optional<std::string> element = std::nullopt,
                           std::map<std::string, std::string> detail = {});

// Orders by (element id, code); diagnostics without an element sort first.
// Stable, so rule order survives among ties.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

std::set<std::string> code_set(const std::vector<Diagnostic>& diagnostics);

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;
  std::size_t errors = 0;
  std::size_t warnings = 0;

  static ValidationReport from(std::vector<Diagnostic> diagnostics);

  void append(const std::vector<Diagnostic>& more);

  // `CODE severity element: message` per line, then a summary line.
  std::string to_text() const;
  // JSON array of {code, severity, element, message}.
  std::string to_json() const;
};

}  // namespace umlprof
