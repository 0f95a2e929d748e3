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

#include <optional>
#include <string_view>
#include <vector>

#include "umlprof/diagnostic.hpp"
#include "umlprof/model.hpp"

namespace umlprof {

enum class StereotypeMode {
  kStrict,  // at most one stereotype per element, as StarUML enforces
  kUml2,
};

std::string_view to_string(StereotypeMode m);
std::optional<StereotypeMode> try_parse_stereotype_mode(std::string_view s);

struct ValidationOptions {
  StereotypeMode stereotype_mode = StereotypeMode::kStrict;
  bool fail_on_warning = false;
};

// E201: target metaclass conforms to none of the stereotype's base classes.
std::vector<Diagnostic> check_applicability(const ResolvedModel& rm);

// E202 (strict mode only): two or more applications on one element.
std::vector<Diagnostic> check_stereotype_count(const ResolvedModel& rm,
                                               const ValidationOptions& opts);

// E401 mistyped value, E402 undeclared tag, E403 missing tag with no default.
std::vector<Diagnostic> check_tags(const ResolvedModel& rm);

// E301 false, E302 Invalid, E303 non-boolean result.
std::vector<Diagnostic> check_constraints(const ResolvedModel& rm);

// E501..E506 structural findings.
std::vector<Diagnostic> check_wellformed(const ModelDocument& m);

ValidationReport check_document(const ModelDocument& m,
                                const ProfileRegistry& registry,
                                const ValidationOptions& opts = {});

// 0 clean, 1 errors (or warnings under fail_on_warning).
int exit_status(const ValidationReport& report, const ValidationOptions& opts);

}  // namespace umlprof
