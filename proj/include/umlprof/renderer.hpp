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
#include <string>
#include <string_view>

#include "umlprof/model.hpp"

namespace umlprof {

// How applied stereotypes are shown: `<<Name>>`, `[icon:ID]`, or both.
enum class DisplayMode { kTextual, kIconic, kDecoration };

std::string_view to_string(DisplayMode m);
std::optional<DisplayMode> try_parse_display_mode(std::string_view s);

// DOT digraph: one box node per member (stereotype lines, name, attributes)
// and one undirected edge per association with both ends on the diagram.
// Nodes and edges come out in ascending id order.
//
// Throws Error{kUnknownDiagram} / Error{kWrongDiagramKind}.
std::string render_class_diagram(const ResolvedModel& rm,
                                 std::string_view diagram_id,
                                 DisplayMode mode);

// Plain-text trace: `sequence <id>`, one `lifeline ...` line per lifeline in
// declaration order, then `seq. from -> to : label` per message by seq
// (returns use `-->`).
std::string render_sequence_diagram(const ResolvedModel& rm,
                                    std::string_view diagram_id,
                                    DisplayMode mode);

// Dispatches on the diagram kind.
std::string render_diagram(const ResolvedModel& rm, std::string_view diagram_id,
                           DisplayMode mode);

}  // namespace umlprof
