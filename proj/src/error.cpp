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

#include "umlprof/error.hpp"

#include <utility>

namespace umlprof {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kXmlMalformed:
      return "xml-malformed";
    case ErrorKind::kUnknownMetaclass:
      return "unknown-metaclass";
    case ErrorKind::kConstraintSyntax:
      return "constraint-syntax";
    case ErrorKind::kUnboundVariable:
      return "unbound-variable";
    case ErrorKind::kMissingElement:
      return "missing-required-element";
    case ErrorKind::kInvalidValue:
      return "invalid-value";
    case ErrorKind::kDuplicateId:
      return "duplicate-id";
    case ErrorKind::kUnknownDiagram:
      return "unknown-diagram";
    case ErrorKind::kWrongDiagramKind:
      return "wrong-diagram-kind";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, std::string message)
    : std::runtime_error(std::move(message)), kind_(kind) {}

Error& Error::at(int line, int column) {
  line_ = line;
  column_ = column;
  return *this;
}

Error& Error::with_subject(std::string subject) {
  subject_ = std::move(subject);
  return *this;
}

Error& Error::with_context(std::string context) {
  context_ = std::move(context);
  return *this;
}

Error& Error::with_expected(std::vector<std::string> expected) {
  expected_ = std::move(expected);
  return *this;
}

}  // namespace umlprof
