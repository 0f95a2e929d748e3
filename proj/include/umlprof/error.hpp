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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace umlprof {

enum class ErrorKind {
  kXmlMalformed,
  kUnknownMetaclass,
  kConstraintSyntax,
  kUnboundVariable,
  kMissingElement,
  kInvalidValue,
  kDuplicateId,
  kUnknownDiagram,
  kWrongDiagramKind,
};

std::string_view to_string(ErrorKind kind);

// Hard failure raised by the parsers and renderers. Validation findings are
// never reported this way; they travel as Diagnostic values.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message);

  ErrorKind kind() const { return kind_; }

  // 1-based source position; 0 when unknown.
  int line() const { return line_; }
  int column() const { return column_; }
  Error& at(int line, int column);

  // The offending token or name (e.g. an unknown metaclass spelling).
  const std::string& subject() const { return subject_; }
  Error& with_subject(std::string subject);

  // Enclosing named item, e.g. the stereotype or constraint being read.
  const std::string& context() const { return context_; }
  Error& with_context(std::string context);

  // Tokens the constraint parser would have accepted at the error position.
  const std::vector<std::string>& expected() const { return expected_; }
  Error& with_expected(std::vector<std::string> expected);

 private:
  ErrorKind kind_;
  int line_ = 0;
  int column_ = 0;
  std::string subject_;
  std::string context_;
  std::vector<std::string> expected_;
};

}  // namespace umlprof
