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

// Minimal element tree over Expat, plus a canonical writer. Internal to the
// library.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace umlprof::xml {

struct Node {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Node> children;
  std::string text;  // concatenated character data directly inside
  int line = 0;
  int column = 0;

  std::optional<std::string_view> attribute(std::string_view key) const;
  const Node* child(std::string_view child_name) const;
  // Trimmed character data.
  std::string_view trimmed_text() const;
};

// Throws Error{kXmlMalformed} with Expat's position and message.
Node parse(std::string_view document);

std::string escape_text(std::string_view s);
std::string escape_attribute(std::string_view s);

// Writes 2-space indented UTF-8 XML with a declaration line.
class Writer {
 public:
  Writer();

  void open(std::string_view name,
            const std::vector<std::pair<std::string_view, std::string_view>>&
                attributes = {});
  void close(std::string_view name);
  void empty(std::string_view name,
             const std::vector<std::pair<std::string_view, std::string_view>>&
                 attributes = {});
  void text_element(std::string_view name, std::string_view text);

  std::string finish() { return std::move(out_); }

 private:
  void indent();
  void write_tag_body(
      std::string_view name,
      const std::vector<std::pair<std::string_view, std::string_view>>&
          attributes);

  std::string out_;
  int depth_ = 0;
};

}  // namespace umlprof::xml
