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

#include "xml.hpp"

#include <expat.h>

#include <limits>
#include <memory>
#include <string>

#include "umlprof/error.hpp"

namespace umlprof::xml {

namespace {

struct ParseState {
  XML_Parser parser = nullptr;
  std::vector<Node> stack;
  std::optional<Node> root;
  std::string abort_reason;
};

void on_start(void* user, const XML_Char* name, const XML_Char** attrs) {
  auto* st = static_cast<ParseState*>(user);
  Node node;
  node.name = name;
  node.line = static_cast<int>(XML_GetCurrentLineNumber(st->parser));
  node.column = static_cast<int>(XML_GetCurrentColumnNumber(st->parser)) + 1;
  for (int i = 0; attrs[i] != nullptr; i += 2) {
    node.attributes.emplace_back(attrs[i], attrs[i + 1]);
  }
  st->stack.push_back(std::move(node));
}

void on_end(void* user, const XML_Char* /*name*/) {
  auto* st = static_cast<ParseState*>(user);
  Node done = std::move(st->stack.back());
  st->stack.pop_back();
  if (st->stack.empty()) {
    st->root = std::move(done);
  } else {
    st->stack.back().children.push_back(std::move(done));
  }
}

void on_text(void* user, const XML_Char* s, int len) {
  auto* st = static_cast<ParseState*>(user);
  if (!st->stack.empty()) st->stack.back().text.append(s, static_cast<std::size_t>(len));
}

void on_doctype(void* user, const XML_Char* /*name*/, const XML_Char*,
                const XML_Char*, int) {
  auto* st = static_cast<ParseState*>(user);
  st->abort_reason = "document type declarations are not supported";
  XML_StopParser(st->parser, XML_FALSE);
}

struct ParserDeleter {
  void operator()(XML_ParserStruct* p) const { XML_ParserFree(p); }
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

std::optional<std::string_view> Node::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return std::string_view(v);
  }
  return std::nullopt;
}

const Node* Node::child(std::string_view child_name) const {
  for (const auto& c : children) {
    if (c.name == child_name) return &c;
  }
  return nullptr;
}

std::string_view Node::trimmed_text() const {
  std::string_view s = text;
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

Node parse(std::string_view document) {
  if (document.size() > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
    throw Error(ErrorKind::kXmlMalformed, "document too large");
  }
  std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(
      XML_ParserCreate("UTF-8"));
  ParseState st;
  st.parser = parser.get();
  XML_SetUserData(parser.get(), &st);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);
  XML_SetStartDoctypeDeclHandler(parser.get(), on_doctype);

  const auto status = XML_Parse(parser.get(), document.data(),
                                static_cast<int>(document.size()), XML_TRUE);
  if (status != XML_STATUS_OK) {
    const int line = static_cast<int>(XML_GetCurrentLineNumber(parser.get()));
    const int column =
        static_cast<int>(XML_GetCurrentColumnNumber(parser.get())) + 1;
    std::string reason = st.abort_reason.empty()
                             ? XML_ErrorString(XML_GetErrorCode(parser.get()))
                             : st.abort_reason;
    throw Error(ErrorKind::kXmlMalformed,
                "malformed XML at line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + reason)
        .at(line, column);
  }
  if (!st.root) throw Error(ErrorKind::kXmlMalformed, "no root element");
  return std::move(*st.root);
}

std::string escape_text(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '\r': out += "&#13;"; break;
      case '>':
        // Only the `]]>` sequence is illegal in character data.
        out += i >= 2 && s[i - 1] == ']' && s[i - 2] == ']' ? "&gt;" : ">";
        break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_attribute(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      case '\t': out += "&#9;"; break;
      default: out += c;
    }
  }
  return out;
}

Writer::Writer() { out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"; }

void Writer::indent() { out_.append(static_cast<std::size_t>(depth_) * 2, ' '); }

void Writer::write_tag_body(
    std::string_view name,
    const std::vector<std::pair<std::string_view, std::string_view>>&
        attributes) {
  out_ += '<';
  out_ += name;
  for (const auto& [k, v] : attributes) {
    out_ += ' ';
    out_ += k;
    out_ += "=\"";
    out_ += escape_attribute(v);
    out_ += '"';
  }
}

void Writer::open(
    std::string_view name,
    const std::vector<std::pair<std::string_view, std::string_view>>&
        attributes) {
  indent();
  write_tag_body(name, attributes);
  out_ += ">\n";
  ++depth_;
}

void Writer::close(std::string_view name) {
  --depth_;
  indent();
  out_ += "</";
  out_ += name;
  out_ += ">\n";
}

void Writer::empty(
    std::string_view name,
    const std::vector<std::pair<std::string_view, std::string_view>>&
        attributes) {
  indent();
  write_tag_body(name, attributes);
  out_ += "/>\n";
}

void Writer::text_element(std::string_view name, std::string_view text) {
  indent();
  out_ += '<';
  out_ += name;
  out_ += '>';
  out_ += escape_text(text);
  out_ += "</";
  out_ += name;
  out_ += ">\n";
}

}  // namespace umlprof::xml
