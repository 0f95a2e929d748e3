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

#include <charconv>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "umlprof/constraint.hpp"
#include "umlprof/error.hpp"

namespace umlprof {

namespace {

enum class TokenKind { kIdent, kKeyword, kInt, kReal, kString, kSymbol, kEnd };

struct Token {
  TokenKind kind;
  std::string text;  // decoded for strings
  int line;
  int column;
};

bool is_keyword(std::string_view s) {
  return s == "self" || s == "true" || s == "false" || s == "and" ||
         s == "or" || s == "not" || s == "implies";
}

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

[[noreturn]] void syntax_error(std::string message, int line, int column,
                               std::vector<std::string> expected = {}) {
  std::string full = message + " at line " + std::to_string(line) +
                     ", column " + std::to_string(column);
  if (!expected.empty()) {
    full += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) full += ", ";
      full += expected[i];
    }
    full += ")";
  }
  throw Error(ErrorKind::kConstraintSyntax, std::move(full))
      .at(line, column)
      .with_expected(std::move(expected));
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const int line = line_;
      const int col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({TokenKind::kEnd, "", line, col});
        return out;
      }
      const char c = src_[pos_];
      if (is_ident_start(c)) {
        std::size_t start = pos_;
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance();
        std::string word(src_.substr(start, pos_ - start));
        out.push_back({is_keyword(word) ? TokenKind::kKeyword : TokenKind::kIdent,
                       std::move(word), line, col});
      } else if (is_digit(c)) {
        std::size_t start = pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
        bool real = false;
        if (pos_ + 1 < src_.size() && src_[pos_] == '.' && is_digit(src_[pos_ + 1])) {
          real = true;
          advance();
          while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
        }
        out.push_back({real ? TokenKind::kReal : TokenKind::kInt,
                       std::string(src_.substr(start, pos_ - start)), line, col});
      } else if (c == '\'') {
        out.push_back({TokenKind::kString, read_string(line, col), line, col});
      } else {
        out.push_back({TokenKind::kSymbol, read_symbol(line, col), line, col});
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
            src_[pos_] == '\r')) {
      advance();
    }
  }

  std::string read_string(int line, int col) {
    advance();  // opening quote
    std::string value;
    for (;;) {
      if (pos_ >= src_.size()) syntax_error("unterminated string literal", line, col);
      const char c = src_[pos_];
      if (c == '\'') {
        advance();
        return value;
      }
      if (c == '\\') {
        advance();
        if (pos_ >= src_.size()) syntax_error("unterminated string literal", line, col);
        const char e = src_[pos_];
        switch (e) {
          case '\\': value += '\\'; break;
          case '\'': value += '\''; break;
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          default:
            syntax_error(std::string("unknown escape sequence '\\") + e + "'",
                         line_, col_);
        }
        advance();
        continue;
      }
      value += c;
      advance();
    }
  }

  std::string read_symbol(int line, int col) {
    static constexpr std::string_view kTwoChar[] = {"->", "<>", "<=", ">="};
    for (auto sym : kTwoChar) {
      if (src_.substr(pos_, 2) == sym) {
        advance();
        advance();
        return std::string(sym);
      }
    }
    const char c = src_[pos_];
    static constexpr std::string_view kOneChar = ".()|=<>+-*/";
    if (kOneChar.find(c) == std::string_view::npos) {
      syntax_error(std::string("unexpected character '") + c + "'", line, col);
    }
    advance();
    return std::string(1, c);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ast::ExprPtr parse_all() {
    ast::ExprPtr e = parse_implies();
    if (peek().kind != TokenKind::kEnd) {
      note("end of input");
      fail();
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  void note(std::string what) {
    if (expected_pos_ != pos_) {
      expected_.clear();
      expected_pos_ = pos_;
    }
    expected_.insert(std::move(what));
  }

  bool check_symbol(std::string_view sym) {
    note("'" + std::string(sym) + "'");
    return peek().kind == TokenKind::kSymbol && peek().text == sym;
  }

  bool check_keyword(std::string_view kw) {
    note("'" + std::string(kw) + "'");
    return peek().kind == TokenKind::kKeyword && peek().text == kw;
  }

  bool accept_symbol(std::string_view sym) {
    if (!check_symbol(sym)) return false;
    ++pos_;
    return true;
  }

  bool accept_keyword(std::string_view kw) {
    if (!check_keyword(kw)) return false;
    ++pos_;
    return true;
  }

  void expect_symbol(std::string_view sym) {
    if (!accept_symbol(sym)) fail();
  }

  std::string expect_ident() {
    note("identifier");
    if (peek().kind != TokenKind::kIdent) fail();
    return tokens_[pos_++].text;
  }

  [[noreturn]] void fail() {
    const Token& t = peek();
    std::vector<std::string> expected;
    if (expected_pos_ == pos_) expected.assign(expected_.begin(), expected_.end());
    std::string what = t.kind == TokenKind::kEnd
                           ? "unexpected end of input"
                           : "unexpected token '" + describe(t) + "'";
    syntax_error(std::move(what), t.line, t.column, std::move(expected));
  }

  static std::string describe(const Token& t) {
    if (t.kind == TokenKind::kString) return "'" + t.text + "'";
    return t.text;
  }

  ast::ExprPtr parse_implies() {
    ast::ExprPtr lhs = parse_or();
    while (accept_keyword("implies")) {
      lhs = ast::binary(ast::BinaryOp::kImplies, lhs, parse_or());
    }
    return lhs;
  }

  ast::ExprPtr parse_or() {
    ast::ExprPtr lhs = parse_and();
    while (accept_keyword("or")) {
      lhs = ast::binary(ast::BinaryOp::kOr, lhs, parse_and());
    }
    return lhs;
  }

  ast::ExprPtr parse_and() {
    ast::ExprPtr lhs = parse_not();
    while (accept_keyword("and")) {
      lhs = ast::binary(ast::BinaryOp::kAnd, lhs, parse_not());
    }
    return lhs;
  }

  ast::ExprPtr parse_not() {
    if (accept_keyword("not")) return ast::unary(ast::UnaryOp::kNot, parse_not());
    return parse_cmp();
  }

  ast::ExprPtr parse_cmp() {
    ast::ExprPtr lhs = parse_add();
    static constexpr std::pair<std::string_view, ast::BinaryOp> kOps[] = {
        {"=", ast::BinaryOp::kEq},  {"<>", ast::BinaryOp::kNe},
        {"<", ast::BinaryOp::kLt},  {"<=", ast::BinaryOp::kLe},
        {">", ast::BinaryOp::kGt},  {">=", ast::BinaryOp::kGe},
    };
    for (const auto& [sym, op] : kOps) {
      if (accept_symbol(sym)) return ast::binary(op, lhs, parse_add());
    }
    return lhs;
  }

  ast::ExprPtr parse_add() {
    ast::ExprPtr lhs = parse_mul();
    for (;;) {
      if (accept_symbol("+")) {
        lhs = ast::binary(ast::BinaryOp::kAdd, lhs, parse_mul());
      } else if (accept_symbol("-")) {
        lhs = ast::binary(ast::BinaryOp::kSub, lhs, parse_mul());
      } else {
        return lhs;
      }
    }
  }

  ast::ExprPtr parse_mul() {
    ast::ExprPtr lhs = parse_unary();
    for (;;) {
      if (accept_symbol("*")) {
        lhs = ast::binary(ast::BinaryOp::kMul, lhs, parse_unary());
      } else if (accept_symbol("/")) {
        lhs = ast::binary(ast::BinaryOp::kDiv, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  ast::ExprPtr parse_unary() {
    if (accept_symbol("-")) return ast::unary(ast::UnaryOp::kNegate, parse_unary());
    return parse_postfix();
  }

  ast::ExprPtr parse_postfix() {
    ast::ExprPtr e = parse_primary();
    for (;;) {
      if (accept_symbol(".")) {
        std::string name = expect_ident();
        if (name == "nav" && accept_symbol("(")) {
          note("string");
          if (peek().kind != TokenKind::kString) fail();
          std::string role = tokens_[pos_++].text;
          expect_symbol(")");
          e = ast::nav(e, std::move(role), true);
        } else if (auto p = try_parse_property(name)) {
          e = ast::property(e, *p);
        } else {
          e = ast::nav(e, std::move(name), false);
        }
      } else if (accept_symbol("->")) {
        e = parse_collection_call(e);
      } else {
        return e;
      }
    }
  }

  ast::ExprPtr parse_collection_call(ast::ExprPtr source) {
    for (auto op : {ast::CollectionOp::kSize, ast::CollectionOp::kIsEmpty,
                    ast::CollectionOp::kNotEmpty, ast::CollectionOp::kExists,
                    ast::CollectionOp::kForAll, ast::CollectionOp::kSelect}) {
      note("'" + std::string(ast::to_string(op)) + "'");
    }
    if (peek().kind != TokenKind::kIdent) fail();
    auto op = ast::try_parse_collection_op(peek().text);
    if (!op) fail();
    ++pos_;
    expect_symbol("(");
    if (!ast::is_iterator(*op)) {
      expect_symbol(")");
      return ast::call(std::move(source), *op);
    }
    std::string var = expect_ident();
    expect_symbol("|");
    scopes_.push_back(var);
    ast::ExprPtr body = parse_implies();
    scopes_.pop_back();
    expect_symbol(")");
    return ast::iterate(std::move(source), *op, std::move(var), std::move(body));
  }

  ast::ExprPtr parse_primary() {
    const Token& t = peek();
    note("'self'");
    note("'true'");
    note("'false'");
    note("'('");
    note("identifier");
    note("integer");
    note("real");
    note("string");
    switch (t.kind) {
      case TokenKind::kKeyword:
        if (t.text == "self") {
          ++pos_;
          return ast::self();
        }
        if (t.text == "true" || t.text == "false") {
          ++pos_;
          return ast::boolean(t.text == "true");
        }
        fail();
      case TokenKind::kIdent: {
        bool bound = false;
        for (const auto& s : scopes_) bound = bound || s == t.text;
        if (!bound) {
          throw Error(ErrorKind::kUnboundVariable,
                      "unbound variable '" + t.text + "' at line " +
                          std::to_string(t.line) + ", column " +
                          std::to_string(t.column))
              .at(t.line, t.column)
              .with_subject(t.text);
        }
        ++pos_;
        return ast::var(t.text);
      }
      case TokenKind::kInt: {
        std::int64_t v = 0;
        auto [ptr, ec] =
            std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
          syntax_error("integer literal out of range", t.line, t.column);
        }
        ++pos_;
        return ast::integer(v);
      }
      case TokenKind::kReal: {
        double v = 0;
        auto [ptr, ec] =
            std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
          syntax_error("real literal out of range", t.line, t.column);
        }
        ++pos_;
        return ast::real(v);
      }
      case TokenKind::kString:
        ++pos_;
        return ast::string(t.text);
      case TokenKind::kSymbol:
        if (t.text == "(") {
          ++pos_;
          ast::ExprPtr e = parse_implies();
          expect_symbol(")");
          return e;
        }
        fail();
      case TokenKind::kEnd:
        fail();
    }
    fail();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::set<std::string> expected_;
  std::size_t expected_pos_ = static_cast<std::size_t>(-1);
  std::vector<std::string> scopes_;
};

}  // namespace

ConstraintAst parse_constraint(std::string_view source) {
  Parser parser(Lexer(source).run());
  return ConstraintAst{parser.parse_all()};
}

}  // namespace umlprof
