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
#include <string>

#include "umlprof/constraint.hpp"

namespace umlprof {

namespace {

// Binding strength, loosest first; mirrors the grammar's rule nesting.
enum Level : int {
  kImplies = 1,
  kOr,
  kAnd,
  kNot,
  kCmp,
  kAdd,
  kMul,
  kUnary,
  kPostfix,
  kPrimary,
};

int binary_level(ast::BinaryOp op) {
  switch (op) {
    case ast::BinaryOp::kImplies: return kImplies;
    case ast::BinaryOp::kOr: return kOr;
    case ast::BinaryOp::kAnd: return kAnd;
    case ast::BinaryOp::kEq:
    case ast::BinaryOp::kNe:
    case ast::BinaryOp::kLt:
    case ast::BinaryOp::kLe:
    case ast::BinaryOp::kGt:
    case ast::BinaryOp::kGe: return kCmp;
    case ast::BinaryOp::kAdd:
    case ast::BinaryOp::kSub: return kAdd;
    case ast::BinaryOp::kMul:
    case ast::BinaryOp::kDiv: return kMul;
  }
  return kPrimary;
}

int level_of(const ast::Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::Binary>) {
          return binary_level(n.op);
        } else if constexpr (std::is_same_v<T, ast::Unary>) {
          return n.op == ast::UnaryOp::kNot ? kNot : kUnary;
        } else if constexpr (std::is_same_v<T, ast::PropertyAccess> ||
                             std::is_same_v<T, ast::Navigation> ||
                             std::is_same_v<T, ast::CollectionCall>) {
          return kPostfix;
        } else {
          return kPrimary;
        }
      },
      e.node);
}

std::string quote(std::string_view s) {
  std::string out = "'";
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\'': out += "\\'"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '\'';
  return out;
}

std::string format_real(double v) {
  char buf[512];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  std::string s = ec == std::errc() ? std::string(buf, ptr) : std::to_string(v);
  if (s.find('.') == std::string::npos) s += ".0";
  return s;
}

void print(const ast::Expr& e, int min_level, std::string& out);

void print_child(const ast::ExprPtr& e, int min_level, std::string& out) {
  print(*e, min_level, out);
}

void print_bare(const ast::Expr& e, std::string& out) {
  std::visit(
      [&out](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::BoolLiteral>) {
          out += n.value ? "true" : "false";
        } else if constexpr (std::is_same_v<T, ast::IntLiteral>) {
          out += std::to_string(n.value);
        } else if constexpr (std::is_same_v<T, ast::RealLiteral>) {
          out += format_real(n.value);
        } else if constexpr (std::is_same_v<T, ast::StringLiteral>) {
          out += quote(n.value);
        } else if constexpr (std::is_same_v<T, ast::SelfRef>) {
          out += "self";
        } else if constexpr (std::is_same_v<T, ast::VarRef>) {
          out += n.name;
        } else if constexpr (std::is_same_v<T, ast::PropertyAccess>) {
          print_child(n.object, kPostfix, out);
          out += '.';
          out += to_string(n.property);
        } else if constexpr (std::is_same_v<T, ast::Navigation>) {
          print_child(n.object, kPostfix, out);
          if (n.call_syntax) {
            out += ".nav(" + quote(n.role) + ")";
          } else {
            out += '.';
            out += n.role;
          }
        } else if constexpr (std::is_same_v<T, ast::Unary>) {
          if (n.op == ast::UnaryOp::kNot) {
            out += "not ";
            print_child(n.operand, kNot, out);
          } else {
            out += '-';
            print_child(n.operand, kUnary, out);
          }
        } else if constexpr (std::is_same_v<T, ast::Binary>) {
          const int level = binary_level(n.op);
          // Comparisons do not chain; everything else is left-associative.
          print_child(n.lhs, level == kCmp ? level + 1 : level, out);
          out += ' ';
          out += to_string(n.op);
          out += ' ';
          print_child(n.rhs, level + 1, out);
        } else if constexpr (std::is_same_v<T, ast::CollectionCall>) {
          print_child(n.source, kPostfix, out);
          out += "->";
          out += to_string(n.op);
          out += '(';
          if (ast::is_iterator(n.op)) {
            out += n.variable;
            out += " | ";
            print_child(n.body, kImplies, out);
          }
          out += ')';
        }
      },
      e.node);
}

void print(const ast::Expr& e, int min_level, std::string& out) {
  if (level_of(e) < min_level) {
    out += '(';
    print_bare(e, out);
    out += ')';
  } else {
    print_bare(e, out);
  }
}

}  // namespace

std::string pretty_print(const ast::Expr& expr) {
  std::string out;
  print(expr, kImplies, out);
  return out;
}

std::string pretty_print(const ConstraintAst& ast) {
  return ast.root ? pretty_print(*ast.root) : std::string();
}

}  // namespace umlprof
