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

// A small OCL subset for stereotype constraints.
//
//   expr     := implies
//   implies  := or ("implies" or)*
//   or       := and ("or" and)*
//   and      := not ("and" not)*
//   not      := "not" not | cmp
//   cmp      := add (("=" | "<>" | "<" | "<=" | ">" | ">=") add)?
//   add      := mul (("+" | "-") mul)*
//   mul      := unary (("*" | "/") unary)*
//   unary    := "-" unary | postfix
//   postfix  := primary ( "." IDENT | "." "nav" "(" STRING ")"
//                       | "->" IDENT "(" (IDENT "|" expr)? ")" )*
//   primary  := "self" | IDENT | INT | REAL | STRING | "true" | "false"
//             | "(" expr ")"
//
// `.name`, `.metaclass`, `.attributes` and `.stereotypes` read element
// properties; any other `.ident` navigates associations by far-end role,
// exactly like `.nav('ident')`.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "umlprof/metamodel.hpp"

namespace umlprof {

class ResolvedModel;

namespace ast {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct BoolLiteral {
  bool value;
};
struct IntLiteral {
  std::int64_t value;  // always >= 0; negation is a Unary node
};
struct RealLiteral {
  double value;  // always >= 0
};
struct StringLiteral {
  std::string value;
};
struct SelfRef {};
struct VarRef {
  std::string name;
};
struct PropertyAccess {
  ExprPtr object;
  ElementProperty property;
};
struct Navigation {
  ExprPtr object;
  std::string role;
  bool call_syntax;  // written as .nav('role') rather than .role
};

enum class UnaryOp { kNot, kNegate };
struct Unary {
  UnaryOp op;
  ExprPtr operand;
};

enum class BinaryOp {
  kImplies,
  kOr,
  kAnd,
  kEq,
  kNe,
  kLt,
  kLe,
  kGt,
  kGe,
  kAdd,
  kSub,
  kMul,
  kDiv,
};
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

enum class CollectionOp { kSize, kIsEmpty, kNotEmpty, kExists, kForAll, kSelect };
struct CollectionCall {
  ExprPtr source;
  CollectionOp op;
  std::string variable;  // iterator ops only
  ExprPtr body;          // iterator ops only
};

struct Expr {
  std::variant<BoolLiteral, IntLiteral, RealLiteral, StringLiteral, SelfRef,
               VarRef, PropertyAccess, Navigation, Unary, Binary,
               CollectionCall>
      node;
};

// Deep structural equality; source positions and parentheses are not part
// of the tree.
bool operator==(const Expr& a, const Expr& b);

std::string_view to_string(BinaryOp op);
std::string_view to_string(CollectionOp op);
bool is_iterator(CollectionOp op);
std::optional<CollectionOp> try_parse_collection_op(std::string_view name);

// Convenience constructors, used by tests and generators.
ExprPtr make(decltype(Expr::node) node);
ExprPtr boolean(bool v);
ExprPtr integer(std::int64_t v);
ExprPtr real(double v);
ExprPtr string(std::string v);
ExprPtr self();
ExprPtr var(std::string name);
ExprPtr property(ExprPtr object, ElementProperty p);
ExprPtr nav(ExprPtr object, std::string role, bool call_syntax = false);
ExprPtr unary(UnaryOp op, ExprPtr operand);
ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr call(ExprPtr source, CollectionOp op);
ExprPtr iterate(ExprPtr source, CollectionOp op, std::string variable,
                ExprPtr body);

}  // namespace ast

struct ConstraintAst {
  ast::ExprPtr root;

  friend bool operator==(const ConstraintAst& a, const ConstraintAst& b) {
    if (!a.root || !b.root) return a.root == b.root;
    return *a.root == *b.root;
  }
};

// Throws Error{kConstraintSyntax} (with line, column and expected tokens) or
// Error{kUnboundVariable}.
ConstraintAst parse_constraint(std::string_view source);

// Canonical text; parse_constraint(pretty_print(a)) == a.
std::string pretty_print(const ConstraintAst& ast);
std::string pretty_print(const ast::Expr& expr);

// Evaluation result. Invalid is in-band failure: it absorbs every operator
// except the short-circuit cases of and/or/implies.
struct Invalid {
  std::string reason;
};
struct ElementRef {
  std::string id;
  bool operator==(const ElementRef&) const = default;
};

class Value {
 public:
  using Collection = std::vector<Value>;
  using Storage = std::variant<bool, std::int64_t, double, std::string,
                               Collection, ElementRef, Invalid>;

  Value(bool b) : v_(b) {}  // NOLINT
  Value(int i) : v_(std::int64_t{i}) {}  // NOLINT
  Value(std::int64_t i) : v_(i) {}  // NOLINT
  Value(double d) : v_(d) {}  // NOLINT
  Value(const char* s) : v_(std::string(s)) {}  // NOLINT
  Value(std::string s) : v_(std::move(s)) {}  // NOLINT
  Value(Collection c) : v_(std::move(c)) {}  // NOLINT
  Value(ElementRef e) : v_(std::move(e)) {}  // NOLINT
  Value(Invalid i) : v_(std::move(i)) {}  // NOLINT

  static Value invalid(std::string reason) { return Invalid{std::move(reason)}; }

  const Storage& storage() const { return v_; }

  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_real() const { return std::holds_alternative<double>(v_); }
  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_collection() const { return std::holds_alternative<Collection>(v_); }
  bool is_element() const { return std::holds_alternative<ElementRef>(v_); }
  bool is_invalid() const { return std::holds_alternative<Invalid>(v_); }

  bool as_bool() const { return std::get<bool>(v_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  double as_real() const { return std::get<double>(v_); }
  const std::string& as_string() const { return std::get<std::string>(v_); }
  const Collection& as_collection() const { return std::get<Collection>(v_); }
  const ElementRef& as_element() const { return std::get<ElementRef>(v_); }
  const std::string& invalid_reason() const { return std::get<Invalid>(v_).reason; }

  std::string_view type_name() const;

  // Debug rendering, e.g. `Bool(true)`, `Collection[Str("a")]`.
  std::string to_string() const;

  // Structural identity for tests; two Invalids are identical when their
  // reasons match. The constraint language's `=` is a different relation.
  bool identical(const Value& other) const;

 private:
  Storage v_;
};

// Evaluates with `self` bound to the element (or association) `context`.
Value evaluate(const ConstraintAst& ast, std::string_view context,
               const ResolvedModel& model);

}  // namespace umlprof
