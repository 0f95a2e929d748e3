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

#include <utility>

#include "umlprof/constraint.hpp"

namespace umlprof::ast {

namespace {

bool same(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  return *a == *b;
}

struct EqualVisitor {
  const Expr& other;

  template <typename T>
  const T& rhs() const {
    return std::get<T>(other.node);
  }

  bool operator()(const BoolLiteral& a) const { return a.value == rhs<BoolLiteral>().value; }
  bool operator()(const IntLiteral& a) const { return a.value == rhs<IntLiteral>().value; }
  bool operator()(const RealLiteral& a) const { return a.value == rhs<RealLiteral>().value; }
  bool operator()(const StringLiteral& a) const { return a.value == rhs<StringLiteral>().value; }
  bool operator()(const SelfRef&) const { return true; }
  bool operator()(const VarRef& a) const { return a.name == rhs<VarRef>().name; }
  bool operator()(const PropertyAccess& a) const {
    const auto& b = rhs<PropertyAccess>();
    return a.property == b.property && same(a.object, b.object);
  }
  bool operator()(const Navigation& a) const {
    const auto& b = rhs<Navigation>();
    return a.role == b.role && a.call_syntax == b.call_syntax &&
           same(a.object, b.object);
  }
  bool operator()(const Unary& a) const {
    const auto& b = rhs<Unary>();
    return a.op == b.op && same(a.operand, b.operand);
  }
  bool operator()(const Binary& a) const {
    const auto& b = rhs<Binary>();
    return a.op == b.op && same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
  }
  bool operator()(const CollectionCall& a) const {
    const auto& b = rhs<CollectionCall>();
    return a.op == b.op && a.variable == b.variable && same(a.source, b.source) &&
           same(a.body, b.body);
  }
};

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(EqualVisitor{b}, a.node);
}

std::string_view to_string(BinaryOp op) {
  switch (op) {
    case BinaryOp::kImplies: return "implies";
    case BinaryOp::kOr: return "or";
    case BinaryOp::kAnd: return "and";
    case BinaryOp::kEq: return "=";
    case BinaryOp::kNe: return "<>";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
  }
  return "?";
}

std::string_view to_string(CollectionOp op) {
  switch (op) {
    case CollectionOp::kSize: return "size";
    case CollectionOp::kIsEmpty: return "isEmpty";
    case CollectionOp::kNotEmpty: return "notEmpty";
    case CollectionOp::kExists: return "exists";
    case CollectionOp::kForAll: return "forAll";
    case CollectionOp::kSelect: return "select";
  }
  return "?";
}

bool is_iterator(CollectionOp op) {
  return op == CollectionOp::kExists || op == CollectionOp::kForAll ||
         op == CollectionOp::kSelect;
}

std::optional<CollectionOp> try_parse_collection_op(std::string_view name) {
  for (auto op : {CollectionOp::kSize, CollectionOp::kIsEmpty,
                  CollectionOp::kNotEmpty, CollectionOp::kExists,
                  CollectionOp::kForAll, CollectionOp::kSelect}) {
    if (to_string(op) == name) return op;
  }
  return std::nullopt;
}

ExprPtr make(decltype(Expr::node) node) {
  return std::make_shared<const Expr>(Expr{std::move(node)});
}
ExprPtr boolean(bool v) { return make(BoolLiteral{v}); }
ExprPtr integer(std::int64_t v) { return make(IntLiteral{v}); }
ExprPtr real(double v) { return make(RealLiteral{v}); }
ExprPtr string(std::string v) { return make(StringLiteral{std::move(v)}); }
ExprPtr self() { return make(SelfRef{}); }
ExprPtr var(std::string name) { return make(VarRef{std::move(name)}); }
ExprPtr property(ExprPtr object, ElementProperty p) {
  return make(PropertyAccess{std::move(object), p});
}
ExprPtr nav(ExprPtr object, std::string role, bool call_syntax) {
  return make(Navigation{std::move(object), std::move(role), call_syntax});
}
ExprPtr unary(UnaryOp op, ExprPtr operand) {
  return make(Unary{op, std::move(operand)});
}
ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  return make(Binary{op, std::move(lhs), std::move(rhs)});
}
ExprPtr call(ExprPtr source, CollectionOp op) {
  return make(CollectionCall{std::move(source), op, {}, nullptr});
}
ExprPtr iterate(ExprPtr source, CollectionOp op, std::string variable,
                ExprPtr body) {
  return make(CollectionCall{std::move(source), op, std::move(variable),
                             std::move(body)});
}

}  // namespace umlprof::ast
