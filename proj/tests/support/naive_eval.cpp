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

#include "naive_eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

namespace umlprof::testing {

namespace {

using Env = std::map<std::string, Value>;

Value bad() { return Value::invalid("naive"); }

bool numeric(const Value& v) { return v.is_int() || v.is_real(); }
double as_double(const Value& v) {
  return v.is_int() ? static_cast<double>(v.as_int()) : v.as_real();
}

// 1 equal, 0 unequal, -1 incomparable.
int eq3(const Value& a, const Value& b) {
  if (a.is_int() && b.is_int()) return a.as_int() == b.as_int();
  if (numeric(a) && numeric(b)) return as_double(a) == as_double(b);
  if (a.is_bool() && b.is_bool()) return a.as_bool() == b.as_bool();
  if (a.is_string() && b.is_string()) return a.as_string() == b.as_string();
  if (a.is_element() && b.is_element()) return a.as_element().id == b.as_element().id;
  if (a.is_collection() && b.is_collection()) {
    const auto& x = a.as_collection();
    const auto& y = b.as_collection();
    if (x.size() != y.size()) return 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const int r = eq3(x[i], y[i]);
      if (r != 1) return r;
    }
    return 1;
  }
  return -1;
}

Value eval(const ast::Expr& e, const Env& env, const std::string& self_id,
           const ModelDocument& doc);

Value eval_binary(const ast::Binary& b, const Env& env, const std::string& self_id,
                  const ModelDocument& doc) {
  using ast::BinaryOp;
  if (b.op == BinaryOp::kAnd || b.op == BinaryOp::kOr || b.op == BinaryOp::kImplies) {
    Value l = eval(*b.lhs, env, self_id, doc);
    if (!l.is_bool()) return bad();
    if (b.op == BinaryOp::kAnd && l.as_bool() == false) return false;
    if (b.op == BinaryOp::kOr && l.as_bool() == true) return true;
    if (b.op == BinaryOp::kImplies && l.as_bool() == false) return true;
    Value r = eval(*b.rhs, env, self_id, doc);
    if (!r.is_bool()) return bad();
    return r.as_bool();
  }
  Value l = eval(*b.lhs, env, self_id, doc);
  Value r = eval(*b.rhs, env, self_id, doc);
  if (l.is_invalid() || r.is_invalid()) return bad();
  switch (b.op) {
    case BinaryOp::kEq:
    case BinaryOp::kNe: {
      const int q = eq3(l, r);
      if (q < 0) return bad();
      return (q == 1) == (b.op == BinaryOp::kEq);
    }
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe: {
      int sign;
      if (l.is_int() && r.is_int()) {
        sign = (l.as_int() > r.as_int()) - (l.as_int() < r.as_int());
      } else if (numeric(l) && numeric(r)) {
        const double x = as_double(l), y = as_double(r);
        sign = (x > y) - (x < y);
      } else if (l.is_string() && r.is_string()) {
        sign = (l.as_string() > r.as_string()) - (l.as_string() < r.as_string());
      } else {
        return bad();
      }
      if (b.op == BinaryOp::kLt) return sign == -1;
      if (b.op == BinaryOp::kLe) return sign != 1;
      if (b.op == BinaryOp::kGt) return sign == 1;
      return sign != -1;
    }
    default:
      break;
  }
  if (!numeric(l) || !numeric(r)) return bad();
  if (l.is_int() && r.is_int()) {
    // Exact in 128 bits, then range-checked.
    const __int128 x = l.as_int(), y = r.as_int();
    __int128 z;
    if (b.op == BinaryOp::kAdd) {
      z = x + y;
    } else if (b.op == BinaryOp::kSub) {
      z = x - y;
    } else if (b.op == BinaryOp::kMul) {
      z = x * y;
    } else {
      if (y == 0) return bad();
      z = x / y;
    }
    if (z > std::numeric_limits<std::int64_t>::max() ||
        z < std::numeric_limits<std::int64_t>::min()) {
      return bad();
    }
    return static_cast<std::int64_t>(z);
  }
  const double x = as_double(l), y = as_double(r);
  double z;
  if (b.op == BinaryOp::kAdd) {
    z = x + y;
  } else if (b.op == BinaryOp::kSub) {
    z = x - y;
  } else if (b.op == BinaryOp::kMul) {
    z = x * y;
  } else {
    if (y == 0) return bad();
    z = x / y;
  }
  if (std::isinf(z) || std::isnan(z)) return bad();
  return z;
}

Value eval(const ast::Expr& e, const Env& env, const std::string& self_id,
           const ModelDocument& doc) {
  if (auto* n = std::get_if<ast::BoolLiteral>(&e.node)) return n->value;
  if (auto* n = std::get_if<ast::IntLiteral>(&e.node)) return n->value;
  if (auto* n = std::get_if<ast::RealLiteral>(&e.node)) return n->value;
  if (auto* n = std::get_if<ast::StringLiteral>(&e.node)) return n->value;
  if (std::holds_alternative<ast::SelfRef>(e.node)) return ElementRef{self_id};
  if (auto* n = std::get_if<ast::VarRef>(&e.node)) {
    auto it = env.find(n->name);
    return it == env.end() ? bad() : it->second;
  }
  if (auto* n = std::get_if<ast::PropertyAccess>(&e.node)) {
    Value o = eval(*n->object, env, self_id, doc);
    if (!o.is_element()) return bad();
    const std::string& id = o.as_element().id;
    const std::vector<StereotypeApplication>* apps = nullptr;
    Value::Collection attrs;
    std::string name, metaclass;
    if (const ModelElement* el = doc.find_element(id)) {
      apps = &el->applications;
      name = el->name;
      metaclass = std::string(to_string(el->metaclass));
      for (const auto& a : el->attributes) attrs.push_back(a.name);
    } else if (const Association* as = doc.find_association(id)) {
      apps = &as->applications;
      metaclass = "UMLAssociation";
    } else {
      return bad();
    }
    switch (n->property) {
      case ElementProperty::kName: return name;
      case ElementProperty::kMetaclass: return metaclass;
      case ElementProperty::kAttributes: return attrs;
      case ElementProperty::kStereotypes: {
        Value::Collection out;
        for (const auto& a : *apps) out.push_back(a.stereotype);
        return out;
      }
    }
    return bad();
  }
  if (auto* n = std::get_if<ast::Navigation>(&e.node)) {
    Value o = eval(*n->object, env, self_id, doc);
    if (!o.is_element()) return bad();
    const std::string& id = o.as_element().id;
    if (!doc.find_element(id) && !doc.find_association(id)) return bad();
    std::vector<std::string> hits;
    if (!n->role.empty()) {
      for (const auto& a : doc.associations) {
        if (a.source == id && a.target_role == n->role) hits.push_back(a.target);
        if (a.target == id && a.source_role == n->role) hits.push_back(a.source);
      }
    }
    std::sort(hits.begin(), hits.end());
    Value::Collection out;
    for (auto& h : hits) out.push_back(ElementRef{h});
    return out;
  }
  if (auto* n = std::get_if<ast::Unary>(&e.node)) {
    Value v = eval(*n->operand, env, self_id, doc);
    if (n->op == ast::UnaryOp::kNot) {
      return v.is_bool() ? Value(!v.as_bool()) : bad();
    }
    if (v.is_int()) {
      if (v.as_int() == std::numeric_limits<std::int64_t>::min()) return bad();
      return -v.as_int();
    }
    return v.is_real() ? Value(-v.as_real()) : bad();
  }
  if (auto* n = std::get_if<ast::Binary>(&e.node)) return eval_binary(*n, env, self_id, doc);

  const auto& c = std::get<ast::CollectionCall>(e.node);
  Value src = eval(*c.source, env, self_id, doc);
  if (!src.is_collection()) return bad();
  const Value::Collection items = src.as_collection();
  if (c.op == ast::CollectionOp::kSize) return static_cast<std::int64_t>(items.size());
  if (c.op == ast::CollectionOp::kIsEmpty) return items.size() == 0;
  if (c.op == ast::CollectionOp::kNotEmpty) return items.size() != 0;
  Value::Collection kept;
  for (const Value& item : items) {
    Env inner = env;
    inner.insert_or_assign(c.variable, item);
    Value r = eval(*c.body, inner, self_id, doc);
    if (!r.is_bool()) return bad();
    if (c.op == ast::CollectionOp::kExists && r.as_bool()) return true;
    if (c.op == ast::CollectionOp::kForAll && !r.as_bool()) return false;
    if (r.as_bool()) kept.push_back(item);
  }
  if (c.op == ast::CollectionOp::kExists) return false;
  if (c.op == ast::CollectionOp::kForAll) return true;
  return kept;
}

}  // namespace

Value naive_evaluate(const ast::Expr& e, const std::string& self_id,
                     const ModelDocument& doc) {
  return eval(e, Env{}, self_id, doc);
}

bool same_outcome(const Value& a, const Value& b) {
  if (a.is_invalid() || b.is_invalid()) return a.is_invalid() && b.is_invalid();
  if (a.is_collection() && b.is_collection()) {
    const auto& x = a.as_collection();
    const auto& y = b.as_collection();
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!same_outcome(x[i], y[i])) return false;
    }
    return true;
  }
  return a.identical(b);
}

}  // namespace umlprof::testing
