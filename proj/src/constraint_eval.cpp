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
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umlprof/constraint.hpp"
#include "umlprof/model.hpp"

namespace umlprof {

std::string_view Value::type_name() const {
  switch (v_.index()) {
    case 0: return "Bool";
    case 1: return "Int";
    case 2: return "Real";
    case 3: return "Str";
    case 4: return "Collection";
    case 5: return "Element";
    default: return "Invalid";
  }
}

std::string Value::to_string() const {
  if (is_bool()) return as_bool() ? "Bool(true)" : "Bool(false)";
  if (is_int()) return "Int(" + std::to_string(as_int()) + ")";
  if (is_real()) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, as_real());
    return "Real(" + std::string(buf, ec == std::errc() ? ptr : buf) + ")";
  }
  if (is_string()) return "Str(\"" + as_string() + "\")";
  if (is_element()) return "Element(" + as_element().id + ")";
  if (is_invalid()) return "Invalid(" + invalid_reason() + ")";
  std::string out = "Collection[";
  const auto& items = as_collection();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i].to_string();
  }
  return out + "]";
}

bool Value::identical(const Value& other) const {
  if (v_.index() != other.v_.index()) return false;
  if (is_invalid()) return invalid_reason() == other.invalid_reason();
  if (is_collection()) {
    const auto& a = as_collection();
    const auto& b = other.as_collection();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].identical(b[i])) return false;
    }
    return true;
  }
  if (is_bool()) return as_bool() == other.as_bool();
  if (is_int()) return as_int() == other.as_int();
  if (is_real()) return as_real() == other.as_real();
  if (is_string()) return as_string() == other.as_string();
  return as_element() == other.as_element();
}

namespace {

bool is_numeric(const Value& v) { return v.is_int() || v.is_real(); }
double to_double(const Value& v) {
  return v.is_int() ? static_cast<double>(v.as_int()) : v.as_real();
}

Value mismatch(std::string_view what, const Value& a, const Value& b) {
  return Value::invalid("type mismatch: " + std::string(what) + " on " +
                        std::string(a.type_name()) + " and " +
                        std::string(b.type_name()));
}

// nullopt: the operands cannot be compared.
std::optional<bool> equal(const Value& a, const Value& b) {
  if (is_numeric(a) && is_numeric(b)) {
    if (a.is_int() && b.is_int()) return a.as_int() == b.as_int();
    return to_double(a) == to_double(b);
  }
  if (a.storage().index() != b.storage().index()) return std::nullopt;
  if (a.is_bool()) return a.as_bool() == b.as_bool();
  if (a.is_string()) return a.as_string() == b.as_string();
  if (a.is_element()) return a.as_element() == b.as_element();
  if (a.is_collection()) {
    const auto& x = a.as_collection();
    const auto& y = b.as_collection();
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      auto r = equal(x[i], y[i]);
      if (!r) return std::nullopt;
      if (!*r) return false;
    }
    return true;
  }
  return std::nullopt;
}

class Evaluator {
 public:
  Evaluator(std::string_view context, const ResolvedModel& model)
      : context_(context), model_(model) {}

  Value eval(const ast::Expr& e) {
    return std::visit([this](const auto& n) { return eval_node(n); }, e.node);
  }

 private:
  Value eval_node(const ast::BoolLiteral& n) { return n.value; }
  Value eval_node(const ast::IntLiteral& n) { return n.value; }
  Value eval_node(const ast::RealLiteral& n) { return n.value; }
  Value eval_node(const ast::StringLiteral& n) { return n.value; }
  Value eval_node(const ast::SelfRef&) { return ElementRef{std::string(context_)}; }

  Value eval_node(const ast::VarRef& n) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == n.name) return it->second;
    }
    return Value::invalid("unbound variable '" + n.name + "'");
  }

  Value eval_node(const ast::PropertyAccess& n) {
    Value object = eval(*n.object);
    if (object.is_invalid()) return object;
    const std::string prop(to_string(n.property));
    if (!object.is_element()) {
      return Value::invalid("unknown property '" + prop + "' on " +
                            std::string(object.type_name()));
    }
    const std::string& id = object.as_element().id;
    if (const ModelElement* el = model_.element(id)) {
      switch (n.property) {
        case ElementProperty::kName:
          return el->name;
        case ElementProperty::kMetaclass:
          return std::string(to_string(el->metaclass));
        case ElementProperty::kAttributes: {
          Value::Collection out;
          for (const auto& a : el->attributes) out.emplace_back(a.name);
          return out;
        }
        case ElementProperty::kStereotypes:
          return stereotype_names(el->applications);
      }
    }
    if (const Association* as = model_.association(id)) {
      switch (n.property) {
        case ElementProperty::kName:
          return std::string();
        case ElementProperty::kMetaclass:
          return std::string(to_string(MetaClass::kUMLAssociation));
        case ElementProperty::kAttributes:
          return Value::Collection{};
        case ElementProperty::kStereotypes:
          return stereotype_names(as->applications);
      }
    }
    return Value::invalid("unknown element '" + id + "'");
  }

  static Value stereotype_names(const std::vector<StereotypeApplication>& apps) {
    Value::Collection out;
    for (const auto& a : apps) out.emplace_back(a.stereotype);
    return out;
  }

  Value eval_node(const ast::Navigation& n) {
    Value object = eval(*n.object);
    if (object.is_invalid()) return object;
    if (!object.is_element()) {
      return Value::invalid("unknown property '" + n.role + "' on " +
                            std::string(object.type_name()));
    }
    const std::string& id = object.as_element().id;
    if (!model_.contains(id)) return Value::invalid("unknown element '" + id + "'");
    Value::Collection out;
    for (auto& reached : model_.navigate(id, n.role)) {
      out.emplace_back(ElementRef{std::move(reached)});
    }
    return out;
  }

  Value eval_node(const ast::Unary& n) {
    Value v = eval(*n.operand);
    if (v.is_invalid()) return v;
    if (n.op == ast::UnaryOp::kNot) {
      if (!v.is_bool()) {
        return Value::invalid("type mismatch: not on " + std::string(v.type_name()));
      }
      return !v.as_bool();
    }
    if (v.is_int()) {
      if (v.as_int() == std::numeric_limits<std::int64_t>::min()) {
        return Value::invalid("integer overflow");
      }
      return -v.as_int();
    }
    if (v.is_real()) return -v.as_real();
    return Value::invalid("type mismatch: - on " + std::string(v.type_name()));
  }

  Value eval_node(const ast::Binary& n) {
    switch (n.op) {
      case ast::BinaryOp::kAnd:
      case ast::BinaryOp::kOr:
      case ast::BinaryOp::kImplies:
        return eval_logical(n);
      default:
        break;
    }
    Value lhs = eval(*n.lhs);
    Value rhs = eval(*n.rhs);
    if (lhs.is_invalid()) return lhs;
    if (rhs.is_invalid()) return rhs;
    const std::string_view sym = ast::to_string(n.op);
    switch (n.op) {
      case ast::BinaryOp::kEq:
      case ast::BinaryOp::kNe: {
        auto eq = equal(lhs, rhs);
        if (!eq) return mismatch(sym, lhs, rhs);
        return n.op == ast::BinaryOp::kEq ? *eq : !*eq;
      }
      case ast::BinaryOp::kLt:
      case ast::BinaryOp::kLe:
      case ast::BinaryOp::kGt:
      case ast::BinaryOp::kGe:
        return compare(n.op, sym, lhs, rhs);
      default:
        return arithmetic(n.op, sym, lhs, rhs);
    }
  }

  static Value compare(ast::BinaryOp op, std::string_view sym, const Value& a,
                       const Value& b) {
    int order = 0;
    if (a.is_int() && b.is_int()) {
      order = a.as_int() < b.as_int() ? -1 : (a.as_int() > b.as_int() ? 1 : 0);
    } else if (is_numeric(a) && is_numeric(b)) {
      const double x = to_double(a);
      const double y = to_double(b);
      order = x < y ? -1 : (x > y ? 1 : 0);
    } else if (a.is_string() && b.is_string()) {
      const int c = a.as_string().compare(b.as_string());
      order = c < 0 ? -1 : (c > 0 ? 1 : 0);
    } else {
      return mismatch(sym, a, b);
    }
    switch (op) {
      case ast::BinaryOp::kLt: return order < 0;
      case ast::BinaryOp::kLe: return order <= 0;
      case ast::BinaryOp::kGt: return order > 0;
      default: return order >= 0;
    }
  }

  static Value arithmetic(ast::BinaryOp op, std::string_view sym, const Value& a,
                          const Value& b) {
    if (!is_numeric(a) || !is_numeric(b)) return mismatch(sym, a, b);
    if (a.is_int() && b.is_int()) {
      const std::int64_t x = a.as_int();
      const std::int64_t y = b.as_int();
      std::int64_t r = 0;
      bool overflow = false;
      switch (op) {
        case ast::BinaryOp::kAdd: overflow = __builtin_add_overflow(x, y, &r); break;
        case ast::BinaryOp::kSub: overflow = __builtin_sub_overflow(x, y, &r); break;
        case ast::BinaryOp::kMul: overflow = __builtin_mul_overflow(x, y, &r); break;
        default:
          if (y == 0) return Value::invalid("division by zero");
          if (x == std::numeric_limits<std::int64_t>::min() && y == -1) {
            overflow = true;
          } else {
            r = x / y;  // truncates toward zero
          }
      }
      if (overflow) return Value::invalid("integer overflow");
      return r;
    }
    const double x = to_double(a);
    const double y = to_double(b);
    double r = 0;
    switch (op) {
      case ast::BinaryOp::kAdd: r = x + y; break;
      case ast::BinaryOp::kSub: r = x - y; break;
      case ast::BinaryOp::kMul: r = x * y; break;
      default:
        if (y == 0.0) return Value::invalid("division by zero");
        r = x / y;
    }
    if (!std::isfinite(r)) return Value::invalid("real overflow");
    return r;
  }

  Value eval_logical(const ast::Binary& n) {
    const std::string_view sym = ast::to_string(n.op);
    Value lhs = eval(*n.lhs);
    if (lhs.is_invalid()) return lhs;
    if (!lhs.is_bool()) {
      return Value::invalid("type mismatch: " + std::string(sym) + " on " +
                            std::string(lhs.type_name()));
    }
    const bool l = lhs.as_bool();
    if (n.op == ast::BinaryOp::kAnd && !l) return false;
    if (n.op == ast::BinaryOp::kOr && l) return true;
    if (n.op == ast::BinaryOp::kImplies && !l) return true;
    Value rhs = eval(*n.rhs);
    if (rhs.is_invalid()) return rhs;
    if (!rhs.is_bool()) {
      return Value::invalid("type mismatch: " + std::string(sym) + " on " +
                            std::string(rhs.type_name()));
    }
    return rhs.as_bool();
  }

  Value eval_node(const ast::CollectionCall& n) {
    Value source = eval(*n.source);
    if (source.is_invalid()) return source;
    const std::string op(ast::to_string(n.op));
    if (!source.is_collection()) {
      return Value::invalid("type mismatch: ->" + op + "() on " +
                            std::string(source.type_name()));
    }
    const auto& items = source.as_collection();
    switch (n.op) {
      case ast::CollectionOp::kSize:
        return static_cast<std::int64_t>(items.size());
      case ast::CollectionOp::kIsEmpty:
        return items.empty();
      case ast::CollectionOp::kNotEmpty:
        return !items.empty();
      default:
        break;
    }
    Value::Collection selected;
    for (const auto& item : items) {
      scope_.emplace_back(n.variable, item);
      Value r = eval(*n.body);
      scope_.pop_back();
      if (r.is_invalid()) return r;
      if (!r.is_bool()) {
        return Value::invalid("type mismatch: ->" + op + "() body yields " +
                              std::string(r.type_name()));
      }
      if (n.op == ast::CollectionOp::kExists && r.as_bool()) return true;
      if (n.op == ast::CollectionOp::kForAll && !r.as_bool()) return false;
      if (n.op == ast::CollectionOp::kSelect && r.as_bool()) selected.push_back(item);
    }
    if (n.op == ast::CollectionOp::kExists) return false;
    if (n.op == ast::CollectionOp::kForAll) return true;
    return selected;
  }

  std::string_view context_;
  const ResolvedModel& model_;
  std::vector<std::pair<std::string, Value>> scope_;
};

}  // namespace

Value evaluate(const ConstraintAst& ast, std::string_view context,
               const ResolvedModel& model) {
  if (!ast.root) return Value::invalid("empty constraint");
  return Evaluator(context, model).eval(*ast.root);
}

}  // namespace umlprof
