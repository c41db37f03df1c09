#include "gppl/value.hpp"

#include <stdexcept>

namespace gppl {

Value Value::unit() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Unit, nullptr, nullptr, 0});
  return Value(node);
}

Value Value::pair(const Value& a, const Value& b) {
  return Value(std::make_shared<const Node>(Node{Kind::Pair, a.node_, b.node_, 0}));
}

Value Value::inl(const Value& v) {
  return Value(std::make_shared<const Node>(Node{Kind::Inl, v.node_, nullptr, 0}));
}

Value Value::inr(const Value& v) {
  return Value(std::make_shared<const Node>(Node{Kind::Inr, v.node_, nullptr, 0}));
}

Value Value::vertex(int id) {
  return Value(std::make_shared<const Node>(Node{Kind::Vertex, nullptr, nullptr, id}));
}

Value Value::boolean(bool b) { return b ? inl(unit()) : inr(unit()); }

Value Value::first() const {
  if (!node_->a) throw std::logic_error("value has no first component");
  return Value(node_->a);
}

Value Value::second() const {
  if (!node_->b) throw std::logic_error("value has no second component");
  return Value(node_->b);
}

int Value::vertex_id() const {
  if (node_->kind != Kind::Vertex) throw std::logic_error("value is not a vertex");
  return node_->vid;
}

bool Value::is_bool() const {
  return (kind() == Kind::Inl || kind() == Kind::Inr) && node_->a->kind == Kind::Unit;
}

bool Value::as_bool() const {
  if (!is_bool()) throw std::logic_error("value is not a boolean");
  return kind() == Kind::Inl;
}

std::string Value::to_string() const {
  switch (kind()) {
    case Kind::Unit:
      return "()";
    case Kind::Pair:
      return "(" + first().to_string() + "," + second().to_string() + ")";
    case Kind::Inl:
      if (is_bool()) return "true";
      return "inl " + first().to_string();
    case Kind::Inr:
      if (is_bool()) return "false";
      return "inr " + first().to_string();
    case Kind::Vertex:
      return "v" + std::to_string(node_->vid);
  }
  return "?";
}

int Value::compare(const Value& a, const Value& b) {
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Kind::Unit:
      return 0;
    case Kind::Pair: {
      int c = compare(a.first(), b.first());
      return c != 0 ? c : compare(a.second(), b.second());
    }
    case Kind::Inl:
    case Kind::Inr:
      return compare(a.first(), b.first());
    case Kind::Vertex:
      return a.node_->vid < b.node_->vid ? -1 : (a.node_->vid > b.node_->vid ? 1 : 0);
  }
  return 0;
}

}  // namespace gppl
