#pragma once

#include <memory>
#include <string>

namespace gppl {

// Canonical runtime values: unit, pairs, sum injections, and vertex ids.
// Immutable; copying shares the underlying node.
class Value {
 public:
  enum class Kind { Unit, Pair, Inl, Inr, Vertex };

  Value() : Value(unit()) {}

  static Value unit();
  static Value pair(const Value& a, const Value& b);
  static Value inl(const Value& v);
  static Value inr(const Value& v);
  static Value vertex(int id);
  static Value boolean(bool b);  // inl () / inr ()

  Kind kind() const { return node_->kind; }
  Value first() const;   // pair left component, or injection payload
  Value second() const;  // pair right component
  int vertex_id() const;

  bool is_bool() const;
  bool as_bool() const;  // requires is_bool()

  std::string to_string() const;

  static int compare(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Value& a, const Value& b) { return compare(a, b) != 0; }
  friend bool operator<(const Value& a, const Value& b) { return compare(a, b) < 0; }

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const Node> a, b;
    int vid = 0;
  };
  explicit Value(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace gppl
