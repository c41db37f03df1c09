#pragma once

#include "gppl/rational.hpp"

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gppl::lang {

// Types of the core calculus. bool is sugar for unit + unit.
class Type {
 public:
  enum class Kind { Unit, Empty, Prod, Sum, Vertex };

  Type() : Type(unit()) {}

  static Type unit();
  static Type empty();
  static Type vertex();
  static Type prod(const Type& a, const Type& b);
  static Type sum(const Type& a, const Type& b);
  static Type boolean();

  Kind kind() const { return node_->kind; }
  Type left() const;
  Type right() const;

  bool mentions_vertex() const;
  bool is_bool() const;
  std::string to_string() const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const Node> l, r;
  };
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct SourceLoc {
  int line = 0;
  int col = 0;
};

enum class ConstKind { New, Edge, Bernoulli };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Unit, Pair, Proj1, Proj2, Inj1, Inj2, Let, CaseZero, Case, Const };
  Kind kind;
  std::string name;   // Var name, Let binder, Case inl binder
  std::string name2;  // Case inr binder
  TermPtr t0, t1, t2; // Let: t0 bound / t1 body; Case: t0 scrutinee / t1, t2 branches; Const: t0 arg
  ConstKind cst = ConstKind::New;
  Rat weight;         // Bernoulli parameter
  SourceLoc loc;
};

TermPtr var(const std::string& name, SourceLoc loc = {});
TermPtr unit_intro(SourceLoc loc = {});
TermPtr pair(TermPtr a, TermPtr b, SourceLoc loc = {});
TermPtr proj1(TermPtr t, SourceLoc loc = {});
TermPtr proj2(TermPtr t, SourceLoc loc = {});
TermPtr inj1(TermPtr t, SourceLoc loc = {});
TermPtr inj2(TermPtr t, SourceLoc loc = {});
TermPtr let(const std::string& x, TermPtr bound, TermPtr body, SourceLoc loc = {});
TermPtr case_zero(TermPtr t, SourceLoc loc = {});
TermPtr case_of(TermPtr scrut, const std::string& x1, TermPtr br1, const std::string& x2,
                TermPtr br2, SourceLoc loc = {});
TermPtr const_app(ConstKind c, TermPtr arg, SourceLoc loc = {});
TermPtr bernoulli(const Rat& q, SourceLoc loc = {});
TermPtr new_vertex(SourceLoc loc = {});
TermPtr edge_query(TermPtr a, TermPtr b, SourceLoc loc = {});
TermPtr true_term();
TermPtr false_term();

// Flat right-nested tuple (a1,(a2,(...,ak))); a single element is itself.
TermPtr nest_pairs(const std::vector<TermPtr>& parts);

bool term_equal(const TermPtr& a, const TermPtr& b);  // structural, ignores locations
std::set<std::string> free_vars(const TermPtr& t);
bool uses_effects(const TermPtr& t);  // mentions any constant
TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& v);  // capture-avoiding
std::string pretty(const TermPtr& t);

// Ordered typing context with pairwise-distinct names.
struct Context {
  std::vector<std::pair<std::string, Type>> vars;
  const Type* lookup(const std::string& name) const;
  void push(const std::string& name, const Type& ty);  // throws on duplicate
};

}  // namespace gppl::lang
