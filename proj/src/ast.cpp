#include "gppl/ast.hpp"

#include <stdexcept>

namespace gppl::lang {

Type Type::unit() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Unit, nullptr, nullptr});
  return Type(n);
}

Type Type::empty() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Empty, nullptr, nullptr});
  return Type(n);
}

Type Type::vertex() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Vertex, nullptr, nullptr});
  return Type(n);
}

Type Type::prod(const Type& a, const Type& b) {
  return Type(std::make_shared<const Node>(Node{Kind::Prod, a.node_, b.node_}));
}

Type Type::sum(const Type& a, const Type& b) {
  return Type(std::make_shared<const Node>(Node{Kind::Sum, a.node_, b.node_}));
}

Type Type::boolean() { return sum(unit(), unit()); }

Type Type::left() const {
  if (!node_->l) throw std::logic_error("type has no left component");
  return Type(node_->l);
}

Type Type::right() const {
  if (!node_->r) throw std::logic_error("type has no right component");
  return Type(node_->r);
}

bool Type::mentions_vertex() const {
  switch (kind()) {
    case Kind::Vertex:
      return true;
    case Kind::Prod:
    case Kind::Sum:
      return left().mentions_vertex() || right().mentions_vertex();
    default:
      return false;
  }
}

bool Type::is_bool() const {
  return kind() == Kind::Sum && left().kind() == Kind::Unit && right().kind() == Kind::Unit;
}

std::string Type::to_string() const {
  switch (kind()) {
    case Kind::Unit:
      return "unit";
    case Kind::Empty:
      return "void";
    case Kind::Vertex:
      return "vertex";
    case Kind::Sum:
      if (is_bool()) return "bool";
      return "(" + left().to_string() + "+" + right().to_string() + ")";
    case Kind::Prod:
      return "(" + left().to_string() + "*" + right().to_string() + ")";
  }
  return "?";
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Type::Kind::Prod:
    case Type::Kind::Sum:
      return a.left() == b.left() && a.right() == b.right();
    default:
      return true;
  }
}

namespace {

TermPtr mk(Term&& t) { return std::make_shared<const Term>(std::move(t)); }

}  // namespace

TermPtr var(const std::string& name, SourceLoc loc) {
  Term t{Term::Kind::Var};
  t.name = name;
  t.loc = loc;
  return mk(std::move(t));
}

TermPtr unit_intro(SourceLoc loc) {
  Term t{Term::Kind::Unit};
  t.loc = loc;
  return mk(std::move(t));
}

TermPtr pair(TermPtr a, TermPtr b, SourceLoc loc) {
  Term t{Term::Kind::Pair};
  t.t0 = std::move(a);
  t.t1 = std::move(b);
  t.loc = loc;
  return mk(std::move(t));
}

TermPtr proj1(TermPtr x, SourceLoc loc) {
  Term t{Term::Kind::Proj1};
  t.t0 = std::move(x);
  t.loc = loc;
  return mk(std::move(t));
}

TermPtr proj2(TermPtr x, SourceLoc loc) {
  Term t{Term::Kind::Proj2};
  t.t0 = std::move(x);
  t.loc = loc;
  return mk(std::move(t));
}

TermPtr inj1(TermPtr x, SourceLoc loc) {
  Term t{Term::Kind::Inj1};
  t.t0 = std::move(x);
  t.loc = loc;
  return mk(std::move(t));
}

TermPtr inj2(TermPtr x, SourceLoc loc) {
  Term t{Term::Kind::Inj2};
  t.t0 = std::move(x);
  t.loc = loc;
  return mk(std::move(t));
}

TermPtr let(const std::string& x, TermPtr bound, TermPtr body, SourceLoc loc) {
  Term t{Term::Kind::Let};
  t.name = x;
  t.t0 = std::move(bound);
  t.t1 = std::move(body);
  t.loc = loc;
  return mk(std::move(t));
}

TermPtr case_zero(TermPtr x, SourceLoc loc) {
  Term t{Term::Kind::CaseZero};
  t.t0 = std::move(x);
  t.loc = loc;
  return mk(std::move(t));
}

TermPtr case_of(TermPtr scrut, const std::string& x1, TermPtr br1, const std::string& x2,
                TermPtr br2, SourceLoc loc) {
  Term t{Term::Kind::Case};
  t.name = x1;
  t.name2 = x2;
  t.t0 = std::move(scrut);
  t.t1 = std::move(br1);
  t.t2 = std::move(br2);
  t.loc = loc;
  return mk(std::move(t));
}

TermPtr const_app(ConstKind c, TermPtr arg, SourceLoc loc) {
  Term t{Term::Kind::Const};
  t.cst = c;
  t.t0 = std::move(arg);
  t.loc = loc;
  return mk(std::move(t));
}

TermPtr bernoulli(const Rat& q, SourceLoc loc) {
  if (!in_unit_interval(q))
    throw std::invalid_argument("bernoulli parameter outside [0,1]: " + rat_string(q));
  Term t{Term::Kind::Const};
  t.cst = ConstKind::Bernoulli;
  t.weight = q;
  t.t0 = unit_intro();
  t.loc = loc;
  return mk(std::move(t));
}

TermPtr new_vertex(SourceLoc loc) { return const_app(ConstKind::New, unit_intro(), loc); }

TermPtr edge_query(TermPtr a, TermPtr b, SourceLoc loc) {
  return const_app(ConstKind::Edge, pair(std::move(a), std::move(b)), loc);
}

TermPtr true_term() { return inj1(unit_intro()); }
TermPtr false_term() { return inj2(unit_intro()); }

TermPtr nest_pairs(const std::vector<TermPtr>& parts) {
  if (parts.empty()) throw std::invalid_argument("nest_pairs of empty list");
  TermPtr acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = pair(parts[i], acc);
  return acc;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  if (a->name != b->name || a->name2 != b->name2) return false;
  if (a->kind == Term::Kind::Const) {
    if (a->cst != b->cst) return false;
    if (a->cst == ConstKind::Bernoulli && a->weight != b->weight) return false;
  }
  for (auto sel : {&Term::t0, &Term::t1, &Term::t2}) {
    const TermPtr& ca = (*a).*sel;
    const TermPtr& cb = (*b).*sel;
    if (static_cast<bool>(ca) != static_cast<bool>(cb)) return false;
    if (ca && !term_equal(ca, cb)) return false;
  }
  return true;
}

namespace {

void collect_free(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case Term::Kind::Let: {
      collect_free(t->t0, bound, out);
      bool fresh = bound.insert(t->name).second;
      collect_free(t->t1, bound, out);
      if (fresh) bound.erase(t->name);
      return;
    }
    case Term::Kind::Case: {
      collect_free(t->t0, bound, out);
      bool f1 = bound.insert(t->name).second;
      collect_free(t->t1, bound, out);
      if (f1) bound.erase(t->name);
      bool f2 = bound.insert(t->name2).second;
      collect_free(t->t2, bound, out);
      if (f2) bound.erase(t->name2);
      return;
    }
    default:
      for (auto sel : {&Term::t0, &Term::t1, &Term::t2})
        if ((*t).*sel) collect_free((*t).*sel, bound, out);
  }
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (int i = 0;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

}  // namespace

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

bool uses_effects(const TermPtr& t) {
  if (t->kind == Term::Kind::Const) return true;
  for (auto sel : {&Term::t0, &Term::t1, &Term::t2})
    if ((*t).*sel && uses_effects((*t).*sel)) return true;
  return false;
}

TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& v) {
  switch (t->kind) {
    case Term::Kind::Var:
      return t->name == x ? v : t;
    case Term::Kind::Unit:
      return t;
    case Term::Kind::Let: {
      TermPtr bound = substitute(t->t0, x, v);
      if (t->name == x) return let(t->name, bound, t->t1, t->loc);
      auto fv = free_vars(v);
      if (fv.count(t->name)) {
        auto avoid = fv;
        for (auto& n : free_vars(t->t1)) avoid.insert(n);
        std::string y = fresh_name(t->name, avoid);
        TermPtr body = substitute(t->t1, t->name, var(y));
        return let(y, bound, substitute(body, x, v), t->loc);
      }
      return let(t->name, bound, substitute(t->t1, x, v), t->loc);
    }
    case Term::Kind::Case: {
      TermPtr scrut = substitute(t->t0, x, v);
      auto fv = free_vars(v);
      auto rename_branch = [&](const std::string& binder, const TermPtr& body,
                               std::string& out_binder) -> TermPtr {
        if (binder == x) {
          out_binder = binder;
          return body;
        }
        if (fv.count(binder)) {
          auto avoid = fv;
          for (auto& n : free_vars(body)) avoid.insert(n);
          out_binder = fresh_name(binder, avoid);
          return substitute(substitute(body, binder, var(out_binder)), x, v);
        }
        out_binder = binder;
        return substitute(body, x, v);
      };
      std::string b1, b2;
      TermPtr br1 = rename_branch(t->name, t->t1, b1);
      TermPtr br2 = rename_branch(t->name2, t->t2, b2);
      return case_of(scrut, b1, br1, b2, br2, t->loc);
    }
    default: {
      Term copy = *t;
      if (copy.t0) copy.t0 = substitute(copy.t0, x, v);
      if (copy.t1) copy.t1 = substitute(copy.t1, x, v);
      if (copy.t2) copy.t2 = substitute(copy.t2, x, v);
      return std::make_shared<const Term>(std::move(copy));
    }
  }
}

namespace {

enum class Pos { Free, Operand };  // Operand: argument of a prefix form

void print(const TermPtr& t, Pos pos, std::string& out, int& fresh_counter);

void print_wrapped(const TermPtr& t, Pos pos, std::string& out, int& fresh_counter) {
  bool parens = pos == Pos::Operand &&
                (t->kind == Term::Kind::Let || t->kind == Term::Kind::Case);
  if (parens) out += "(";
  print(t, pos, out, fresh_counter);
  if (parens) out += ")";
}

void print(const TermPtr& t, Pos pos, std::string& out, int& fresh_counter) {
  switch (t->kind) {
    case Term::Kind::Var:
      out += t->name;
      return;
    case Term::Kind::Unit:
      out += "()";
      return;
    case Term::Kind::Pair:
      out += "(";
      print(t->t0, Pos::Free, out, fresh_counter);
      out += ", ";
      print(t->t1, Pos::Free, out, fresh_counter);
      out += ")";
      return;
    case Term::Kind::Proj1:
      out += "fst ";
      print_wrapped(t->t0, Pos::Operand, out, fresh_counter);
      return;
    case Term::Kind::Proj2:
      out += "snd ";
      print_wrapped(t->t0, Pos::Operand, out, fresh_counter);
      return;
    case Term::Kind::Inj1:
      if (t->t0->kind == Term::Kind::Unit) {
        out += "true";
        return;
      }
      out += "inl ";
      print_wrapped(t->t0, Pos::Operand, out, fresh_counter);
      return;
    case Term::Kind::Inj2:
      if (t->t0->kind == Term::Kind::Unit) {
        out += "false";
        return;
      }
      out += "inr ";
      print_wrapped(t->t0, Pos::Operand, out, fresh_counter);
      return;
    case Term::Kind::CaseZero:
      out += "absurd ";
      print_wrapped(t->t0, Pos::Operand, out, fresh_counter);
      return;
    case Term::Kind::Let:
      out += "let " + t->name + " = ";
      print(t->t0, Pos::Free, out, fresh_counter);
      out += " in ";
      print(t->t1, Pos::Free, out, fresh_counter);
      return;
    case Term::Kind::Case:
      out += "case ";
      print(t->t0, Pos::Free, out, fresh_counter);
      out += " of { inl " + t->name + " -> ";
      print(t->t1, Pos::Free, out, fresh_counter);
      out += "; inr " + t->name2 + " -> ";
      print(t->t2, Pos::Free, out, fresh_counter);
      out += " }";
      return;
    case Term::Kind::Const:
      switch (t->cst) {
        case ConstKind::New:
          if (t->t0->kind == Term::Kind::Unit) {
            out += "new()";
            return;
          }
          // Run the argument for effect, then allocate.
          out += "let _u" + std::to_string(fresh_counter++) + " = ";
          print(t->t0, Pos::Free, out, fresh_counter);
          out += " in new()";
          return;
        case ConstKind::Edge:
          if (t->t0->kind == Term::Kind::Pair) {
            out += "edge(";
            print(t->t0->t0, Pos::Free, out, fresh_counter);
            out += ", ";
            print(t->t0->t1, Pos::Free, out, fresh_counter);
            out += ")";
            return;
          }
          {
            auto fv = free_vars(t->t0);
            std::string p;
            do {
              p = "_e" + std::to_string(fresh_counter++);
            } while (fv.count(p));
            out += "let " + p + " = ";
            print(t->t0, Pos::Free, out, fresh_counter);
            out += " in edge(fst " + p + ", snd " + p + ")";
          }
          return;
        case ConstKind::Bernoulli:
          if (t->t0->kind == Term::Kind::Unit) {
            out += "bernoulli(" + rat_string(t->weight) + ")";
            return;
          }
          out += "let _u" + std::to_string(fresh_counter++) + " = ";
          print(t->t0, Pos::Free, out, fresh_counter);
          out += " in bernoulli(" + rat_string(t->weight) + ")";
          return;
      }
  }
}

}  // namespace

std::string pretty(const TermPtr& t) {
  std::string out;
  int fresh_counter = 0;
  print(t, Pos::Free, out, fresh_counter);
  return out;
}

const Type* Context::lookup(const std::string& name) const {
  for (auto& [n, ty] : vars)
    if (n == name) return &ty;
  return nullptr;
}

void Context::push(const std::string& name, const Type& ty) {
  if (lookup(name)) throw std::invalid_argument("duplicate variable in context: " + name);
  vars.emplace_back(name, ty);
}

}  // namespace gppl::lang
