#include "gppl/typecheck.hpp"

namespace gppl::lang {

namespace {

using Scope = std::vector<std::pair<std::string, Type>>;

Type check(Scope& scope, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var: {
      for (auto& [n, ty] : scope)
        if (n == t->name) return ty;
      throw TypeError("unbound variable '" + t->name + "'", t->loc);
    }
    case Term::Kind::Unit:
      return Type::unit();
    case Term::Kind::Pair: {
      Type a = check(scope, t->t0);
      Type b = check(scope, t->t1);
      return Type::prod(a, b);
    }
    case Term::Kind::Proj1:
    case Term::Kind::Proj2: {
      Type p = check(scope, t->t0);
      if (p.kind() != Type::Kind::Prod)
        throw TypeError("projection expects a product, found " + p.to_string(), t->loc);
      return t->kind == Term::Kind::Proj1 ? p.left() : p.right();
    }
    case Term::Kind::Inj1:
    case Term::Kind::Inj2: {
      // The grammar has no type annotations, so an injection has a unique
      // type only at bool (unit payload).
      Type p = check(scope, t->t0);
      if (p.kind() != Type::Kind::Unit)
        throw TypeError("injection payload must have type unit (only bool injections have a "
                        "unique type), found " +
                            p.to_string(),
                        t->loc);
      return Type::boolean();
    }
    case Term::Kind::Let: {
      for (auto& [n, ty] : scope)
        if (n == t->name)
          throw TypeError("shadowed binder '" + t->name + "' (context names must be distinct)",
                          t->loc);
      Type a = check(scope, t->t0);
      scope.emplace_back(t->name, a);
      Type b = check(scope, t->t1);
      scope.pop_back();
      return b;
    }
    case Term::Kind::CaseZero: {
      Type z = check(scope, t->t0);
      if (z.kind() != Type::Kind::Empty)
        throw TypeError("absurd expects void, found " + z.to_string(), t->loc);
      throw TypeError("absurd has no unique result type", t->loc);
    }
    case Term::Kind::Case: {
      Type s = check(scope, t->t0);
      if (s.kind() != Type::Kind::Sum)
        throw TypeError("case expects a sum, found " + s.to_string(), t->loc);
      for (auto& [n, ty] : scope)
        if (n == t->name || n == t->name2)
          throw TypeError("shadowed binder in case (context names must be distinct)", t->loc);
      scope.emplace_back(t->name, s.left());
      Type b1 = check(scope, t->t1);
      scope.pop_back();
      scope.emplace_back(t->name2, s.right());
      Type b2 = check(scope, t->t2);
      scope.pop_back();
      if (b1 != b2)
        throw TypeError("case branches disagree: " + b1.to_string() + " vs " + b2.to_string(),
                        t->loc);
      return b1;
    }
    case Term::Kind::Const: {
      Type a = check(scope, t->t0);
      switch (t->cst) {
        case ConstKind::New:
          if (a.kind() != Type::Kind::Unit)
            throw TypeError("new expects unit, found " + a.to_string(), t->loc);
          return Type::vertex();
        case ConstKind::Edge:
          if (a.kind() != Type::Kind::Prod || a.left().kind() != Type::Kind::Vertex ||
              a.right().kind() != Type::Kind::Vertex)
            throw TypeError("edge expects vertex*vertex, found " + a.to_string(), t->loc);
          return Type::boolean();
        case ConstKind::Bernoulli:
          if (a.kind() != Type::Kind::Unit)
            throw TypeError("bernoulli expects unit, found " + a.to_string(), t->loc);
          return Type::boolean();
      }
    }
  }
  throw TypeError("malformed term", t->loc);
}

}  // namespace

Type typecheck(const Context& ctx, const TermPtr& t) {
  Scope scope = ctx.vars;
  return check(scope, t);
}

Type typecheck(const TermPtr& t) { return typecheck(Context{}, t); }

std::uint64_t numeral_size(const Type& ty) {
  switch (ty.kind()) {
    case Type::Kind::Unit:
      return 1;
    case Type::Kind::Empty:
      return 0;
    case Type::Kind::Vertex:
      throw std::invalid_argument("numeral_size is undefined on vertex types");
    case Type::Kind::Prod:
      return numeral_size(ty.left()) * numeral_size(ty.right());
    case Type::Kind::Sum:
      return numeral_size(ty.left()) + numeral_size(ty.right());
  }
  return 0;
}

std::vector<Value> enumerate_inhabitants(const Type& ty, int vertex_count) {
  switch (ty.kind()) {
    case Type::Kind::Unit:
      return {Value::unit()};
    case Type::Kind::Empty:
      return {};
    case Type::Kind::Vertex: {
      if (vertex_count < 0)
        throw std::invalid_argument("cannot enumerate vertex without a finite model");
      std::vector<Value> out;
      out.reserve(vertex_count);
      for (int i = 0; i < vertex_count; ++i) out.push_back(Value::vertex(i));
      return out;
    }
    case Type::Kind::Sum: {
      std::vector<Value> out;
      for (auto& v : enumerate_inhabitants(ty.left(), vertex_count))
        out.push_back(Value::inl(v));
      for (auto& v : enumerate_inhabitants(ty.right(), vertex_count))
        out.push_back(Value::inr(v));
      return out;
    }
    case Type::Kind::Prod: {
      std::vector<Value> out;
      auto ls = enumerate_inhabitants(ty.left(), vertex_count);
      auto rs = enumerate_inhabitants(ty.right(), vertex_count);
      out.reserve(ls.size() * rs.size());
      for (auto& l : ls)
        for (auto& r : rs) out.push_back(Value::pair(l, r));
      return out;
    }
  }
  return {};
}

std::vector<Value> enumerate_inhabitants(const Type& ty) {
  if (ty.mentions_vertex())
    throw std::invalid_argument("enumerate_inhabitants: type mentions vertex");
  return enumerate_inhabitants(ty, -1);
}

TermPtr gen_t_n(int n) {
  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  return gen_t_n_permuted(n, identity);
}

TermPtr gen_t_n_permuted(int n, const std::vector<int>& sigma) {
  if (n < 1) throw std::invalid_argument("gen_t_n requires n >= 1");
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<int> inverse(n, -1);
  for (int i = 0; i < n; ++i) {
    if (sigma[i] < 0 || sigma[i] >= n || inverse[sigma[i]] != -1)
      throw std::invalid_argument("not a permutation");
    inverse[sigma[i]] = i;
  }
  auto name = [](int i) { return "x" + std::to_string(i + 1); };
  std::vector<TermPtr> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries.push_back(edge_query(var(name(i)), var(name(j))));
  TermPtr body = nest_pairs(entries);
  for (int p = n - 1; p >= 0; --p) body = let(name(inverse[p]), new_vertex(), body);
  return body;
}

}  // namespace gppl::lang
