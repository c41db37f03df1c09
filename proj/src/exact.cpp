#include "gppl/exact.hpp"

#include <stdexcept>

namespace gppl::exact {

using lang::ConstKind;
using lang::Context;
using lang::Term;
using lang::TermPtr;
using lang::Type;

void FiniteModel::validate() const {
  if (m < 1) throw std::invalid_argument("finite model needs at least one vertex");
  if (static_cast<int>(new_dist.size()) != m)
    throw std::invalid_argument("new distribution has wrong size");
  Rat sum(0);
  for (auto& p : new_dist) {
    if (p < 0) throw std::invalid_argument("negative probability in new distribution");
    sum += p;
  }
  if (sum != 1) throw std::invalid_argument("new distribution does not sum to 1");
  if (static_cast<int>(edge_true.size()) != m)
    throw std::invalid_argument("edge kernel has wrong size");
  for (auto& row : edge_true) {
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("edge kernel has wrong size");
    for (auto& p : row)
      if (!in_unit_interval(p)) throw std::invalid_argument("edge probability outside [0,1]");
  }
  if (deterministic)
    for (auto& row : edge_true)
      for (auto& p : row)
        if (p != 0 && p != 1)
          throw std::invalid_argument("deterministic model has a stochastic edge kernel");
}

FinDist FiniteModel::vertex_dist() const {
  FinDist d;
  for (int i = 0; i < m; ++i) d.add_mass(Value::vertex(i), new_dist[i]);
  return d;
}

FinDist FiniteModel::edge_dist(int i, int j) const {
  FinDist d;
  const Rat& p = edge_true[i][j];
  d.add_mass(Value::boolean(true), p);
  d.add_mass(Value::boolean(false), Rat(1) - p);
  return d;
}

FiniteModel two_cluster_model() {
  FiniteModel model;
  model.m = 2;
  model.new_dist = {Rat(1, 2), Rat(1, 2)};
  model.edge_true = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  model.deterministic = true;
  model.validate();
  return model;
}

FiniteModel naive_bernoulli_model(const Rat& alpha) {
  FiniteModel model;
  model.m = 1;
  model.new_dist = {Rat(1)};
  model.edge_true = {{alpha}};
  model.deterministic = false;
  model.validate();
  return model;
}

namespace {

FinDist eval_env(const FiniteModel& model, const Env& env, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
      return FinDist::dirac(env.at(t->name));
    case Term::Kind::Unit:
      return FinDist::dirac(Value::unit());
    case Term::Kind::Pair:
      return bind(eval_env(model, env, t->t0), [&](const Value& a) {
        return bind(eval_env(model, env, t->t1),
                    [&](const Value& b) { return FinDist::dirac(Value::pair(a, b)); });
      });
    case Term::Kind::Proj1:
      return bind(eval_env(model, env, t->t0),
                  [](const Value& v) { return FinDist::dirac(v.first()); });
    case Term::Kind::Proj2:
      return bind(eval_env(model, env, t->t0),
                  [](const Value& v) { return FinDist::dirac(v.second()); });
    case Term::Kind::Inj1:
      return bind(eval_env(model, env, t->t0),
                  [](const Value& v) { return FinDist::dirac(Value::inl(v)); });
    case Term::Kind::Inj2:
      return bind(eval_env(model, env, t->t0),
                  [](const Value& v) { return FinDist::dirac(Value::inr(v)); });
    case Term::Kind::Let:
      return bind(eval_env(model, env, t->t0), [&](const Value& a) {
        Env inner = env;
        inner[t->name] = a;
        return eval_env(model, inner, t->t1);
      });
    case Term::Kind::CaseZero: {
      FinDist d = eval_env(model, env, t->t0);
      if (!d.empty()) throw std::logic_error("absurd scrutinee produced a value");
      return d;
    }
    case Term::Kind::Case:
      return bind(eval_env(model, env, t->t0), [&](const Value& v) {
        Env inner = env;
        if (v.kind() == Value::Kind::Inl) {
          inner[t->name] = v.first();
          return eval_env(model, inner, t->t1);
        }
        inner[t->name2] = v.first();
        return eval_env(model, inner, t->t2);
      });
    case Term::Kind::Const:
      return bind(eval_env(model, env, t->t0), [&](const Value& a) {
        switch (t->cst) {
          case ConstKind::New:
            return model.vertex_dist();
          case ConstKind::Edge:
            return model.edge_dist(a.first().vertex_id(), a.second().vertex_id());
          case ConstKind::Bernoulli: {
            FinDist d;
            d.add_mass(Value::boolean(true), t->weight);
            d.add_mass(Value::boolean(false), Rat(1) - t->weight);
            return d;
          }
        }
        throw std::logic_error("unknown constant");
      });
  }
  throw std::logic_error("malformed term");
}

}  // namespace

FinDist eval_exact(const FiniteModel& model, const lang::TermPtr& t) {
  return eval_exact(model, Context{}, Env{}, t);
}

FinDist eval_exact(const FiniteModel& model, const Context& ctx, const Env& env,
                   const lang::TermPtr& t) {
  model.validate();
  lang::typecheck(ctx, t);  // rejects ill-typed and open terms
  FinDist d = eval_env(model, env, t);
  d.validate();
  return d;
}

namespace {

std::vector<std::vector<Value>> enumerate_envs(const FiniteModel& model, const Context& ctx) {
  std::vector<std::vector<Value>> envs = {{}};
  for (auto& [name, ty] : ctx.vars) {
    auto values = lang::enumerate_inhabitants(ty, model.m);
    std::vector<std::vector<Value>> next;
    next.reserve(envs.size() * values.size());
    for (auto& env : envs)
      for (auto& v : values) {
        auto extended = env;
        extended.push_back(v);
        next.push_back(std::move(extended));
      }
    envs = std::move(next);
  }
  return envs;
}

std::size_t value_index(const std::vector<Value>& values, const Value& v) {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == v) return i;
  throw std::logic_error("value not found in enumeration");
}

// The clause for let: duplicate the environment, run the bound term in the
// first copy, and feed the extended environment to the body.
StochMatrix let_split(const StochMatrix& bound, std::size_t n_rows, std::size_t n_vals) {
  StochMatrix s(n_rows, n_rows * n_vals);
  for (std::size_t r = 0; r < n_rows; ++r)
    for (std::size_t a = 0; a < n_vals; ++a) s.at(r, r * n_vals + a) = bound.at(r, a);
  return s;
}

MatrixSemantics matrix_rec(const FiniteModel& model, const Context& ctx, const TermPtr& t) {
  const auto envs = enumerate_envs(model, ctx);
  const std::size_t R = envs.size();
  switch (t->kind) {
    case Term::Kind::Var: {
      const Type* ty = ctx.lookup(t->name);
      std::size_t pos = 0;
      for (; pos < ctx.vars.size(); ++pos)
        if (ctx.vars[pos].first == t->name) break;
      auto values = lang::enumerate_inhabitants(*ty, model.m);
      StochMatrix m(R, values.size());
      for (std::size_t r = 0; r < R; ++r) m.at(r, value_index(values, envs[r][pos])) = 1;
      return {std::move(m), *ty};
    }
    case Term::Kind::Unit: {
      StochMatrix m(R, 1);
      for (std::size_t r = 0; r < R; ++r) m.at(r, 0) = 1;
      return {std::move(m), Type::unit()};
    }
    case Term::Kind::Pair: {
      // (t1, t2) == let x = t1 in let y = t2 in (x, y)
      auto first = matrix_rec(model, ctx, t->t0);
      Context extended = ctx;
      std::string x = "_pair";
      while (extended.lookup(x)) x += "'";
      extended.push(x, first.type);
      auto second = matrix_rec(model, extended, t->t1);
      std::size_t na = lang::enumerate_inhabitants(first.type, model.m).size();
      std::size_t nb = second.matrix.cols();
      // rows of `second` are (env, a); pair the sampled a with each b column
      StochMatrix paired(R * na, na * nb);
      for (std::size_t r = 0; r < R; ++r)
        for (std::size_t a = 0; a < na; ++a)
          for (std::size_t b = 0; b < nb; ++b)
            paired.at(r * na + a, a * nb + b) = second.matrix.at(r * na + a, b);
      StochMatrix split = let_split(first.matrix, R, na);
      return {kleisli_compose(split, paired), Type::prod(first.type, second.type)};
    }
    case Term::Kind::Proj1:
    case Term::Kind::Proj2: {
      auto inner = matrix_rec(model, ctx, t->t0);
      if (inner.type.kind() != Type::Kind::Prod)
        throw lang::TypeError("projection expects a product", t->loc);
      Type out_ty = t->kind == Term::Kind::Proj1 ? inner.type.left() : inner.type.right();
      std::size_t na = lang::enumerate_inhabitants(inner.type.left(), model.m).size();
      std::size_t nb = lang::enumerate_inhabitants(inner.type.right(), model.m).size();
      std::size_t nout = t->kind == Term::Kind::Proj1 ? na : nb;
      StochMatrix proj(na * nb, nout);
      for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < nb; ++b)
          proj.at(a * nb + b, t->kind == Term::Kind::Proj1 ? a : b) = 1;
      return {kleisli_compose(inner.matrix, proj), out_ty};
    }
    case Term::Kind::Inj1:
    case Term::Kind::Inj2: {
      auto inner = matrix_rec(model, ctx, t->t0);
      if (inner.type.kind() != Type::Kind::Unit)
        throw lang::TypeError("injection payload must have type unit", t->loc);
      bool left = t->kind == Term::Kind::Inj1;
      StochMatrix inj(1, 2);
      inj.at(0, left ? 0 : 1) = 1;
      return {kleisli_compose(inner.matrix, inj), Type::boolean()};
    }
    case Term::Kind::Let: {
      auto bound = matrix_rec(model, ctx, t->t0);
      Context extended = ctx;
      extended.push(t->name, bound.type);
      auto body = matrix_rec(model, extended, t->t1);
      std::size_t na = lang::enumerate_inhabitants(bound.type, model.m).size();
      StochMatrix split = let_split(bound.matrix, R, na);
      return {kleisli_compose(split, body.matrix), body.type};
    }
    case Term::Kind::CaseZero: {
      auto inner = matrix_rec(model, ctx, t->t0);
      if (inner.type.kind() != Type::Kind::Empty)
        throw lang::TypeError("absurd expects void", t->loc);
      throw lang::TypeError("absurd has no unique result type", t->loc);
    }
    case Term::Kind::Case: {
      auto scrut = matrix_rec(model, ctx, t->t0);
      if (scrut.type.kind() != Type::Kind::Sum)
        throw lang::TypeError("case expects a sum", t->loc);
      Type ta = scrut.type.left(), tb = scrut.type.right();
      std::size_t na = lang::enumerate_inhabitants(ta, model.m).size();
      std::size_t nb = lang::enumerate_inhabitants(tb, model.m).size();
      Context ctx1 = ctx, ctx2 = ctx;
      ctx1.push(t->name, ta);
      ctx2.push(t->name2, tb);
      auto br1 = matrix_rec(model, ctx1, t->t1);
      auto br2 = matrix_rec(model, ctx2, t->t2);
      if (br1.type != br2.type) throw lang::TypeError("case branches disagree", t->loc);
      std::size_t nout = br1.matrix.cols();
      // distribute the environment over the scrutinee's outcome
      StochMatrix split(R, R * na + R * nb);
      for (std::size_t r = 0; r < R; ++r) {
        for (std::size_t a = 0; a < na; ++a) split.at(r, r * na + a) = scrut.matrix.at(r, a);
        for (std::size_t b = 0; b < nb; ++b)
          split.at(r, R * na + r * nb + b) = scrut.matrix.at(r, na + b);
      }
      StochMatrix stacked(R * na + R * nb, nout);
      for (std::size_t r = 0; r < R * na; ++r)
        for (std::size_t c = 0; c < nout; ++c) stacked.at(r, c) = br1.matrix.at(r, c);
      for (std::size_t r = 0; r < R * nb; ++r)
        for (std::size_t c = 0; c < nout; ++c)
          stacked.at(R * na + r, c) = br2.matrix.at(r, c);
      return {kleisli_compose(split, stacked), br1.type};
    }
    case Term::Kind::Const: {
      auto arg = matrix_rec(model, ctx, t->t0);
      switch (t->cst) {
        case ConstKind::New: {
          if (arg.type.kind() != Type::Kind::Unit)
            throw lang::TypeError("new expects unit", t->loc);
          StochMatrix fresh(1, model.m);
          for (int i = 0; i < model.m; ++i) fresh.at(0, i) = model.new_dist[i];
          return {kleisli_compose(arg.matrix, fresh), Type::vertex()};
        }
        case ConstKind::Edge: {
          if (arg.type.kind() != Type::Kind::Prod ||
              arg.type.left().kind() != Type::Kind::Vertex ||
              arg.type.right().kind() != Type::Kind::Vertex)
            throw lang::TypeError("edge expects vertex*vertex", t->loc);
          std::size_t m = static_cast<std::size_t>(model.m);
          StochMatrix kernel(m * m, 2);
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
              kernel.at(i * m + j, 0) = model.edge_true[i][j];
              kernel.at(i * m + j, 1) = Rat(1) - model.edge_true[i][j];
            }
          return {kleisli_compose(arg.matrix, kernel), Type::boolean()};
        }
        case ConstKind::Bernoulli: {
          if (arg.type.kind() != Type::Kind::Unit)
            throw lang::TypeError("bernoulli expects unit", t->loc);
          StochMatrix coin(1, 2);
          coin.at(0, 0) = t->weight;
          coin.at(0, 1) = Rat(1) - t->weight;
          return {kleisli_compose(arg.matrix, coin), Type::boolean()};
        }
      }
    }
  }
  throw std::logic_error("malformed term");
}

}  // namespace

MatrixSemantics term_matrix(const FiniteModel& model, const Context& ctx, const TermPtr& t) {
  model.validate();
  auto out = matrix_rec(model, ctx, t);
  out.matrix.validate();
  return out;
}

FinDist matrix_eval(const FiniteModel& model, const lang::TermPtr& t) {
  auto sem = term_matrix(model, Context{}, t);
  auto values = lang::enumerate_inhabitants(sem.type, model.m);
  FinDist d;
  for (std::size_t c = 0; c < values.size(); ++c) d.add_mass(values[c], sem.matrix.at(0, c));
  d.validate();
  return d;
}

std::string law_name(LawId law) {
  switch (law) {
    case LawId::LetAssoc:
      return "let-associativity";
    case LawId::LetPair:
      return "let-pair";
    case LawId::LetComm:
      return "let-commutativity";
    case LawId::LetAffine:
      return "let-affine";
    case LawId::LetVal:
      return "let-value-substitution";
    case LawId::EdgeIrrefl:
      return "edge-irreflexive";
    case LawId::EdgeSym:
      return "edge-symmetric";
    case LawId::EdgeDet:
      return "edge-deterministic";
  }
  return "?";
}

LawInstance law_let_assoc(const TermPtr& t, const std::string& x, const TermPtr& u,
                          const std::string& y, const TermPtr& tp) {
  if (lang::free_vars(tp).count(x))
    throw std::invalid_argument("let-assoc side condition: x free in t'");
  LawInstance inst;
  inst.lhs = lang::let(y, lang::let(x, t, u), tp);
  inst.rhs = lang::let(x, t, lang::let(y, u, tp));
  return inst;
}

LawInstance law_let_pair(const TermPtr& t, const TermPtr& u, const std::string& x,
                         const std::string& y) {
  LawInstance inst;
  inst.lhs = lang::pair(t, u);
  inst.rhs = lang::let(x, t, lang::let(y, u, lang::pair(lang::var(x), lang::var(y))));
  return inst;
}

LawInstance law_let_comm(const std::string& x, const TermPtr& t, const std::string& x2,
                         const TermPtr& t2, const TermPtr& u) {
  if (x == x2) throw std::invalid_argument("let-comm needs distinct binders");
  if (lang::free_vars(t2).count(x) || lang::free_vars(t).count(x2))
    throw std::invalid_argument("let-comm side condition violated");
  LawInstance inst;
  inst.lhs = lang::let(x, t, lang::let(x2, t2, u));
  inst.rhs = lang::let(x2, t2, lang::let(x, t, u));
  return inst;
}

LawInstance law_let_affine(const std::string& x, const TermPtr& tp, const TermPtr& t) {
  if (lang::free_vars(t).count(x))
    throw std::invalid_argument("let-affine side condition: x free in t");
  LawInstance inst;
  inst.lhs = lang::let(x, tp, t);
  inst.rhs = t;
  return inst;
}

LawInstance law_let_val(const std::string& x, const TermPtr& v, const TermPtr& t) {
  if (lang::uses_effects(v))
    throw std::invalid_argument("let-value substitution needs a deterministic value");
  LawInstance inst;
  inst.lhs = lang::let(x, v, t);
  inst.rhs = lang::substitute(t, x, v);
  return inst;
}

LawInstance axiom_edge_irrefl() {
  LawInstance inst;
  inst.ctx.push("x", Type::vertex());
  inst.lhs = lang::edge_query(lang::var("x"), lang::var("x"));
  inst.rhs = lang::false_term();
  inst.note = "edge(x,x) == false";
  return inst;
}

LawInstance axiom_edge_sym() {
  LawInstance inst;
  inst.ctx.push("x", Type::vertex());
  inst.ctx.push("y", Type::vertex());
  inst.lhs = lang::edge_query(lang::var("x"), lang::var("y"));
  inst.rhs = lang::edge_query(lang::var("y"), lang::var("x"));
  inst.note = "edge(x,y) == edge(y,x)";
  return inst;
}

LawInstance axiom_edge_det() {
  LawInstance inst;
  inst.lhs = lang::parse("let a = new() in let b = new() in edge(a,b) & not edge(a,b)");
  inst.rhs = lang::false_term();
  inst.note = "edge(a,b) & not edge(a,b) == false";
  return inst;
}

LawReport check_law(const FiniteModel& model, LawId law,
                    const std::vector<LawInstance>& instances) {
  model.validate();
  LawReport report;
  report.law = law;
  for (auto& inst : instances) {
    Type ta = lang::typecheck(inst.ctx, inst.lhs);
    Type tb = lang::typecheck(inst.ctx, inst.rhs);
    if (ta != tb)
      throw lang::TypeError("law instance sides have different types: " + ta.to_string() +
                                " vs " + tb.to_string(),
                            inst.lhs->loc);
    LawItem item;
    item.pass = true;
    std::vector<Env> envs = {{}};
    for (auto& [name, ty] : inst.ctx.vars) {
      std::vector<Env> next;
      for (auto& env : envs)
        for (auto& v : lang::enumerate_inhabitants(ty, model.m)) {
          Env extended = env;
          extended[name] = v;
          next.push_back(std::move(extended));
        }
      envs = std::move(next);
    }
    for (auto& env : envs) {
      FinDist da = eval_exact(model, inst.ctx, env, inst.lhs);
      FinDist db = eval_exact(model, inst.ctx, env, inst.rhs);
      if (da != db) {
        item.pass = false;
        std::string which = law == LawId::EdgeIrrefl || law == LawId::EdgeSym
                                ? "model violates simple-graph axiom; "
                                : "";
        item.detail = which + "lhs=" + da.to_string() + " rhs=" + db.to_string();
        if (law == LawId::EdgeDet)
          item.detail += " P(true)=" + rat_string(da.prob(Value::boolean(true)));
        break;
      }
      if (item.detail.empty()) item.detail = "lhs=rhs=" + da.to_string();
    }
    report.all_pass = report.all_pass && item.pass;
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace gppl::exact
