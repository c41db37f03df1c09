#include "gppl/normal_form.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace gppl::sym {

using lang::ConstKind;
using lang::Term;
using lang::TermPtr;

namespace {

struct BranchState {
  Rat weight;
  EdgeAssignment edges;
  int allocated = 0;
};

using Env = std::map<std::string, Value>;
using Branches = std::vector<std::pair<BranchState, Value>>;

Branches eval_sym(const BranchState& st, const Env& env, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
      return {{st, env.at(t->name)}};
    case Term::Kind::Unit:
      return {{st, Value::unit()}};
    case Term::Kind::Pair: {
      Branches out;
      for (auto& [s1, a] : eval_sym(st, env, t->t0))
        for (auto& [s2, b] : eval_sym(s1, env, t->t1)) out.emplace_back(s2, Value::pair(a, b));
      return out;
    }
    case Term::Kind::Proj1: {
      Branches out;
      for (auto& [s, v] : eval_sym(st, env, t->t0)) out.emplace_back(s, v.first());
      return out;
    }
    case Term::Kind::Proj2: {
      Branches out;
      for (auto& [s, v] : eval_sym(st, env, t->t0)) out.emplace_back(s, v.second());
      return out;
    }
    case Term::Kind::Inj1: {
      Branches out;
      for (auto& [s, v] : eval_sym(st, env, t->t0)) out.emplace_back(s, Value::inl(v));
      return out;
    }
    case Term::Kind::Inj2: {
      Branches out;
      for (auto& [s, v] : eval_sym(st, env, t->t0)) out.emplace_back(s, Value::inr(v));
      return out;
    }
    case Term::Kind::Let: {
      Branches out;
      for (auto& [s1, a] : eval_sym(st, env, t->t0)) {
        Env inner = env;
        inner[t->name] = a;
        for (auto& leaf : eval_sym(s1, inner, t->t1)) out.push_back(leaf);
      }
      return out;
    }
    case Term::Kind::CaseZero: {
      Branches scrutinee = eval_sym(st, env, t->t0);
      if (!scrutinee.empty()) throw std::logic_error("absurd scrutinee produced a value");
      return {};
    }
    case Term::Kind::Case: {
      Branches out;
      for (auto& [s1, v] : eval_sym(st, env, t->t0)) {
        Env inner = env;
        if (v.kind() == Value::Kind::Inl) {
          inner[t->name] = v.first();
          for (auto& leaf : eval_sym(s1, inner, t->t1)) out.push_back(leaf);
        } else {
          inner[t->name2] = v.first();
          for (auto& leaf : eval_sym(s1, inner, t->t2)) out.push_back(leaf);
        }
      }
      return out;
    }
    case Term::Kind::Const: {
      Branches out;
      for (auto& [s, a] : eval_sym(st, env, t->t0)) {
        switch (t->cst) {
          case ConstKind::New: {
            BranchState next = s;
            int id = next.allocated++;
            out.emplace_back(next, Value::vertex(id));
            break;
          }
          case ConstKind::Edge: {
            int i = a.first().vertex_id();
            int j = a.second().vertex_id();
            if (i == j) {
              out.emplace_back(s, Value::boolean(false));
              break;
            }
            auto key = ordered_pair(i, j);
            auto it = s.edges.find(key);
            if (it != s.edges.end()) {
              out.emplace_back(s, Value::boolean(it->second));
              break;
            }
            BranchState yes = s, no = s;
            yes.edges[key] = true;
            no.edges[key] = false;
            out.emplace_back(yes, Value::boolean(true));
            out.emplace_back(no, Value::boolean(false));
            break;
          }
          case ConstKind::Bernoulli: {
            if (t->weight != 0) {
              BranchState yes = s;
              yes.weight *= t->weight;
              out.emplace_back(yes, Value::boolean(true));
            }
            if (t->weight != 1) {
              BranchState no = s;
              no.weight *= Rat(1) - t->weight;
              out.emplace_back(no, Value::boolean(false));
            }
            break;
          }
        }
      }
      return out;
    }
  }
  throw std::logic_error("malformed term");
}

}  // namespace

NormalForm normalize(const TermPtr& t) {
  lang::Type ty = lang::typecheck(t);  // rejects open terms
  if (ty.mentions_vertex())
    throw std::invalid_argument("normalize: result type mentions vertex");
  NormalForm nf;
  nf.result_type = ty;
  BranchState init{Rat(1), {}, 0};
  for (auto& [st, v] : eval_sym(init, Env{}, t)) {
    nf.max_allocated = std::max(nf.max_allocated, st.allocated);
    nf.leaves.push_back(Leaf{st.weight, st.edges, st.allocated, v});
  }
  return nf;
}

exact::FinDist outcome_distribution(const NormalForm& nf, const graphon::Graphon& w) {
  if (!w.exact())
    throw std::invalid_argument(
        "predicate graphon has no exact path; estimate it by sampling instead");
  exact::FinDist d;
  for (auto& leaf : nf.leaves)
    d.add_mass(leaf.outcome, leaf.weight * constraint_probability(w, leaf.allocated, leaf.edges));
  d.validate();
  return d;
}

graphon::RandomGraphModel induced_rgm(const graphon::Graphon& w, int n_max, int bound) {
  if (n_max < 1) throw std::invalid_argument("induced_rgm requires n >= 1");
  if (n_max > bound)
    throw std::invalid_argument("induced_rgm: n exceeds the configured bound of " +
                                std::to_string(bound));
  graphon::RandomGraphModel model;
  for (int n = 1; n <= n_max; ++n) {
    exact::FinDist d = outcome_distribution(normalize(lang::gen_t_n(n)), w);
    graphon::AdjDist level;
    for (auto& [v, p] : d.support()) level[graphon::decode_adjacency(v, n)] += p;
    model.levels.push_back(std::move(level));
  }
  return model;
}

}  // namespace gppl::sym
