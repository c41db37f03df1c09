#include "gppl/termgen.hpp"

namespace gppl::gen {

using lang::Context;
using lang::TermPtr;
using lang::Type;

std::string TermGen::fresh() { return "g" + std::to_string(counter_++); }

Rat TermGen::random_weight() {
  long long den = 1 + static_cast<long long>(roll(6));
  long long num = static_cast<long long>(roll(den + 1));
  return Rat(num, den);
}

Type TermGen::random_type(int depth, bool allow_vertex) {
  std::size_t top = depth > 0 ? 8 : 6;
  switch (roll(top)) {
    case 0:
    case 1:
      return Type::unit();
    case 2:
    case 3:
    case 4:
      return Type::boolean();
    case 5:
      return allow_vertex ? Type::vertex() : Type::boolean();
    case 6:
      return Type::prod(random_type(depth - 1, allow_vertex),
                        random_type(depth - 1, allow_vertex));
    default:
      return Type::prod(random_type(depth - 1, allow_vertex), Type::boolean());
  }
}

TermPtr TermGen::vertex_term(Context& ctx, int budget, bool effects) {
  std::vector<std::string> candidates;
  for (auto& [name, ty] : ctx.vars)
    if (ty.kind() == Type::Kind::Vertex) candidates.push_back(name);
  if (!candidates.empty() && (budget <= 0 || roll(2) == 0 || !effects))
    return lang::var(candidates[roll(candidates.size())]);
  if (!effects) {
    if (candidates.empty())
      throw std::logic_error("cannot build a deterministic vertex term without one in scope");
    return lang::var(candidates[roll(candidates.size())]);
  }
  return lang::new_vertex();
}

TermPtr TermGen::term_in(Context& ctx, const Type& target, int budget, bool effects) {
  std::vector<std::string> var_hits;
  for (auto& [name, ty] : ctx.vars)
    if (ty == target) var_hits.push_back(name);

  // Leaf forms when the budget runs out.
  if (budget <= 0) {
    if (!var_hits.empty() && roll(2) == 0) return lang::var(var_hits[roll(var_hits.size())]);
    switch (target.kind()) {
      case Type::Kind::Unit:
        return lang::unit_intro();
      case Type::Kind::Sum:
        return roll(2) == 0 ? lang::true_term() : lang::false_term();
      case Type::Kind::Prod:
        return lang::pair(term_in(ctx, target.left(), 0, effects),
                          term_in(ctx, target.right(), 0, effects));
      case Type::Kind::Vertex:
        return vertex_term(ctx, 0, effects);
      case Type::Kind::Empty:
        throw std::logic_error("no closed term of empty type");
    }
  }

  // 0..3 introductions, 4 variable, 5 let, 6 if, 7 projection, 8+ constants
  switch (roll(10)) {
    case 0:
    case 1:
    case 2:
    case 3:
      break;  // introduction form below
    case 4:
      if (!var_hits.empty()) return lang::var(var_hits[roll(var_hits.size())]);
      break;
    case 5: {
      Type bound_ty = random_type(1, effects);
      std::string x = fresh();
      TermPtr bound = term_in(ctx, bound_ty, budget / 2, effects);
      ctx.push(x, bound_ty);
      TermPtr body = term_in(ctx, target, budget - 1, effects);
      ctx.vars.pop_back();
      return lang::let(x, bound, body);
    }
    case 6: {
      TermPtr scrut = term_in(ctx, Type::boolean(), budget / 2, effects);
      std::string x1 = fresh(), x2 = fresh();
      ctx.push(x1, Type::unit());
      TermPtr br1 = term_in(ctx, target, budget / 2, effects);
      ctx.vars.pop_back();
      ctx.push(x2, Type::unit());
      TermPtr br2 = term_in(ctx, target, budget / 2, effects);
      ctx.vars.pop_back();
      return lang::case_of(scrut, x1, br1, x2, br2);
    }
    case 7: {
      bool left = roll(2) == 0;
      Type other = random_type(0, effects);
      Type pair_ty = left ? Type::prod(target, other) : Type::prod(other, target);
      TermPtr p = term_in(ctx, pair_ty, budget - 1, effects);
      return left ? lang::proj1(p) : lang::proj2(p);
    }
    default:
      if (effects && target.is_bool()) {
        if (roll(2) == 0) return lang::bernoulli(random_weight());
        return lang::edge_query(vertex_term(ctx, budget / 2, effects),
                                vertex_term(ctx, budget / 2, effects));
      }
      break;
  }

  switch (target.kind()) {
    case Type::Kind::Unit:
      return lang::unit_intro();
    case Type::Kind::Sum:
      return roll(2) == 0 ? lang::true_term() : lang::false_term();
    case Type::Kind::Prod:
      return lang::pair(term_in(ctx, target.left(), budget / 2, effects),
                        term_in(ctx, target.right(), budget / 2, effects));
    case Type::Kind::Vertex:
      return vertex_term(ctx, budget, effects);
    case Type::Kind::Empty:
      throw std::logic_error("no closed term of empty type");
  }
  throw std::logic_error("unreachable");
}

TermPtr TermGen::closed_term(const Type& target, int budget, bool effects) {
  Context ctx;
  return term_in(ctx, target, budget, effects);
}

TermPtr TermGen::closed_term(int budget, bool effects) {
  return closed_term(random_type(2, effects), budget, effects);
}

exact::LawInstance TermGen::law_instance(exact::LawId law, int budget) {
  using exact::LawId;
  switch (law) {
    case LawId::LetAssoc: {
      Type a = random_type(1, true);
      Type b = random_type(1, true);
      Type c = random_type(1, true);
      std::string x = fresh(), y = fresh();
      TermPtr t = closed_term(a, budget, true);
      Context ctx_u;
      ctx_u.push(x, a);
      TermPtr u = term_in(ctx_u, b, budget, true);
      Context ctx_tp;
      ctx_tp.push(y, b);
      TermPtr tp = term_in(ctx_tp, c, budget, true);
      return exact::law_let_assoc(t, x, u, y, tp);
    }
    case LawId::LetPair: {
      TermPtr t = closed_term(budget, true);
      TermPtr u = closed_term(budget, true);
      return exact::law_let_pair(t, u, fresh(), fresh());
    }
    case LawId::LetComm: {
      Type a = random_type(1, true);
      Type a2 = random_type(1, true);
      Type c = random_type(1, true);
      std::string x = fresh(), x2 = fresh();
      TermPtr t = closed_term(a, budget, true);
      TermPtr t2 = closed_term(a2, budget, true);
      Context ctx_u;
      ctx_u.push(x, a);
      ctx_u.push(x2, a2);
      TermPtr u = term_in(ctx_u, c, budget, true);
      return exact::law_let_comm(x, t, x2, t2, u);
    }
    case LawId::LetAffine: {
      TermPtr tp = closed_term(budget, true);
      TermPtr t = closed_term(budget, true);
      return exact::law_let_affine(fresh(), tp, t);
    }
    case LawId::LetVal: {
      Type a = random_type(1, false);
      std::string x = fresh();
      TermPtr v = closed_term(a, budget / 2, false);  // syntactically deterministic
      Context ctx_t;
      ctx_t.push(x, a);
      TermPtr t = term_in(ctx_t, random_type(1, true), budget, true);
      return exact::law_let_val(x, v, t);
    }
    default:
      throw std::invalid_argument("law_instance covers the five program laws only");
  }
}

}  // namespace gppl::gen
