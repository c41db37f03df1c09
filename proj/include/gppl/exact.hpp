#pragma once

#include "gppl/findist.hpp"
#include "gppl/parser.hpp"
#include "gppl/typecheck.hpp"

#include <map>
#include <string>
#include <vector>

namespace gppl::exact {

// A finite implementation of the graph interface: vertices {0..m-1}, a
// distribution for new(), and a Bernoulli kernel per vertex pair for edge().
// Stochastic kernels are allowed on purpose so the law checker can show
// which graph axioms they break.
struct FiniteModel {
  int m = 0;
  std::vector<Rat> new_dist;                // size m
  std::vector<std::vector<Rat>> edge_true;  // m x m, P(edge(i,j) = true)
  bool deterministic = false;
  void validate() const;
  FinDist vertex_dist() const;
  FinDist edge_dist(int i, int j) const;
};

// Two disjoint complete subgraphs: m = 2, uniform new, edge(i,j) = [i == j].
FiniteModel two_cluster_model();

// One vertex whose self-edge is resampled with chance alpha on every query.
FiniteModel naive_bernoulli_model(const Rat& alpha);

using Env = std::map<std::string, Value>;

// Compositional distribution-monad evaluation.
FinDist eval_exact(const FiniteModel& model, const lang::TermPtr& t);  // closed term
FinDist eval_exact(const FiniteModel& model, const lang::Context& ctx, const Env& env,
                   const lang::TermPtr& t);

// Independent route through the same semantic clauses: each subterm becomes a
// stochastic matrix over environment tuples, composed by matrix product.
struct MatrixSemantics {
  StochMatrix matrix;
  lang::Type type;
};
MatrixSemantics term_matrix(const FiniteModel& model, const lang::Context& ctx,
                            const lang::TermPtr& t);
FinDist matrix_eval(const FiniteModel& model, const lang::TermPtr& t);  // closed term

enum class LawId {
  LetAssoc = 1,
  LetPair = 2,
  LetComm = 3,
  LetAffine = 4,
  LetVal = 5,
  EdgeIrrefl = 6,
  EdgeSym = 7,
  EdgeDet = 8,
};

std::string law_name(LawId law);

struct LawInstance {
  lang::Context ctx;
  lang::TermPtr lhs, rhs;
  std::string note;
};

LawInstance law_let_assoc(const lang::TermPtr& t, const std::string& x, const lang::TermPtr& u,
                          const std::string& y, const lang::TermPtr& tp);
LawInstance law_let_pair(const lang::TermPtr& t, const lang::TermPtr& u, const std::string& x,
                         const std::string& y);
LawInstance law_let_comm(const std::string& x, const lang::TermPtr& t, const std::string& x2,
                         const lang::TermPtr& t2, const lang::TermPtr& u);
LawInstance law_let_affine(const std::string& x, const lang::TermPtr& tp,
                           const lang::TermPtr& t);
LawInstance law_let_val(const std::string& x, const lang::TermPtr& v, const lang::TermPtr& t);
LawInstance axiom_edge_irrefl();
LawInstance axiom_edge_sym();
LawInstance axiom_edge_det();

struct LawItem {
  bool pass = false;
  std::string detail;
};

struct LawReport {
  LawId law;
  std::vector<LawItem> items;
  bool all_pass = true;
};

// Evaluates both sides of every instance under every environment for its
// context and compares the distributions exactly.
LawReport check_law(const FiniteModel& model, LawId law,
                    const std::vector<LawInstance>& instances);

}  // namespace gppl::exact
