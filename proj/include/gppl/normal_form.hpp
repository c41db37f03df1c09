#pragma once

#include "gppl/edge_assignment.hpp"
#include "gppl/findist.hpp"
#include "gppl/graphon.hpp"
#include "gppl/typecheck.hpp"

#include <vector>

namespace gppl::sym {

// One branch of the normalized program: a coin weight, the edge queries it
// decided, how many vertices it allocated, and the resulting value.
struct Leaf {
  Rat weight;
  EdgeAssignment edges;
  int allocated = 0;
  Value outcome;
};

// A closed program with all allocations pulled to the front: the outcome is
// a function of the induced graph on the allocated vertices plus coin flips.
struct NormalForm {
  lang::Type result_type;
  std::vector<Leaf> leaves;  // depth-first, true branches first
  int max_allocated = 0;
};

// Symbolic big-step evaluation. No probabilistic choices happen here: edge
// queries fork, repeated queries are memoized, edge(v,v) is false.
NormalForm normalize(const lang::TermPtr& t);

// Resolves the edge constraints of every leaf against a graphon.
exact::FinDist outcome_distribution(const NormalForm& nf, const graphon::Graphon& w);

// The random graph model induced by the t_n programs, n = 1..n_max.
graphon::RandomGraphModel induced_rgm(const graphon::Graphon& w, int n_max, int bound = 4);

}  // namespace gppl::sym
