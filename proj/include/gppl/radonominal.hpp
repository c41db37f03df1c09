#pragma once

#include "gppl/graphon.hpp"
#include "gppl/rational.hpp"

#include <string>
#include <vector>

namespace gppl::rado {

// Named support vertices together with the finite graph structure on them.
struct SupportGraph {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> adj;  // symmetric, irreflexive

  int size() const { return static_cast<int>(names.size()); }
  void validate() const;
  int index_of(const std::string& name) const;  // -1 when absent

  friend bool operator==(const SupportGraph& a, const SupportGraph& b) {
    return a.names == b.names && a.adj == b.adj;
  }
};

SupportGraph empty_support();
SupportGraph discrete_support(std::vector<std::string> names);  // no edges

// Finitely supported set of vertices: a fresh vertex belongs according to its
// connectivity type over the support (bit i of the index = edge to vertex i),
// support vertices according to their own membership bits.
struct DefinableSet1 {
  SupportGraph support;
  std::vector<bool> type_table;       // size 1 << m
  std::vector<bool> atom_membership;  // size m

  void validate() const;
  static DefinableSet1 none(const SupportGraph& s);
  static DefinableSet1 whole(const SupportGraph& s);
  static DefinableSet1 from_pattern(const SupportGraph& s, unsigned pattern);
};

// The internal measure with edge chance alpha: each connectivity type has
// weight alpha^{#edges} (1-alpha)^{#non-edges}; atoms carry no mass.
Rat measure(const Rat& alpha, const DefinableSet1& s);

DefinableSet1 complement(const DefinableSet1& s);
DefinableSet1 set_union(const DefinableSet1& a, const DefinableSet1& b);         // same support
DefinableSet1 set_intersection(const DefinableSet1& a, const DefinableSet1& b);  // same support

// Re-expands the set over a larger support graph containing the old one by
// name (with agreeing adjacency); the represented set is unchanged.
DefinableSet1 extend_support(const DefinableSet1& s, const SupportGraph& larger);

// Finitely supported function into [0,1], constant on connectivity types.
struct FinSuppFunction1 {
  SupportGraph support;
  std::vector<Rat> type_value;  // size 1 << m
  std::vector<Rat> atom_value;  // size m

  void validate() const;
  static FinSuppFunction1 indicator(const DefinableSet1& s);
  static FinSuppFunction1 constant_fn(const Rat& q);
};

Rat integrate(const Rat& alpha, const FinSuppFunction1& f);

// Finitely supported set of vertex pairs. Fresh distinct pairs are classified
// by both connectivity types and the edge bit between them; the degenerate
// configurations carry their own tables.
struct DefinableSet2 {
  SupportGraph support;
  std::vector<bool> pair_table;          // (1<<m) * (1<<m) * 2
  std::vector<bool> diag_table;          // x == y fresh: 1<<m
  std::vector<bool> x_support_table;     // x = a_i, y fresh: m * (1<<m)
  std::vector<bool> y_support_table;     // x fresh, y = a_j: (1<<m) * m
  std::vector<bool> both_support_table;  // m * m

  void validate() const;
  bool pair_at(unsigned tx, unsigned ty, bool e) const;
  void set_pair(unsigned tx, unsigned ty, bool e, bool member);

  static DefinableSet2 none(const SupportGraph& s);
  static DefinableSet2 whole(const SupportGraph& s);
  static DefinableSet2 edge_relation(const SupportGraph& s);  // {(x,y) | E(x,y)}
  static DefinableSet2 diagonal(const SupportGraph& s);       // {(x,y) | x = y}
  // {(x,y) | x,y fresh distinct, E(a_i,x)<->phi_i, E(a_i,y)<->psi_i, E(x,y)<->eps}
  static DefinableSet2 extension_pattern(const SupportGraph& s, unsigned phi, unsigned psi,
                                         bool eps);
};

DefinableSet2 complement(const DefinableSet2& s);
DefinableSet2 set_union(const DefinableSet2& a, const DefinableSet2& b);
DefinableSet2 set_intersection(const DefinableSet2& a, const DefinableSet2& b);

enum class Order { XY, YX };  // XY: x outer, y inner

// Iterated integral of the indicator of f over vertex pairs. The x variable
// integrates against the beta measure and y against alpha; the order picks
// which integral is inner. The inner pass yields a finitely supported
// function of the outer variable, which then integrates as usual.
Rat iterated_integral(const Rat& alpha, const Rat& beta, const DefinableSet2& f, Order order);

struct FubiniItem {
  std::string name;
  Rat xy, yx;
  bool equal = false;
};

struct FubiniReport {
  std::vector<FubiniItem> items;
  bool all_equal = true;
};

FubiniReport fubini_check(const Rat& alpha, const Rat& beta,
                          const std::vector<std::pair<std::string, DefinableSet2>>& corpus);

// All two-vertex extension patterns over supports of size <= 1.
std::vector<std::pair<std::string, DefinableSet2>> extension_corpus_up_to_one_param();

struct CrossCheckResult {
  bool pass = false;
  graphon::AdjDist rado_dist;    // by sequential internal integration
  graphon::AdjDist direct_dist;  // by direct graphon enumeration
};

// Computes the t_n outcome distribution by internal integration over Rado
// vertices and compares with the constant graphon, n <= 3.
CrossCheckResult er_cross_check(const Rat& alpha, int n);

}  // namespace gppl::rado
