#pragma once

#include "gppl/edge_assignment.hpp"
#include "gppl/rational.hpp"
#include "gppl/value.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gppl::graphon {

// Latent space of a geometric predicate graphon: points on the unit sphere
// in R^dim, an edge when the angle is strictly below theta.
struct SphereSpec {
  int dim = 3;
  double theta = 0.0;
  void validate() const;
};

// Constant and step graphons admit exact computation; predicate graphons are
// only reachable through sampling.
class Graphon {
 public:
  enum class Kind { Constant, Step, Predicate };

  static Graphon constant(const Rat& alpha);
  static Graphon step(std::vector<Rat> weights, std::vector<std::vector<Rat>> matrix);
  static Graphon sphere(const SphereSpec& spec);

  Kind kind() const { return kind_; }
  bool exact() const { return kind_ != Kind::Predicate; }
  const Rat& alpha() const;                            // Constant
  const std::vector<Rat>& weights() const;             // Constant/Step
  const std::vector<std::vector<Rat>>& matrix() const; // Constant/Step
  const SphereSpec& sphere_spec() const;               // Predicate
  std::string to_string() const;

 private:
  Kind kind_ = Kind::Constant;
  std::vector<Rat> weights_;
  std::vector<std::vector<Rat>> matrix_;
  SphereSpec sphere_;
};

// True when the graphon is {0,1}-valued.
bool is_black_and_white(const Graphon& w);

// Simple labeled graph on n vertices, stored as row-major n*n bits with a
// zero diagonal and symmetric entries.
struct AdjMatrix {
  int n = 0;
  std::uint32_t bits = 0;

  static AdjMatrix checked(int n, std::uint32_t bits);
  static AdjMatrix from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  bool edge(int i, int j) const { return (bits >> (i * n + j)) & 1u; }
  int edge_count() const;
  std::string to_string() const;

  friend bool operator==(const AdjMatrix& a, const AdjMatrix& b) {
    return a.n == b.n && a.bits == b.bits;
  }
  friend bool operator<(const AdjMatrix& a, const AdjMatrix& b) {
    return a.n != b.n ? a.n < b.n : a.bits < b.bits;
  }
};

using AdjDist = std::map<AdjMatrix, Rat>;

struct RandomGraphModel {
  std::vector<AdjDist> levels;  // levels[k] is the distribution over (k+1)-vertex graphs
};

// Probability that a graph sampled from the graphon agrees with the decided
// pairs. Only the mentioned vertices enter; undecided pairs marginalize out.
Rat constraint_probability(const Graphon& w, int k, const EdgeAssignment& c);

// Exact distribution over all simple graphs on n labeled vertices.
AdjDist p_w_n(const Graphon& w, int n, int bound = 5);

struct CheckResult {
  bool pass = false;
  std::string detail;
};

CheckResult check_exchangeable(const AdjDist& p, int n);
CheckResult check_consistent(const AdjDist& p_next, const AdjDist& p);
CheckResult check_local(const AdjDist& p, const std::vector<int>& a, const std::vector<int>& b);

// Row-major bits of a nested-pair boolean matrix value (no validity checks).
std::uint32_t flatten_bool_matrix(const Value& v, int n);

// Decodes the outcome of the t_n program, validating the simple-graph shape.
AdjMatrix decode_adjacency(const Value& v, int n);

}  // namespace gppl::graphon
