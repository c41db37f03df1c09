#include "gppl/graphon.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gppl::graphon {

void SphereSpec::validate() const {
  if (dim < 2) throw std::invalid_argument("sphere dimension must be at least 2");
  if (!(theta > 0.0) || !(theta < std::acos(-1.0)))
    throw std::invalid_argument("theta must lie strictly between 0 and pi");
}

Graphon Graphon::constant(const Rat& alpha) {
  if (!in_unit_interval(alpha))
    throw std::invalid_argument("graphon value outside [0,1]: " + rat_string(alpha));
  Graphon w;
  w.kind_ = Kind::Constant;
  w.weights_ = {Rat(1)};
  w.matrix_ = {{alpha}};
  return w;
}

Graphon Graphon::step(std::vector<Rat> weights, std::vector<std::vector<Rat>> matrix) {
  if (weights.empty()) throw std::invalid_argument("step graphon needs at least one block");
  Rat sum(0);
  for (auto& p : weights) {
    if (p < 0) throw std::invalid_argument("negative block weight");
    sum += p;
  }
  if (sum != 1) throw std::invalid_argument("block weights must sum to 1");
  const std::size_t k = weights.size();
  if (matrix.size() != k) throw std::invalid_argument("step matrix has wrong size");
  for (std::size_t i = 0; i < k; ++i) {
    if (matrix[i].size() != k) throw std::invalid_argument("step matrix has wrong size");
    for (std::size_t j = 0; j < k; ++j) {
      if (!in_unit_interval(matrix[i][j]))
        throw std::invalid_argument("step matrix entry outside [0,1]");
      if (matrix[i][j] != matrix[j][i])
        throw std::invalid_argument("step matrix must be symmetric");
    }
  }
  Graphon w;
  w.kind_ = Kind::Step;
  w.weights_ = std::move(weights);
  w.matrix_ = std::move(matrix);
  return w;
}

Graphon Graphon::sphere(const SphereSpec& spec) {
  spec.validate();
  Graphon w;
  w.kind_ = Kind::Predicate;
  w.sphere_ = spec;
  return w;
}

const Rat& Graphon::alpha() const {
  if (kind_ != Kind::Constant) throw std::logic_error("not a constant graphon");
  return matrix_[0][0];
}

const std::vector<Rat>& Graphon::weights() const {
  if (kind_ == Kind::Predicate) throw std::logic_error("predicate graphon has no blocks");
  return weights_;
}

const std::vector<std::vector<Rat>>& Graphon::matrix() const {
  if (kind_ == Kind::Predicate) throw std::logic_error("predicate graphon has no blocks");
  return matrix_;
}

const SphereSpec& Graphon::sphere_spec() const {
  if (kind_ != Kind::Predicate) throw std::logic_error("not a predicate graphon");
  return sphere_;
}

std::string Graphon::to_string() const {
  switch (kind_) {
    case Kind::Constant:
      return "constant(" + rat_string(alpha()) + ")";
    case Kind::Step:
      return "step(" + std::to_string(weights_.size()) + " blocks)";
    case Kind::Predicate:
      return "sphere(d=" + std::to_string(sphere_.dim) + ")";
  }
  return "?";
}

bool is_black_and_white(const Graphon& w) {
  if (w.kind() == Graphon::Kind::Predicate) return true;  // an indicator by construction
  for (auto& row : w.matrix())
    for (auto& p : row)
      if (p != 0 && p != 1) return false;
  return true;
}

AdjMatrix AdjMatrix::checked(int n, std::uint32_t bits) {
  if (n < 1 || n > 5) throw std::invalid_argument("adjacency matrix size out of range");
  AdjMatrix g{n, bits};
  for (int i = 0; i < n; ++i) {
    if (g.edge(i, i)) throw std::invalid_argument("adjacency matrix has a self loop");
    for (int j = 0; j < n; ++j)
      if (g.edge(i, j) != g.edge(j, i))
        throw std::invalid_argument("adjacency matrix is not symmetric");
  }
  if (n * n < 32 && (bits >> (n * n)) != 0)
    throw std::invalid_argument("adjacency matrix has stray bits");
  return g;
}

AdjMatrix AdjMatrix::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::uint32_t bits = 0;
  for (auto& [i, j] : edges) {
    if (i == j || i < 0 || j < 0 || i >= n || j >= n)
      throw std::invalid_argument("bad edge in adjacency matrix");
    bits |= 1u << (i * n + j);
    bits |= 1u << (j * n + i);
  }
  return checked(n, bits);
}

int AdjMatrix::edge_count() const {
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(i, j)) ++count;
  return count;
}

std::string AdjMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < n * n; ++i) s += ((bits >> i) & 1u) ? '1' : '0';
  return s;
}

Rat constraint_probability(const Graphon& w, int k, const EdgeAssignment& c) {
  if (!w.exact())
    throw std::invalid_argument("predicate graphon has no exact constraint probability");
  for (auto& [pr, e] : c)
    if (pr.first < 0 || pr.second >= k || pr.first >= pr.second)
      throw std::invalid_argument("edge assignment mentions a vertex outside 0..k-1");
  if (w.kind() == Graphon::Kind::Constant) {
    const Rat& alpha = w.alpha();
    Rat acc(1);
    for (auto& [pr, e] : c) acc *= e ? alpha : Rat(1) - alpha;
    return acc;
  }
  // Step: sum over block assignments of the mentioned vertices.
  std::set<int> mentioned_set;
  for (auto& [pr, e] : c) {
    mentioned_set.insert(pr.first);
    mentioned_set.insert(pr.second);
  }
  std::vector<int> mentioned(mentioned_set.begin(), mentioned_set.end());
  const std::size_t v = mentioned.size();
  const std::size_t blocks = w.weights().size();
  std::vector<std::size_t> color(v, 0);
  std::map<int, std::size_t> slot;
  for (std::size_t i = 0; i < v; ++i) slot[mentioned[i]] = i;
  Rat total(0);
  while (true) {
    Rat term(1);
    for (std::size_t i = 0; i < v; ++i) term *= w.weights()[color[i]];
    for (auto& [pr, e] : c) {
      const Rat& p = w.matrix()[color[slot[pr.first]]][color[slot[pr.second]]];
      term *= e ? p : Rat(1) - p;
      if (term == 0) break;
    }
    total += term;
    std::size_t i = 0;
    for (; i < v; ++i) {
      if (++color[i] < blocks) break;
      color[i] = 0;
    }
    if (i == v) break;
  }
  return total;
}

AdjDist p_w_n(const Graphon& w, int n, int bound) {
  if (n < 1) throw std::invalid_argument("p_w_n requires n >= 1");
  if (n > bound) throw std::invalid_argument("p_w_n bound exceeded");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  AdjDist dist;
  for (std::uint32_t pattern = 0; pattern < (1u << pairs.size()); ++pattern) {
    EdgeAssignment c;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      bool present = (pattern >> e) & 1u;
      c[pairs[e]] = present;
      if (present) edges.push_back(pairs[e]);
    }
    Rat p = constraint_probability(w, n, c);
    if (p != 0) dist[AdjMatrix::from_edges(n, edges)] += p;
  }
  return dist;
}

CheckResult check_exchangeable(const AdjDist& p, int n) {
  if (n > 4) throw std::invalid_argument("exchangeability check enumerates n <= 4 only");
  for (auto& [g, q] : p)
    if (g.n != n) throw std::invalid_argument("atom has wrong vertex count");
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    AdjDist relabeled;
    for (auto& [g, q] : p) {
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (g.edge(i, j)) edges.emplace_back(sigma[i], sigma[j]);
      relabeled[AdjMatrix::from_edges(n, edges)] += q;
    }
    if (relabeled != p) {
      std::string perm;
      for (int s : sigma) perm += std::to_string(s + 1);
      return {false, "distribution moves under permutation (" + perm + ")"};
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return {true, "invariant under all " + std::to_string(n) + "! relabelings"};
}

CheckResult check_consistent(const AdjDist& p_next, const AdjDist& p) {
  if (p.empty() || p_next.empty()) return {false, "empty distribution"};
  int n = p.begin()->first.n;
  for (auto& [g, q] : p_next)
    if (g.n != n + 1) return {false, "level sizes are not adjacent"};
  AdjDist marginal;
  for (auto& [g, q] : p_next) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (g.edge(i, j)) edges.emplace_back(i, j);
    marginal[AdjMatrix::from_edges(n, edges)] += q;
  }
  if (marginal != p) return {false, "marginal of p_{n+1} differs from p_n"};
  return {true, "deleting the last vertex recovers p_" + std::to_string(n)};
}

namespace {

std::uint32_t induced_bits(const AdjMatrix& g, const std::vector<int>& vs) {
  const int k = static_cast<int>(vs.size());
  std::uint32_t bits = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (g.edge(vs[i], vs[j])) bits |= 1u << (i * k + j);
  return bits;
}

}  // namespace

CheckResult check_local(const AdjDist& p, const std::vector<int>& a,
                        const std::vector<int>& b) {
  if (p.empty()) return {false, "empty distribution"};
  int n = p.begin()->first.n;
  for (int i : a)
    for (int j : b)
      if (i == j) throw std::invalid_argument("index sets must be disjoint");
  for (int i : a)
    if (i < 0 || i >= n) throw std::invalid_argument("index out of range");
  for (int j : b)
    if (j < 0 || j >= n) throw std::invalid_argument("index out of range");

  std::map<std::pair<std::uint32_t, std::uint32_t>, Rat> joint;
  std::map<std::uint32_t, Rat> left, right;
  for (auto& [g, q] : p) {
    auto key = std::make_pair(induced_bits(g, a), induced_bits(g, b));
    joint[key] += q;
    left[key.first] += q;
    right[key.second] += q;
  }
  for (auto& [la, pa] : left)
    for (auto& [rb, pb] : right) {
      Rat expected = pa * pb;
      auto it = joint.find({la, rb});
      Rat actual = it == joint.end() ? Rat(0) : it->second;
      if (actual != expected)
        return {false, "joint block distribution is not the product of its marginals"};
    }
  return {true, "induced subgraphs on the two index sets are independent"};
}

std::uint32_t flatten_bool_matrix(const Value& v, int n) {
  std::uint32_t bits = 0;
  Value cur = v;
  const int total = n * n;
  for (int i = 0; i < total - 1; ++i) {
    if (cur.kind() != Value::Kind::Pair)
      throw std::invalid_argument("matrix value has wrong shape");
    if (cur.first().as_bool()) bits |= 1u << i;
    cur = cur.second();
  }
  if (cur.as_bool()) bits |= 1u << (total - 1);
  return bits;
}

AdjMatrix decode_adjacency(const Value& v, int n) {
  return AdjMatrix::checked(n, flatten_bool_matrix(v, n));
}

}  // namespace gppl::graphon
