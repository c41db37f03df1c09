#include "gppl/radonominal.hpp"

#include <bit>
#include <stdexcept>

namespace gppl::rado {

namespace {

int popcount(unsigned x) { return std::popcount(x); }

Rat type_weight(const Rat& alpha, unsigned tau, int m) {
  return rat_pow(alpha, popcount(tau)) * rat_pow(Rat(1) - alpha, m - popcount(tau));
}

void require_same_support(const SupportGraph& a, const SupportGraph& b) {
  if (!(a == b))
    throw std::invalid_argument("operands must share a support (merge supports first)");
}

}  // namespace

void SupportGraph::validate() const {
  const std::size_t m = names.size();
  if (adj.size() != m) throw std::invalid_argument("support adjacency has wrong size");
  for (std::size_t i = 0; i < m; ++i) {
    if (adj[i].size() != m) throw std::invalid_argument("support adjacency has wrong size");
    if (adj[i][i]) throw std::invalid_argument("support graph has a self loop");
    for (std::size_t j = 0; j < m; ++j)
      if (adj[i][j] != adj[j][i]) throw std::invalid_argument("support graph is not symmetric");
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (names[i] == names[j]) throw std::invalid_argument("duplicate support vertex name");
}

int SupportGraph::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  return -1;
}

SupportGraph empty_support() { return SupportGraph{}; }

SupportGraph discrete_support(std::vector<std::string> names) {
  SupportGraph s;
  s.adj.assign(names.size(), std::vector<bool>(names.size(), false));
  s.names = std::move(names);
  s.validate();
  return s;
}

void DefinableSet1::validate() const {
  support.validate();
  const int m = support.size();
  if (type_table.size() != (1u << m))
    throw std::invalid_argument("type table must have 2^m entries");
  if (atom_membership.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("atom membership must have m entries");
}

DefinableSet1 DefinableSet1::none(const SupportGraph& s) {
  DefinableSet1 out;
  out.support = s;
  out.type_table.assign(1u << s.size(), false);
  out.atom_membership.assign(s.size(), false);
  return out;
}

DefinableSet1 DefinableSet1::whole(const SupportGraph& s) {
  DefinableSet1 out = none(s);
  out.type_table.assign(out.type_table.size(), true);
  out.atom_membership.assign(out.atom_membership.size(), true);
  return out;
}

DefinableSet1 DefinableSet1::from_pattern(const SupportGraph& s, unsigned pattern) {
  DefinableSet1 out = none(s);
  if (pattern >= out.type_table.size())
    throw std::invalid_argument("connectivity pattern out of range");
  out.type_table[pattern] = true;
  return out;
}

Rat measure(const Rat& alpha, const DefinableSet1& s) {
  if (!in_unit_interval(alpha)) throw std::invalid_argument("alpha outside [0,1]");
  s.validate();
  const int m = s.support.size();
  Rat total(0);
  for (unsigned tau = 0; tau < s.type_table.size(); ++tau)
    if (s.type_table[tau]) total += type_weight(alpha, tau, m);
  return total;  // atoms carry no mass
}

DefinableSet1 complement(const DefinableSet1& s) {
  DefinableSet1 out = s;
  for (auto&& bit : out.type_table) bit = !bit;
  for (auto&& bit : out.atom_membership) bit = !bit;
  return out;
}

DefinableSet1 set_union(const DefinableSet1& a, const DefinableSet1& b) {
  require_same_support(a.support, b.support);
  DefinableSet1 out = a;
  for (std::size_t i = 0; i < out.type_table.size(); ++i)
    out.type_table[i] = out.type_table[i] || b.type_table[i];
  for (std::size_t i = 0; i < out.atom_membership.size(); ++i)
    out.atom_membership[i] = out.atom_membership[i] || b.atom_membership[i];
  return out;
}

DefinableSet1 set_intersection(const DefinableSet1& a, const DefinableSet1& b) {
  require_same_support(a.support, b.support);
  DefinableSet1 out = a;
  for (std::size_t i = 0; i < out.type_table.size(); ++i)
    out.type_table[i] = out.type_table[i] && b.type_table[i];
  for (std::size_t i = 0; i < out.atom_membership.size(); ++i)
    out.atom_membership[i] = out.atom_membership[i] && b.atom_membership[i];
  return out;
}

DefinableSet1 extend_support(const DefinableSet1& s, const SupportGraph& larger) {
  s.validate();
  larger.validate();
  const int m_old = s.support.size();
  const int m_new = larger.size();
  std::vector<int> embed(m_old);
  for (int i = 0; i < m_old; ++i) {
    embed[i] = larger.index_of(s.support.names[i]);
    if (embed[i] < 0)
      throw std::invalid_argument("larger support misses vertex " + s.support.names[i]);
  }
  for (int i = 0; i < m_old; ++i)
    for (int j = 0; j < m_old; ++j)
      if (s.support.adj[i][j] != larger.adj[embed[i]][embed[j]])
        throw std::invalid_argument("incompatible adjacency between shared support vertices");

  DefinableSet1 out = DefinableSet1::none(larger);
  // A fresh vertex keeps its membership from its old connectivity type.
  for (unsigned tau = 0; tau < out.type_table.size(); ++tau) {
    unsigned old_tau = 0;
    for (int i = 0; i < m_old; ++i)
      if ((tau >> embed[i]) & 1u) old_tau |= 1u << i;
    out.type_table[tau] = s.type_table[old_tau];
  }
  // New support vertices were fresh before: classify them by their edges
  // into the old support. Old ones keep their membership bit.
  for (int v = 0; v < m_new; ++v) {
    int old_index = s.support.index_of(larger.names[v]);
    if (old_index >= 0) {
      out.atom_membership[v] = s.atom_membership[old_index];
    } else {
      unsigned tau = 0;
      for (int i = 0; i < m_old; ++i)
        if (larger.adj[v][embed[i]]) tau |= 1u << i;
      out.atom_membership[v] = s.type_table[tau];
    }
  }
  return out;
}

void FinSuppFunction1::validate() const {
  support.validate();
  const int m = support.size();
  if (type_value.size() != (1u << m))
    throw std::invalid_argument("type values must have 2^m entries");
  if (atom_value.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("atom values must have m entries");
  for (auto& q : type_value)
    if (!in_unit_interval(q)) throw std::invalid_argument("function value outside [0,1]");
  for (auto& q : atom_value)
    if (!in_unit_interval(q)) throw std::invalid_argument("function value outside [0,1]");
}

FinSuppFunction1 FinSuppFunction1::indicator(const DefinableSet1& s) {
  FinSuppFunction1 f;
  f.support = s.support;
  f.type_value.reserve(s.type_table.size());
  for (bool b : s.type_table) f.type_value.push_back(b ? Rat(1) : Rat(0));
  for (bool b : s.atom_membership) f.atom_value.push_back(b ? Rat(1) : Rat(0));
  return f;
}

FinSuppFunction1 FinSuppFunction1::constant_fn(const Rat& q) {
  if (!in_unit_interval(q)) throw std::invalid_argument("function value outside [0,1]");
  FinSuppFunction1 f;
  f.type_value = {q};
  return f;
}

Rat integrate(const Rat& alpha, const FinSuppFunction1& f) {
  if (!in_unit_interval(alpha)) throw std::invalid_argument("alpha outside [0,1]");
  f.validate();
  const int m = f.support.size();
  Rat total(0);
  for (unsigned tau = 0; tau < f.type_value.size(); ++tau)
    if (f.type_value[tau] != 0) total += f.type_value[tau] * type_weight(alpha, tau, m);
  return total;  // atoms carry no mass
}

void DefinableSet2::validate() const {
  support.validate();
  const std::size_t m = support.size();
  const std::size_t types = 1u << m;
  if (pair_table.size() != types * types * 2)
    throw std::invalid_argument("pair table has wrong size");
  if (diag_table.size() != types) throw std::invalid_argument("diagonal table has wrong size");
  if (x_support_table.size() != m * types)
    throw std::invalid_argument("x-support table has wrong size");
  if (y_support_table.size() != types * m)
    throw std::invalid_argument("y-support table has wrong size");
  if (both_support_table.size() != m * m)
    throw std::invalid_argument("both-support table has wrong size");
}

bool DefinableSet2::pair_at(unsigned tx, unsigned ty, bool e) const {
  const std::size_t types = 1u << support.size();
  return pair_table[(tx * types + ty) * 2 + (e ? 1 : 0)];
}

void DefinableSet2::set_pair(unsigned tx, unsigned ty, bool e, bool member) {
  const std::size_t types = 1u << support.size();
  pair_table[(tx * types + ty) * 2 + (e ? 1 : 0)] = member;
}

DefinableSet2 DefinableSet2::none(const SupportGraph& s) {
  DefinableSet2 out;
  out.support = s;
  const std::size_t m = s.size();
  const std::size_t types = 1u << m;
  out.pair_table.assign(types * types * 2, false);
  out.diag_table.assign(types, false);
  out.x_support_table.assign(m * types, false);
  out.y_support_table.assign(types * m, false);
  out.both_support_table.assign(m * m, false);
  return out;
}

DefinableSet2 DefinableSet2::whole(const SupportGraph& s) {
  DefinableSet2 out = none(s);
  out.pair_table.assign(out.pair_table.size(), true);
  out.diag_table.assign(out.diag_table.size(), true);
  out.x_support_table.assign(out.x_support_table.size(), true);
  out.y_support_table.assign(out.y_support_table.size(), true);
  out.both_support_table.assign(out.both_support_table.size(), true);
  return out;
}

DefinableSet2 DefinableSet2::edge_relation(const SupportGraph& s) {
  DefinableSet2 out = none(s);
  const int m = s.size();
  const unsigned types = 1u << m;
  for (unsigned tx = 0; tx < types; ++tx)
    for (unsigned ty = 0; ty < types; ++ty) out.set_pair(tx, ty, true, true);
  // x = a_i and y fresh: the edge bit is y's connectivity bit at i.
  for (int i = 0; i < m; ++i)
    for (unsigned ty = 0; ty < types; ++ty)
      out.x_support_table[i * types + ty] = (ty >> i) & 1u;
  for (unsigned tx = 0; tx < types; ++tx)
    for (int j = 0; j < m; ++j) out.y_support_table[tx * m + j] = (tx >> j) & 1u;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.both_support_table[i * m + j] = s.adj[i][j];
  // diagonal stays false: the edge relation is irreflexive
  return out;
}

DefinableSet2 DefinableSet2::diagonal(const SupportGraph& s) {
  DefinableSet2 out = none(s);
  out.diag_table.assign(out.diag_table.size(), true);
  const int m = s.size();
  for (int i = 0; i < m; ++i) out.both_support_table[i * m + i] = true;
  return out;
}

DefinableSet2 DefinableSet2::extension_pattern(const SupportGraph& s, unsigned phi, unsigned psi,
                                               bool eps) {
  DefinableSet2 out = none(s);
  const unsigned types = 1u << s.size();
  if (phi >= types || psi >= types)
    throw std::invalid_argument("connectivity pattern out of range");
  out.set_pair(phi, psi, eps, true);
  return out;
}

namespace {

DefinableSet2 pointwise(const DefinableSet2& a, const DefinableSet2& b, bool conj) {
  require_same_support(a.support, b.support);
  a.validate();
  b.validate();
  DefinableSet2 out = a;
  auto apply = [conj](std::vector<bool>& dst, const std::vector<bool>& src) {
    for (std::size_t i = 0; i < dst.size(); ++i)
      dst[i] = conj ? (dst[i] && src[i]) : (dst[i] || src[i]);
  };
  apply(out.pair_table, b.pair_table);
  apply(out.diag_table, b.diag_table);
  apply(out.x_support_table, b.x_support_table);
  apply(out.y_support_table, b.y_support_table);
  apply(out.both_support_table, b.both_support_table);
  return out;
}

}  // namespace

DefinableSet2 complement(const DefinableSet2& s) {
  DefinableSet2 out = s;
  for (auto table : {&DefinableSet2::pair_table, &DefinableSet2::diag_table,
                     &DefinableSet2::x_support_table, &DefinableSet2::y_support_table,
                     &DefinableSet2::both_support_table})
    for (auto&& bit : out.*table) bit = !bit;
  return out;
}

DefinableSet2 set_union(const DefinableSet2& a, const DefinableSet2& b) {
  return pointwise(a, b, false);
}

DefinableSet2 set_intersection(const DefinableSet2& a, const DefinableSet2& b) {
  return pointwise(a, b, true);
}

Rat iterated_integral(const Rat& alpha, const Rat& beta, const DefinableSet2& f, Order order) {
  if (!in_unit_interval(alpha) || !in_unit_interval(beta))
    throw std::invalid_argument("measure parameter outside [0,1]");
  f.validate();
  const int m = f.support.size();
  const unsigned types = 1u << m;

  // Inner integration: once the outer vertex is fixed, the slice has support
  // extended by that vertex, so the inner variable carries one extra edge
  // bit. Atoms of the slice (the diagonal, the support vertices) have
  // measure zero and do not contribute.
  FinSuppFunction1 g;
  g.support = f.support;
  g.type_value.assign(types, Rat(0));
  g.atom_value.assign(m, Rat(0));

  if (order == Order::XY) {  // x outer against beta, y inner against alpha
    for (unsigned tx = 0; tx < types; ++tx) {
      Rat acc(0);
      for (unsigned ty = 0; ty < types; ++ty)
        for (int e = 0; e < 2; ++e)
          if (f.pair_at(tx, ty, e == 1))
            acc += rat_pow(alpha, popcount(ty) + e) *
                   rat_pow(Rat(1) - alpha, m + 1 - popcount(ty) - e);
      g.type_value[tx] = acc;
    }
    for (int i = 0; i < m; ++i) {
      Rat acc(0);
      for (unsigned ty = 0; ty < types; ++ty)
        if (f.x_support_table[i * types + ty]) acc += type_weight(alpha, ty, m);
      g.atom_value[i] = acc;
    }
    return integrate(beta, g);
  }

  // YX: y outer against alpha, x inner against beta
  for (unsigned ty = 0; ty < types; ++ty) {
    Rat acc(0);
    for (unsigned tx = 0; tx < types; ++tx)
      for (int e = 0; e < 2; ++e)
        if (f.pair_at(tx, ty, e == 1))
          acc +=
              rat_pow(beta, popcount(tx) + e) * rat_pow(Rat(1) - beta, m + 1 - popcount(tx) - e);
    g.type_value[ty] = acc;
  }
  for (int j = 0; j < m; ++j) {
    Rat acc(0);
    for (unsigned tx = 0; tx < types; ++tx)
      if (f.y_support_table[tx * m + j]) acc += type_weight(beta, tx, m);
    g.atom_value[j] = acc;
  }
  return integrate(alpha, g);
}

FubiniReport fubini_check(const Rat& alpha, const Rat& beta,
                          const std::vector<std::pair<std::string, DefinableSet2>>& corpus) {
  FubiniReport report;
  for (auto& [name, set] : corpus) {
    FubiniItem item;
    item.name = name;
    item.xy = iterated_integral(alpha, beta, set, Order::XY);
    item.yx = iterated_integral(alpha, beta, set, Order::YX);
    item.equal = item.xy == item.yx;
    report.all_equal = report.all_equal && item.equal;
    report.items.push_back(std::move(item));
  }
  return report;
}

std::vector<std::pair<std::string, DefinableSet2>> extension_corpus_up_to_one_param() {
  std::vector<std::pair<std::string, DefinableSet2>> corpus;
  SupportGraph none = empty_support();
  for (int eps = 0; eps < 2; ++eps)
    corpus.emplace_back("|A|=0,eps=" + std::to_string(eps),
                        DefinableSet2::extension_pattern(none, 0, 0, eps == 1));
  SupportGraph one = discrete_support({"a"});
  for (int phi = 0; phi < 2; ++phi)
    for (int psi = 0; psi < 2; ++psi)
      for (int eps = 0; eps < 2; ++eps)
        corpus.emplace_back("|A|=1,phi=" + std::to_string(phi) + ",psi=" + std::to_string(psi) +
                                ",eps=" + std::to_string(eps),
                            DefinableSet2::extension_pattern(one, phi, psi, eps == 1));
  return corpus;
}

CrossCheckResult er_cross_check(const Rat& alpha, int n) {
  if (n < 1 || n > 3)
    throw std::invalid_argument("er_cross_check supports n <= 3 (pair-table arity)");
  CrossCheckResult result;
  if (n == 1) {
    result.rado_dist[graphon::AdjMatrix::checked(1, 0)] = Rat(1);
  } else if (n == 2) {
    // P(pattern) is a plain two-vertex extension integral.
    for (int e = 0; e < 2; ++e) {
      Rat p = iterated_integral(alpha, alpha,
                                DefinableSet2::extension_pattern(empty_support(), 0, 0, e == 1),
                                Order::XY);
      if (p != 0)
        result.rado_dist[graphon::AdjMatrix::from_edges(
            2, e ? std::vector<std::pair<int, int>>{{0, 1}}
                 : std::vector<std::pair<int, int>>{})] = p;
    }
  } else {
    // Innermost integral over x3 with {x1, x2} folded into the support,
    // then the outer double integral over the remaining pair.
    for (std::uint32_t pattern = 0; pattern < 8; ++pattern) {
      bool g12 = pattern & 1u, g13 = (pattern >> 1) & 1u, g23 = (pattern >> 2) & 1u;
      SupportGraph outer = discrete_support({"x1", "x2"});
      outer.adj[0][1] = outer.adj[1][0] = g12;
      unsigned tau = (g13 ? 1u : 0u) | (g23 ? 2u : 0u);
      Rat inner = measure(alpha, DefinableSet1::from_pattern(outer, tau));
      Rat outer_p = iterated_integral(
          alpha, alpha, DefinableSet2::extension_pattern(empty_support(), 0, 0, g12),
          Order::XY);
      Rat p = inner * outer_p;
      if (p == 0) continue;
      std::vector<std::pair<int, int>> edges;
      if (g12) edges.emplace_back(0, 1);
      if (g13) edges.emplace_back(0, 2);
      if (g23) edges.emplace_back(1, 2);
      result.rado_dist[graphon::AdjMatrix::from_edges(3, edges)] += p;
    }
  }
  result.direct_dist = graphon::p_w_n(graphon::Graphon::constant(alpha), n);
  result.pass = result.rado_dist == result.direct_dist;
  return result;
}

}  // namespace gppl::rado
