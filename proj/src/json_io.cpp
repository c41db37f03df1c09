#include "gppl/json_io.hpp"

#include <stdexcept>

namespace gppl::io {

json rat_json(const Rat& r) { return rat_string(r); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>(), 1);
  throw std::invalid_argument("expected a rational as \"num/den\" string");
}

json outcomes_json(const exact::FinDist& d) {
  json arr = json::array();
  for (auto& [v, p] : d.support()) arr.push_back({{"value", v.to_string()}, {"p", rat_json(p)}});
  return arr;
}

json findist_json(const exact::FinDist& d) { return {{"outcomes", outcomes_json(d)}}; }

json finite_model_json(const exact::FiniteModel& m) {
  json new_dist = json::array();
  for (auto& p : m.new_dist) new_dist.push_back(rat_json(p));
  json edge = json::array();
  for (auto& row : m.edge_true) {
    json r = json::array();
    for (auto& p : row) r.push_back(rat_json(p));
    edge.push_back(r);
  }
  return {{"m", m.m}, {"new", new_dist}, {"edge", edge}, {"deterministic", m.deterministic}};
}

exact::FiniteModel finite_model_from_json(const json& j) {
  exact::FiniteModel m;
  m.m = j.at("m").get<int>();
  for (auto& p : j.at("new")) m.new_dist.push_back(rat_from_json(p));
  for (auto& row : j.at("edge")) {
    std::vector<Rat> r;
    for (auto& p : row) r.push_back(rat_from_json(p));
    m.edge_true.push_back(std::move(r));
  }
  m.deterministic = j.value("deterministic", false);
  m.validate();
  return m;
}

json graphon_json(const graphon::Graphon& w) {
  switch (w.kind()) {
    case graphon::Graphon::Kind::Constant:
      return {{"kind", "constant"}, {"alpha", rat_json(w.alpha())}};
    case graphon::Graphon::Kind::Step: {
      json weights = json::array();
      for (auto& p : w.weights()) weights.push_back(rat_json(p));
      json matrix = json::array();
      for (auto& row : w.matrix()) {
        json r = json::array();
        for (auto& p : row) r.push_back(rat_json(p));
        matrix.push_back(r);
      }
      return {{"kind", "step"}, {"weights", weights}, {"matrix", matrix}};
    }
    case graphon::Graphon::Kind::Predicate:
      return {{"kind", "sphere"},
              {"d", w.sphere_spec().dim},
              {"theta", w.sphere_spec().theta}};
  }
  throw std::logic_error("unknown graphon kind");
}

graphon::Graphon graphon_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") return graphon::Graphon::constant(rat_from_json(j.at("alpha")));
  if (kind == "step") {
    std::vector<Rat> weights;
    for (auto& p : j.at("weights")) weights.push_back(rat_from_json(p));
    std::vector<std::vector<Rat>> matrix;
    for (auto& row : j.at("matrix")) {
      std::vector<Rat> r;
      for (auto& p : row) r.push_back(rat_from_json(p));
      matrix.push_back(std::move(r));
    }
    return graphon::Graphon::step(std::move(weights), std::move(matrix));
  }
  if (kind == "sphere") {
    graphon::SphereSpec spec;
    spec.dim = j.at("d").get<int>();
    spec.theta = j.at("theta").get<double>();
    return graphon::Graphon::sphere(spec);
  }
  throw std::invalid_argument("unknown graphon kind: " + kind);
}

mc::GraphImpl impl_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "er-memo" || kind == "constant")
    return mc::GraphImpl::er_memo(rat_from_json(j.at("alpha")));
  if (kind == "finite") return mc::GraphImpl::finite(finite_model_from_json(j));
  if (kind == "step") {
    auto w = graphon_from_json(j);
    return mc::GraphImpl::step_color(w.weights(), w.matrix());
  }
  if (kind == "sphere") {
    auto w = graphon_from_json(j);
    return mc::GraphImpl::sphere(w.sphere_spec());
  }
  throw std::invalid_argument("unknown implementation kind: " + kind);
}

json normal_form_json(const sym::NormalForm& nf) {
  json leaves = json::array();
  for (auto& leaf : nf.leaves) {
    json edges = json::object();
    for (auto& [pr, e] : leaf.edges)
      edges[std::to_string(pr.first) + "-" + std::to_string(pr.second)] = e;
    leaves.push_back({{"w", rat_json(leaf.weight)},
                      {"edges", edges},
                      {"k", leaf.allocated},
                      {"out", leaf.outcome.to_string()}});
  }
  return leaves;
}

json empirical_json(const mc::EmpiricalDist& d) {
  json arr = json::array();
  for (auto& [v, count] : d.counts)
    arr.push_back({{"value", v.to_string()},
                   {"count", count},
                   {"freq", d.freq(v)},
                   {"se", d.se(v)}});
  return {{"trials", d.trials}, {"outcomes", arr}};
}

json adj_dist_json(const graphon::AdjDist& dist) {
  json arr = json::array();
  for (auto& [g, p] : dist)
    arr.push_back({{"graph", g.to_string()}, {"p", rat_json(p)}});
  return arr;
}

namespace {

std::string pattern_key(unsigned tau, int m) {
  std::string key;
  for (int i = 0; i < m; ++i) key += ((tau >> i) & 1u) ? '1' : '0';
  return key;
}

}  // namespace

json definable_set1_json(const rado::DefinableSet1& s) {
  s.validate();
  const int m = s.support.size();
  json adj = json::array();
  for (int i = 0; i < m; ++i) {
    json row = json::array();
    for (int j = 0; j < m; ++j) row.push_back(static_cast<bool>(s.support.adj[i][j]));
    adj.push_back(row);
  }
  json table = json::object();
  for (unsigned tau = 0; tau < s.type_table.size(); ++tau)
    table[pattern_key(tau, m)] = static_cast<bool>(s.type_table[tau]);
  json atoms = json::object();
  for (int i = 0; i < m; ++i) atoms[s.support.names[i]] = static_cast<bool>(s.atom_membership[i]);
  return {{"support", {{"names", s.support.names}, {"adj", adj}}},
          {"table", table},
          {"atoms", atoms}};
}

rado::DefinableSet1 definable_set1_from_json(const json& j) {
  rado::SupportGraph support;
  support.names = j.at("support").at("names").get<std::vector<std::string>>();
  for (auto& row : j.at("support").at("adj"))
    support.adj.push_back(row.get<std::vector<bool>>());
  support.validate();
  rado::DefinableSet1 s = rado::DefinableSet1::none(support);
  const int m = support.size();
  for (unsigned tau = 0; tau < s.type_table.size(); ++tau)
    s.type_table[tau] = j.at("table").at(pattern_key(tau, m)).get<bool>();
  for (int i = 0; i < m; ++i)
    s.atom_membership[i] = j.at("atoms").at(support.names[i]).get<bool>();
  s.validate();
  return s;
}

}  // namespace gppl::io
