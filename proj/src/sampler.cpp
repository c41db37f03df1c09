#include "gppl/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace gppl::mc {

using lang::ConstKind;
using lang::Term;
using lang::TermPtr;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t state = seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1));
  eng_.seed(splitmix64(state));
}

double Rng::uniform() {
  return static_cast<double>(eng_() >> 11) * (1.0 / 9007199254740992.0);
}

double Rng::gaussian() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::acos(-1.0) * u2);
}

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = eng_();
  } while (v >= limit);
  return static_cast<std::size_t>(v % n);
}

bool Rng::bernoulli(const Rat& q) {
  if (q == 0) return false;
  if (q == 1) return true;
  return uniform() < rat_double(q);
}

bool sphere_edge(const std::vector<double>& v, const std::vector<double>& w, double theta) {
  if (v.size() != w.size()) throw std::invalid_argument("dimension mismatch");
  auto norm = [](const std::vector<double>& x) {
    double s = 0;
    for (double c : x) s += c * c;
    return std::sqrt(s);
  };
  if (std::abs(norm(v) - 1.0) > 1e-9 || std::abs(norm(w) - 1.0) > 1e-9)
    throw std::invalid_argument("sphere_edge expects unit vectors");
  double dot = 0;
  for (std::size_t i = 0; i < v.size(); ++i) dot += v[i] * w[i];
  dot = std::max(-1.0, std::min(1.0, dot));
  return std::acos(dot) < theta;
}

namespace {

std::pair<int, int> unordered(int a, int b) { return a <= b ? std::pair{a, b} : std::pair{b, a}; }

class SphereRun : public GraphRun {
 public:
  explicit SphereRun(const graphon::SphereSpec& spec) : spec_(spec) {}

  int fresh_vertex(Rng& rng) override {
    std::vector<double> p(spec_.dim);
    double norm = 0;
    do {
      norm = 0;
      for (auto& c : p) {
        c = rng.gaussian();
        norm += c * c;
      }
    } while (norm < 1e-12);
    norm = std::sqrt(norm);
    for (auto& c : p) c /= norm;
    points_.push_back(std::move(p));
    return static_cast<int>(points_.size()) - 1;
  }

  bool edge(int a, int b, Rng&) override {
    if (a == b) return false;
    return sphere_edge(points_[a], points_[b], spec_.theta);
  }

 private:
  graphon::SphereSpec spec_;
  std::vector<std::vector<double>> points_;
};

class ErMemoRun : public GraphRun {
 public:
  explicit ErMemoRun(const Rat& alpha) : alpha_(alpha) {}

  int fresh_vertex(Rng&) override { return next_id_++; }

  bool edge(int a, int b, Rng& rng) override {
    if (a == b) return false;
    auto key = unordered(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool value = rng.bernoulli(alpha_);
    memo_[key] = value;
    return value;
  }

 private:
  Rat alpha_;
  int next_id_ = 0;
  std::map<std::pair<int, int>, bool> memo_;
};

class StepColorRun : public GraphRun {
 public:
  StepColorRun(const std::vector<Rat>& weights, const std::vector<std::vector<Rat>>& matrix)
      : weights_(weights), matrix_(matrix) {}

  int fresh_vertex(Rng& rng) override {
    double u = rng.uniform();
    double acc = 0;
    std::size_t color = weights_.size() - 1;
    for (std::size_t c = 0; c < weights_.size(); ++c) {
      acc += rat_double(weights_[c]);
      if (u < acc) {
        color = c;
        break;
      }
    }
    colors_.push_back(color);
    return static_cast<int>(colors_.size()) - 1;
  }

  bool edge(int a, int b, Rng& rng) override {
    if (a == b) return false;
    auto key = unordered(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool value = rng.bernoulli(matrix_[colors_[a]][colors_[b]]);
    memo_[key] = value;
    return value;
  }

 private:
  const std::vector<Rat>& weights_;
  const std::vector<std::vector<Rat>>& matrix_;
  std::vector<std::size_t> colors_;
  std::map<std::pair<int, int>, bool> memo_;
};

// Vertices are the model's own values here, so a repeated draw is the same
// vertex; kernels may have self loops, the model decides.
class FiniteRun : public GraphRun {
 public:
  explicit FiniteRun(const exact::FiniteModel& model) : model_(model) {}

  int fresh_vertex(Rng& rng) override {
    double u = rng.uniform();
    double acc = 0;
    for (int i = 0; i < model_.m; ++i) {
      acc += rat_double(model_.new_dist[i]);
      if (u < acc) return i;
    }
    return model_.m - 1;
  }

  bool edge(int a, int b, Rng& rng) override {
    auto key = unordered(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool value = rng.bernoulli(model_.edge_true[a][b]);
    memo_[key] = value;
    return value;
  }

 private:
  const exact::FiniteModel& model_;
  std::map<std::pair<int, int>, bool> memo_;
};

}  // namespace

GraphImpl GraphImpl::sphere(const graphon::SphereSpec& spec) {
  spec.validate();
  GraphImpl impl;
  impl.kind_ = Kind::Sphere;
  impl.sphere_ = spec;
  return impl;
}

GraphImpl GraphImpl::er_memo(const Rat& alpha) {
  if (!in_unit_interval(alpha)) throw std::invalid_argument("alpha outside [0,1]");
  GraphImpl impl;
  impl.kind_ = Kind::ErMemo;
  impl.alpha_ = alpha;
  return impl;
}

GraphImpl GraphImpl::step_color(std::vector<Rat> weights,
                                std::vector<std::vector<Rat>> matrix) {
  graphon::Graphon::step(weights, matrix);  // reuse the validation
  GraphImpl impl;
  impl.kind_ = Kind::StepColor;
  impl.weights_ = std::move(weights);
  impl.matrix_ = std::move(matrix);
  return impl;
}

GraphImpl GraphImpl::finite(exact::FiniteModel model) {
  model.validate();
  GraphImpl impl;
  impl.kind_ = Kind::Finite;
  impl.model_ = std::move(model);
  return impl;
}

std::unique_ptr<GraphRun> GraphImpl::start_run() const {
  switch (kind_) {
    case Kind::Sphere:
      return std::make_unique<SphereRun>(sphere_);
    case Kind::ErMemo:
      return std::make_unique<ErMemoRun>(alpha_);
    case Kind::StepColor:
      return std::make_unique<StepColorRun>(weights_, matrix_);
    case Kind::Finite:
      return std::make_unique<FiniteRun>(model_);
  }
  throw std::logic_error("unknown implementation kind");
}

std::string GraphImpl::describe() const {
  switch (kind_) {
    case Kind::Sphere:
      return "sphere(d=" + std::to_string(sphere_.dim) + ")";
    case Kind::ErMemo:
      return "er-memo(" + rat_string(alpha_) + ")";
    case Kind::StepColor:
      return "step-color(" + std::to_string(weights_.size()) + " blocks)";
    case Kind::Finite:
      return "finite(m=" + std::to_string(model_.m) + ")";
  }
  return "?";
}

namespace {

using Env = std::map<std::string, Value>;

Value run_eval(const Env& env, const TermPtr& t, GraphRun& run, Rng& rng) {
  switch (t->kind) {
    case Term::Kind::Var:
      return env.at(t->name);
    case Term::Kind::Unit:
      return Value::unit();
    case Term::Kind::Pair: {
      Value a = run_eval(env, t->t0, run, rng);
      Value b = run_eval(env, t->t1, run, rng);
      return Value::pair(a, b);
    }
    case Term::Kind::Proj1:
      return run_eval(env, t->t0, run, rng).first();
    case Term::Kind::Proj2:
      return run_eval(env, t->t0, run, rng).second();
    case Term::Kind::Inj1:
      return Value::inl(run_eval(env, t->t0, run, rng));
    case Term::Kind::Inj2:
      return Value::inr(run_eval(env, t->t0, run, rng));
    case Term::Kind::Let: {
      Value a = run_eval(env, t->t0, run, rng);
      Env inner = env;
      inner[t->name] = a;
      return run_eval(inner, t->t1, run, rng);
    }
    case Term::Kind::CaseZero:
      run_eval(env, t->t0, run, rng);
      throw std::logic_error("absurd scrutinee produced a value");
    case Term::Kind::Case: {
      Value v = run_eval(env, t->t0, run, rng);
      Env inner = env;
      if (v.kind() == Value::Kind::Inl) {
        inner[t->name] = v.first();
        return run_eval(inner, t->t1, run, rng);
      }
      inner[t->name2] = v.first();
      return run_eval(inner, t->t2, run, rng);
    }
    case Term::Kind::Const: {
      Value a = run_eval(env, t->t0, run, rng);
      switch (t->cst) {
        case ConstKind::New:
          return Value::vertex(run.fresh_vertex(rng));
        case ConstKind::Edge:
          return Value::boolean(run.edge(a.first().vertex_id(), a.second().vertex_id(), rng));
        case ConstKind::Bernoulli:
          return Value::boolean(rng.bernoulli(t->weight));
      }
    }
  }
  throw std::logic_error("malformed term");
}

}  // namespace

Value run_once(const TermPtr& t, const GraphImpl& impl, RunSeed seed, std::uint64_t trial) {
  lang::Type ty = lang::typecheck(t);
  if (ty.mentions_vertex())
    throw std::invalid_argument("run_once: result type mentions vertex");
  Rng rng(seed.seed, trial);
  auto run = impl.start_run();
  return run_eval(Env{}, t, *run, rng);
}

double EmpiricalDist::freq(const Value& v) const {
  auto it = counts.find(v);
  if (trials == 0) return 0.0;
  return it == counts.end() ? 0.0 : static_cast<double>(it->second) / trials;
}

double EmpiricalDist::se(const Value& v) const {
  if (trials == 0) return 0.0;
  double p = freq(v);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

EmpiricalDist estimate(const TermPtr& t, const GraphImpl& impl, std::uint64_t trials,
                       RunSeed seed) {
  if (trials < 1) throw std::invalid_argument("estimate requires at least one trial");
  lang::Type ty = lang::typecheck(t);
  if (ty.mentions_vertex())
    throw std::invalid_argument("estimate: result type mentions vertex");
  EmpiricalDist dist;
  dist.trials = trials;
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng(seed.seed, i);
    auto run = impl.start_run();
    ++dist.counts[run_eval(Env{}, t, *run, rng)];
  }
  return dist;
}

std::map<std::uint32_t, std::uint64_t> empirical_rgm(const GraphImpl& impl, int n,
                                                     std::uint64_t trials, RunSeed seed) {
  if (n < 1 || n > 5) throw std::invalid_argument("empirical_rgm supports n in 1..5");
  EmpiricalDist raw = estimate(lang::gen_t_n(n), impl, trials, seed);
  std::map<std::uint32_t, std::uint64_t> out;
  for (auto& [v, count] : raw.counts) out[graphon::flatten_bool_matrix(v, n)] += count;
  return out;
}

}  // namespace gppl::mc
