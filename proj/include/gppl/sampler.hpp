#pragma once

#include "gppl/exact.hpp"
#include "gppl/graphon.hpp"
#include "gppl/typecheck.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <vector>

namespace gppl::mc {

std::uint64_t splitmix64(std::uint64_t& state);

// Random stream for one trial, derived from (seed, trial) so results do not
// depend on scheduling.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t trial);
  double uniform();  // [0, 1)
  double gaussian();
  std::size_t below(std::size_t n);
  bool bernoulli(const Rat& q);

 private:
  std::mt19937_64 eng_;
};

struct RunSeed {
  std::uint64_t seed = 0;
};

// Per-run implementation state. Edge queries are memoized on unordered vertex
// pairs: once asked, an edge never changes within the run.
class GraphRun {
 public:
  virtual ~GraphRun() = default;
  virtual int fresh_vertex(Rng& rng) = 0;
  virtual bool edge(int a, int b, Rng& rng) = 0;
};

class GraphImpl {
 public:
  static GraphImpl sphere(const graphon::SphereSpec& spec);
  static GraphImpl er_memo(const Rat& alpha);
  static GraphImpl step_color(std::vector<Rat> weights, std::vector<std::vector<Rat>> matrix);
  static GraphImpl finite(exact::FiniteModel model);

  std::unique_ptr<GraphRun> start_run() const;
  std::string describe() const;

 private:
  enum class Kind { Sphere, ErMemo, StepColor, Finite };
  Kind kind_ = Kind::ErMemo;
  graphon::SphereSpec sphere_;
  Rat alpha_;
  std::vector<Rat> weights_;
  std::vector<std::vector<Rat>> matrix_;
  exact::FiniteModel model_;
};

// One operational run of a closed program of vertex-free type.
Value run_once(const lang::TermPtr& t, const GraphImpl& impl, RunSeed seed,
               std::uint64_t trial = 0);

struct EmpiricalDist {
  std::map<Value, std::uint64_t> counts;
  std::uint64_t trials = 0;
  double freq(const Value& v) const;
  double se(const Value& v) const;  // sqrt(p(1-p)/N)
};

EmpiricalDist estimate(const lang::TermPtr& t, const GraphImpl& impl, std::uint64_t trials,
                       RunSeed seed);

// Strictly-less-than-theta angle test for unit vectors.
bool sphere_edge(const std::vector<double>& v, const std::vector<double>& w, double theta);

// Samples gen_t_n(n) and tallies the raw row-major bit patterns.
std::map<std::uint32_t, std::uint64_t> empirical_rgm(const GraphImpl& impl, int n,
                                                     std::uint64_t trials, RunSeed seed);

}  // namespace gppl::mc
