#pragma once

#include "gppl/rational.hpp"
#include "gppl/value.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gppl::exact {

// Finitely supported distribution with exact rational weights. Zero entries
// are never stored; a completed distribution sums to exactly 1.
class FinDist {
 public:
  FinDist() = default;

  static FinDist dirac(const Value& v);

  void add_mass(const Value& v, const Rat& p);
  const std::map<Value, Rat>& support() const { return probs_; }
  Rat prob(const Value& v) const;
  Rat total() const;
  bool empty() const { return probs_.empty(); }
  void validate() const;  // throws unless the total is exactly 1

  std::string to_string() const;

  friend bool operator==(const FinDist& a, const FinDist& b) { return a.probs_ == b.probs_; }
  friend bool operator!=(const FinDist& a, const FinDist& b) { return !(a == b); }

 private:
  std::map<Value, Rat> probs_;
};

FinDist bind(const FinDist& d, const std::function<FinDist(const Value&)>& k);

// Row-stochastic rational matrix.
class StochMatrix {
 public:
  StochMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  static StochMatrix identity(std::size_t n);
  void validate() const;  // entries >= 0, each row sums to exactly 1

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

// Kleisli composition of finite stochastic maps: exact matrix product.
StochMatrix kleisli_compose(const StochMatrix& a, const StochMatrix& b);

}  // namespace gppl::exact
