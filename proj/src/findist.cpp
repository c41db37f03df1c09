#include "gppl/findist.hpp"

#include <stdexcept>

namespace gppl::exact {

FinDist FinDist::dirac(const Value& v) {
  FinDist d;
  d.probs_[v] = 1;
  return d;
}

void FinDist::add_mass(const Value& v, const Rat& p) {
  if (p < 0) throw std::invalid_argument("negative probability mass");
  if (p == 0) return;
  probs_[v] += p;
}

Rat FinDist::prob(const Value& v) const {
  auto it = probs_.find(v);
  return it == probs_.end() ? Rat(0) : it->second;
}

Rat FinDist::total() const {
  Rat t(0);
  for (auto& [v, p] : probs_) t += p;
  return t;
}

void FinDist::validate() const {
  for (auto& [v, p] : probs_)
    if (p < 0) throw std::logic_error("negative probability at " + v.to_string());
  if (total() != 1)
    throw std::logic_error("distribution mass is " + rat_string(total()) + ", expected 1");
}

std::string FinDist::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto& [v, p] : probs_) {
    if (!first) s += ", ";
    first = false;
    s += v.to_string() + ": " + rat_string(p);
  }
  return s + "}";
}

FinDist bind(const FinDist& d, const std::function<FinDist(const Value&)>& k) {
  FinDist out;
  for (auto& [x, p] : d.support()) {
    FinDist dx = k(x);
    for (auto& [y, q] : dx.support()) out.add_mass(y, p * q);
  }
  return out;
}

StochMatrix StochMatrix::identity(std::size_t n) {
  StochMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void StochMatrix::validate() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    Rat sum(0);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (at(r, c) < 0) throw std::logic_error("negative matrix entry");
      sum += at(r, c);
    }
    if (sum != 1) throw std::logic_error("matrix row " + std::to_string(r) + " sums to " +
                                         rat_string(sum));
  }
}

StochMatrix kleisli_compose(const StochMatrix& a, const StochMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("kleisli_compose: dimension mismatch " +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
  StochMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rat& bkj = b.at(k, j);
        if (bkj == 0) continue;
        out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

}  // namespace gppl::exact
