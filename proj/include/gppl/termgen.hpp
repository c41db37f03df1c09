#pragma once

#include "gppl/exact.hpp"

#include <cstdint>
#include <random>

namespace gppl::gen {

// Seeded generator of well-typed closed terms, used by the law suite and the
// grammar round-trip property. Generation follows the typing rules, so every
// produced term typechecks by construction. Sum types are generated only at
// bool, matching what closed programs can express.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : eng_(seed) {}

  lang::Type random_type(int depth, bool allow_vertex);

  lang::TermPtr closed_term(const lang::Type& target, int budget, bool effects);
  lang::TermPtr closed_term(int budget, bool effects);

  exact::LawInstance law_instance(exact::LawId law, int budget);

 private:
  std::size_t roll(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }
  std::string fresh();
  Rat random_weight();
  lang::TermPtr term_in(lang::Context& ctx, const lang::Type& target, int budget, bool effects);
  lang::TermPtr vertex_term(lang::Context& ctx, int budget, bool effects);

  std::mt19937_64 eng_;
  int counter_ = 0;
};

}  // namespace gppl::gen
