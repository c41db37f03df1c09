#pragma once

#include "gppl/ast.hpp"
#include "gppl/value.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gppl::lang {

struct TypeError : std::runtime_error {
  SourceLoc loc;
  TypeError(const std::string& msg, SourceLoc l)
      : std::runtime_error(std::to_string(l.line) + ":" + std::to_string(l.col) + ": " + msg),
        loc(l) {}
};

Type typecheck(const Context& ctx, const TermPtr& t);
Type typecheck(const TermPtr& t);

// Number of inhabitants of a vertex-free type.
std::uint64_t numeral_size(const Type& ty);

// Canonical inhabitants in a fixed order: inl before inr, left product
// component major. Throws on vertex.
std::vector<Value> enumerate_inhabitants(const Type& ty);

// Same, with vertex enumerated as {v0 .. v(m-1)}.
std::vector<Value> enumerate_inhabitants(const Type& ty, int vertex_count);

// The closed program binding x1..xn by new() and returning the n-by-n matrix
// of edge queries as a flat row-major nested pair.
TermPtr gen_t_n(int n);

// Same matrix body, with the binding order of x1..xn permuted: position p
// binds x_{sigma^{-1}(p)} (sigma is 0-based).
TermPtr gen_t_n_permuted(int n, const std::vector<int>& sigma);

}  // namespace gppl::lang
