#pragma once

#include <map>
#include <stdexcept>
#include <utility>

namespace gppl {

// Decided edge queries among abstract vertices, keyed on pairs (i, j) with
// i < j. Self pairs never appear.
using EdgeAssignment = std::map<std::pair<int, int>, bool>;

inline std::pair<int, int> ordered_pair(int i, int j) {
  if (i == j) throw std::invalid_argument("self pair in edge assignment");
  return i < j ? std::make_pair(i, j) : std::make_pair(j, i);
}

}  // namespace gppl
