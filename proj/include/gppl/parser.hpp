#pragma once

#include "gppl/ast.hpp"

#include <stdexcept>
#include <string>

namespace gppl::lang {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

// Parses a program in the concrete grammar and desugars it to the core
// calculus (bool, if/&/|/not, matrix literals and subm are parser-level).
TermPtr parse(const std::string& source);

Type parse_type(const std::string& source);

}  // namespace gppl::lang
