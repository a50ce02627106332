#pragma once

#include <stdexcept>
#include <string>

namespace segdist {

// Syntax error in a universe file or a multisegment literal.
struct ParseError : std::runtime_error {
  int line, column;
  ParseError(int line_, int col_, const std::string& what_)
      : std::runtime_error(std::to_string(line_) + ":" + std::to_string(col_) +
                           ": " + what_),
        line(line_),
        column(col_) {}
};

// Well-formed input that violates a universe-level consistency rule
// (dangling partner id, gamma present on a non-self-dual tower, ...).
struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violation on an engine operation (bad composition sum,
// non-ladder input to a ladder-only routine, ...).
struct InvalidArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace segdist
