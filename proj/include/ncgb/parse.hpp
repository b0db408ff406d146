#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ncgb/polynomial.hpp"

namespace ncgb {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses the polynomial syntax
///
///   expr    := ['+'|'-'] product (('+'|'-') product)*
///   product := power (['*'] power)*        juxtaposition multiplies
///   power   := atom ['^' integer]
///   atom    := integer ['/' integer] | 'x' integer | '(' expr ')'
///            | '[' expr (',' expr)+ ']'     left-normed commutator
///
/// If `max_variable` is nonzero, variables above it are rejected.
Polynomial parse_polynomial(std::string_view text, int max_variable = 0);

}  // namespace ncgb
