#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sugawara/algebra.hpp"
#include "sugawara/nc_element.hpp"

namespace sugawara {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses bracket notation into a normal-ordered element.
///
///   expr   := term (('+' | '-') term)*
///   term   := power ('*' power)*
///   power  := unary ('^' integer)?
///   unary  := '-' unary | atom
///   atom   := rational | e_{ij}[r] | e_{i,j}[r] | tau | K | '(' expr ')'
///           | trE[r1,...,rk]
///
/// trE[r1,...,rk] is tr E[r1]...E[rk], the sum over i1..ik of
/// e_{i1 i2}[r1] e_{i2 i3}[r2] ... e_{ik i1}[rk]. The Unicode minus sign and
/// the letter τ are accepted.
NcElement parse_expression(const Algebra& alg, std::string_view text);

}  // namespace sugawara
