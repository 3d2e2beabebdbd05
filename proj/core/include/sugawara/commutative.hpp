#pragma once

#include <iosfwd>

#include <map>
#include <string>
#include <vector>

#include "sugawara/generator.hpp"
#include "sugawara/rational.hpp"

namespace sugawara {

/// Commutative polynomial in E-generators: the image of U(g_-) in S(g_-).
/// Monomials are sorted generator multisets.
class CommutativeElement {
 public:
  using Monomial = Word;

  CommutativeElement() = default;
  static CommutativeElement scalar(const Rational& c);
  static CommutativeElement variable(Generator g);

  void add_term(Monomial monomial, const Rational& c);

  [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::vector<Generator> variables() const;

  CommutativeElement& operator+=(const CommutativeElement& rhs);
  CommutativeElement& operator-=(const CommutativeElement& rhs);
  friend CommutativeElement operator+(CommutativeElement a, const CommutativeElement& b) { return a += b; }
  friend CommutativeElement operator-(CommutativeElement a, const CommutativeElement& b) { return a -= b; }
  friend CommutativeElement operator*(const CommutativeElement& a, const CommutativeElement& b);
  friend CommutativeElement operator*(CommutativeElement a, const Rational& c);
  friend bool operator==(const CommutativeElement&, const CommutativeElement&) = default;

  [[nodiscard]] CommutativeElement derivative(Generator var) const;
  [[nodiscard]] Rational evaluate(const std::map<Generator, Rational>& point) const;

  [[nodiscard]] std::string to_string() const;

 private:
  std::map<Monomial, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const CommutativeElement& x);

}  // namespace sugawara
