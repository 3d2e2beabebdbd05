#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sugawara/rational.hpp"

namespace sugawara {

/// Variable b_i[r] of pi_0, with r < 0.
struct BVar {
  int index = 1;
  int mode = -1;

  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const BVar&, const BVar&) = default;
};

/// Index ascending, then mode descending: b_1[-1] < b_1[-2] < b_2[-1].
inline bool operator<(const BVar& a, const BVar& b) {
  if (a.index != b.index) return a.index < b.index;
  return a.mode > b.mode;
}

/// Element of the commutative differential polynomial algebra
/// pi_0 = C[b_i[r] | r < 0] with T b_i[r] = -r b_i[r-1].
class WPolynomial {
 public:
  /// Sorted multiset of variables.
  using Monomial = std::vector<BVar>;
  /// Higher degree first, then lexicographic in the variable order.
  struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;
    }
  };
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  WPolynomial() = default;
  static WPolynomial constant(const Rational& c);
  /// Throws std::invalid_argument unless index >= 1 and mode < 0.
  static WPolynomial variable(int index, int mode);

  void add_term(Monomial m, const Rational& c);
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  /// Deepest |mode| among variables with the given index; 0 if absent.
  [[nodiscard]] int depth(int index) const;
  [[nodiscard]] int max_index() const;

  /// T: b_i[r] -> -r b_i[r-1], extended as a derivation.
  [[nodiscard]] WPolynomial translate() const;
  [[nodiscard]] WPolynomial partial(BVar v) const;

  WPolynomial operator-() const;
  WPolynomial& operator+=(const WPolynomial& rhs);
  WPolynomial& operator-=(const WPolynomial& rhs);
  WPolynomial& operator*=(const Rational& c);
  friend WPolynomial operator+(WPolynomial a, const WPolynomial& b) { return a += b; }
  friend WPolynomial operator-(WPolynomial a, const WPolynomial& b) { return a -= b; }
  friend WPolynomial operator*(WPolynomial a, const Rational& c) { return a *= c; }
  friend WPolynomial operator*(const WPolynomial& a, const WPolynomial& b);
  friend bool operator==(const WPolynomial&, const WPolynomial&) = default;

  /// e.g. "b_1[-1]*b_2[-1] + b_1[-2]".
  [[nodiscard]] std::string to_string() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const WPolynomial& p);

}  // namespace sugawara
