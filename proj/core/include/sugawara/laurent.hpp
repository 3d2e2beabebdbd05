#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "sugawara/rational.hpp"

namespace sugawara {

/// Truncated Laurent series sum_e c_e z^e with finitely many negative powers.
///
/// Coefficients are known exactly for e < precision; a series without a
/// precision is exact. C is a commutative coefficient ring (Rational or
/// WPolynomial) with is_zero(), +=, binary * and scaling by Rational.
template <class C>
class LaurentSeries {
 public:
  using Coefficient = C;

  LaurentSeries() = default;
  static LaurentSeries constant(const Rational& c) { return monomial(C{} + unit() * c, 0); }
  static LaurentSeries monomial(C c, int exponent) {
    LaurentSeries s;
    s.c_[exponent] = std::move(c);
    s.trim();
    return s;
  }
  static LaurentSeries from_map(std::map<int, C> coeffs, std::optional<int> precision) {
    LaurentSeries s;
    s.c_ = std::move(coeffs);
    s.prec_ = precision;
    s.trim();
    return s;
  }

  [[nodiscard]] const std::map<int, C>& coefficients() const { return c_; }
  [[nodiscard]] std::optional<int> precision() const { return prec_; }
  [[nodiscard]] bool is_exact() const { return !prec_.has_value(); }
  /// No known nonzero coefficient. A zero series may still be inexact.
  [[nodiscard]] bool is_zero() const { return c_.empty(); }

  /// Lowest exponent that may be nonzero: the first stored coefficient, else
  /// the precision; nullopt for the exact zero series.
  [[nodiscard]] std::optional<int> low() const {
    if (!c_.empty()) return c_.begin()->first;
    return prec_;
  }

  /// Throws std::out_of_range at or above the precision.
  [[nodiscard]] C coefficient(int e) const {
    if (prec_ && e >= *prec_)
      throw std::out_of_range("coefficient of z^" + std::to_string(e) + " is beyond the series precision");
    auto it = c_.find(e);
    return it == c_.end() ? C{} : it->second;
  }

  [[nodiscard]] LaurentSeries derivative() const {
    LaurentSeries d;
    for (const auto& [e, c] : c_)
      if (e != 0) d.c_[e - 1] = c * Rational(e);
    if (prec_) d.prec_ = *prec_ - 1;
    d.trim();
    return d;
  }

  LaurentSeries& operator+=(const LaurentSeries& rhs) {
    prec_ = min_precision(prec_, rhs.prec_);
    for (const auto& [e, c] : rhs.c_) c_[e] += c;
    trim();
    return *this;
  }
  LaurentSeries& operator-=(const LaurentSeries& rhs) { return *this += rhs * Rational(-1); }
  LaurentSeries& operator*=(const Rational& k) {
    for (auto& [e, c] : c_) c = c * k;
    trim();
    return *this;
  }
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(LaurentSeries a, const Rational& k) { return a *= k; }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries out;
    const auto la = a.low();
    const auto lb = b.low();
    if (!la || !lb) return out;  // an exact zero factor
    // Coefficient e needs a_i for i <= e - low(b) and b_j for j <= e - low(a).
    std::optional<int> p;
    if (a.prec_) p = *a.prec_ + *lb;
    if (b.prec_) p = min_precision(p, *b.prec_ + *la);
    out.prec_ = p;
    for (const auto& [ea, ca] : a.c_)
      for (const auto& [eb, cb] : b.c_) {
        const int e = ea + eb;
        if (p && e >= *p) continue;
        out.c_[e] += ca * cb;
      }
    out.trim();
    return out;
  }

  /// Equal on every exponent both series know.
  [[nodiscard]] bool agrees_with(const LaurentSeries& other) const {
    const auto p = min_precision(prec_, other.prec_);
    for (const auto& [e, c] : c_)
      if ((!p || e < *p) && !(other.coefficient_or_zero(e) == c)) return false;
    for (const auto& [e, c] : other.c_)
      if ((!p || e < *p) && !(coefficient_or_zero(e) == c)) return false;
    return true;
  }

  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  static C unit() {
    if constexpr (std::is_same_v<C, Rational>)
      return Rational(1);
    else
      return C::constant(Rational(1));
  }
  static std::optional<int> min_precision(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
  }
  C coefficient_or_zero(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? C{} : it->second;
  }
  void trim() {
    for (auto it = c_.begin(); it != c_.end();) {
      if (it->second.is_zero() || (prec_ && it->first >= *prec_))
        it = c_.erase(it);
      else
        ++it;
    }
  }

  std::map<int, C> c_;
  std::optional<int> prec_;
};

}  // namespace sugawara
