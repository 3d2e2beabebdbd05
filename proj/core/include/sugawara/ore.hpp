#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "sugawara/rational.hpp"

namespace sugawara {

/// Polynomial sum_k c_k D^k in a derivation symbol D with coefficients on
/// the left, multiplied through D a = a D + d(a). R is a ring with a zero
/// default value, + and *, scaling by Rational, and R::constant; Derive is a
/// functor computing d.
template <class R, class Derive>
class OrePolynomial {
 public:
  using Coefficient = R;

  OrePolynomial() = default;
  explicit OrePolynomial(std::vector<R> coefficients) : c_(std::move(coefficients)) {}
  static OrePolynomial constant(R c) { return OrePolynomial(std::vector<R>{std::move(c)}); }
  static OrePolynomial one() { return constant(R::constant(Rational(1))); }
  /// The symbol D itself.
  static OrePolynomial symbol() { return OrePolynomial(std::vector<R>{R{}, R::constant(Rational(1))}); }

  /// Number of stored coefficients minus one; stored coefficients may be zero.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] R coefficient(int k) const {
    if (k < 0 || k > degree()) return R{};
    return c_[static_cast<std::size_t>(k)];
  }
  [[nodiscard]] const std::vector<R>& coefficients() const { return c_; }

  OrePolynomial& operator+=(const OrePolynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
    return *this;
  }
  OrePolynomial& operator-=(const OrePolynomial& rhs) { return *this += rhs * Rational(-1); }
  OrePolynomial& operator*=(const Rational& s) {
    for (auto& c : c_) c = c * s;
    return *this;
  }
  friend OrePolynomial operator+(OrePolynomial a, const OrePolynomial& b) { return a += b; }
  friend OrePolynomial operator-(OrePolynomial a, const OrePolynomial& b) { return a -= b; }
  friend OrePolynomial operator*(OrePolynomial a, const Rational& s) { return a *= s; }

  /// D^i b = sum_k binom(i, k) d^k(b) D^{i-k}.
  friend OrePolynomial operator*(const OrePolynomial& a, const OrePolynomial& b) {
    const Derive d{};
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<R> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      std::vector<R> derivs{b.c_[j]};  // d^k(b_j)
      for (std::size_t i = 0; i < a.c_.size(); ++i) {
        while (derivs.size() <= i) derivs.push_back(d(derivs.back()));
        for (std::size_t k = 0; k <= i; ++k) {
          const Rational binom = binomial(static_cast<int>(i), static_cast<int>(k));
          out[i - k + j] += a.c_[i] * derivs[k] * binom;
        }
      }
    }
    return OrePolynomial(std::move(out));
  }

  friend bool operator==(const OrePolynomial& a, const OrePolynomial& b) {
    const std::size_t m = std::max(a.c_.size(), b.c_.size());
    for (std::size_t k = 0; k < m; ++k)
      if (!(a.coefficient(static_cast<int>(k)) == b.coefficient(static_cast<int>(k)))) return false;
    return true;
  }

 private:
  std::vector<R> c_;
};

/// t^0..t^{k_max} coefficients of
/// sum_i (1 - t A_1)^{-1} ... (1 - t A_i)^{-1} (1 - t A_{i-1}) ... (1 - t A_1)
/// for central t, with factors = A_1..A_n.
template <class Op>
std::vector<Op> trace_generating_coefficients(const std::vector<Op>& factors, int k_max) {
  using Series = std::vector<Op>;
  const auto len = static_cast<std::size_t>(k_max + 1);
  auto mul = [len](const Series& x, const Series& y) {
    Series z(len);
    for (std::size_t i = 0; i < x.size() && i < len; ++i)
      for (std::size_t j = 0; j < y.size() && i + j < len; ++j) z[i + j] += x[i] * y[j];
    return z;
  };
  auto geometric = [len](const Op& a) {  // (1 - t a)^{-1}
    Series g{Op::one()};
    while (g.size() < len) g.push_back(g.back() * a);
    return g;
  };
  Series total(len);
  Series left{Op::one()};   // (1 - tA_1)^{-1} ... (1 - tA_i)^{-1}
  Series right{Op::one()};  // (1 - tA_{i-1}) ... (1 - tA_1)
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) right = mul(Series{Op::one(), factors[i - 1] * Rational(-1)}, right);
    left = mul(left, geometric(factors[i]));
    const Series term = mul(left, right);
    for (std::size_t k = 0; k < len; ++k) total[k] += term[k];
  }
  return total;
}

/// Solves d/du P(u) = P(u) sum_k (-1)^k u^{-k-1} X_k for X_0..X_{k_max},
/// where P(u) = (u + A_n) ... (u + A_1) with factors = A_1..A_n.
template <class Op>
std::vector<Op> newton_trace_coefficients(const std::vector<Op>& factors, int k_max) {
  const int n = static_cast<int>(factors.size());
  // p[j] = coefficient of u^j in P(u).
  std::vector<Op> p{Op::one()};
  for (int f = 0; f < n; ++f) {
    const Op& a = factors[static_cast<std::size_t>(f)];
    std::vector<Op> next(p.size() + 1);
    for (std::size_t j = 0; j < p.size(); ++j) {
      next[j + 1] += p[j];
      next[j] += a * p[j];
    }
    p = std::move(next);
  }
  std::vector<Op> x;
  for (int k = 0; k <= k_max; ++k) {
    // Coefficient of u^m, m = n - k - 1, on both sides.
    const int m = n - k - 1;
    Op rhs;
    if (m >= 0) rhs = p[static_cast<std::size_t>(m + 1)] * Rational(m + 1);
    for (int j = std::max(0, m + 1); j <= n - 1; ++j) {
      const int idx = j - m - 1;
      const Op term = p[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(idx)];
      rhs -= idx % 2 == 0 ? term : term * Rational(-1);
    }
    x.push_back(k % 2 == 0 ? rhs : rhs * Rational(-1));
  }
  return x;
}

}  // namespace sugawara
