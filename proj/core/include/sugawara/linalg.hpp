#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sugawara/rational.hpp"

namespace sugawara {

/// Dense exact-rational matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  [[nodiscard]] bool is_zero() const;
  /// Largest absolute entry (max norm), as a rational.
  [[nodiscard]] Rational max_abs() const;
  /// Sum of squared entries (squared Frobenius norm), exact.
  [[nodiscard]] Rational frobenius_squared() const;

  RationalMatrix& operator+=(const RationalMatrix& rhs);
  RationalMatrix& operator-=(const RationalMatrix& rhs);
  RationalMatrix& operator*=(const Rational& c);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& c) { return a *= c; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

/// Rank by exact Gaussian elimination.
std::size_t rank(RationalMatrix m);

/// Solves a x = b exactly. Returns nullopt if inconsistent; free variables
/// are set to zero when the solution is not unique.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b);

}  // namespace sugawara
