#include "sugawara/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace sugawara {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Rational RationalMatrix::max_abs() const {
  Rational best;
  for (const auto& x : data_) {
    const Rational a = abs(x);
    if (a > best) best = a;
  }
  return best;
}

Rational RationalMatrix::frobenius_squared() const {
  Rational s;
  for (const auto& x : data_)
    if (!x.is_zero()) s += x * x;
  return s;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!rhs.data_[i].is_zero()) data_[i] += rhs.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!rhs.data_[i].is_zero()) data_[i] -= rhs.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

namespace {

// Reduces m in place to row echelon form; returns the pivot columns.
std::vector<std::size_t> eliminate(RationalMatrix& m, std::size_t col_limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < col_limit && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix m) { return eliminate(m, m.cols()).size(); }

std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = std::move(a(r, c));
    aug(r, a.cols()) = std::move(b[r]);
  }
  const auto pivots = eliminate(aug, a.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (!aug(r, a.cols()).is_zero()) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

}  // namespace sugawara
