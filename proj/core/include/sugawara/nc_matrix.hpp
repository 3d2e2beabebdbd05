#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sugawara/algebra.hpp"
#include "sugawara/nc_element.hpp"

namespace sugawara {

/// Square matrix with NcElement entries. Matrix positions are 0-based;
/// generator indices (e_{ij}) stay 1-based.
class NcMatrix {
 public:
  explicit NcMatrix(int size);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] const NcElement& operator()(int row, int col) const { return entries_[index(row, col)]; }
  NcElement& operator()(int row, int col) { return entries_[index(row, col)]; }

  [[nodiscard]] NcMatrix with_rows_swapped(int p, int q) const;
  [[nodiscard]] NcMatrix with_columns_swapped(int p, int q) const;
  /// Delete the given rows and columns (sorted or not).
  [[nodiscard]] NcMatrix minor(std::span<const int> rows, std::span<const int> cols) const;
  /// Delete row i and column i.
  [[nodiscard]] NcMatrix principal_minor(int i) const;

  friend bool operator==(const NcMatrix&, const NcMatrix&) = default;

 private:
  [[nodiscard]] std::size_t index(int row, int col) const;

  int n_;
  std::vector<NcElement> entries_;
};

/// Calls f(permutation, sign) for every permutation of {0..n-1}.
void for_each_permutation(int n, const std::function<void(std::span<const int>, int)>& f);

/// Column-determinant: sum over sigma of sgn(sigma) a_{sigma(1)1} ... a_{sigma(n)n},
/// column index increasing left to right. Each permutation's product is
/// expanded into raw words and normal-ordered once.
NcElement cdet(const Algebra& alg, const NcMatrix& a);

/// The matrix tau + E[-1]: entries e_ij[-1], plus tau on the diagonal.
NcMatrix build_tau_matrix(int n);

NcMatrix matrix_product(const Algebra& alg, const NcMatrix& a, const NcMatrix& b);
NcElement trace(const NcMatrix& a);
/// tr(A^k); k = 0 gives n.
NcElement trace_power(const Algebra& alg, const NcMatrix& a, int k);
/// tr(A^0), ..., tr(A^k_max), sharing the matrix powers.
std::vector<NcElement> trace_powers(const Algebra& alg, const NcMatrix& a, int k_max);

struct ManinResult {
  bool is_manin = true;
  /// First (i, j, k, l), 0-based, at which the relation fails.
  std::optional<std::array<int, 4>> witness;
  NcElement residual;
};

/// Checks a_ij a_kl - a_kl a_ij = a_kj a_il - a_il a_kj for all i, j, k, l.
ManinResult is_manin(const Algebra& alg, const NcMatrix& a);

/// cdet(A with rows p, q swapped) == -cdet(A). Holds over any ring.
bool row_swap_antisymmetric(const Algebra& alg, const NcMatrix& a, int p, int q);
/// cdet(A with columns p, q swapped) == -cdet(A). Guaranteed when A is Manin.
bool column_swap_antisymmetric(const Algebra& alg, const NcMatrix& a, int p, int q);

struct IdentityResult {
  bool holds = false;
  NcElement lhs;
  NcElement rhs;
  [[nodiscard]] NcElement residual() const { return lhs - rhs; }
};

/// [b, cdet A] against the sum over i of cdet(A with column i replaced by [b, a_{. i}]).
IdentityResult commutator_expansion_check(const Algebra& alg, const NcMatrix& a, const NcElement& b);

/// Column replacement rule: column j of A replaced by b in row i (zeros
/// elsewhere) equals (-1)^{n-j} times the determinant with that column moved
/// last, plus (-1)^{i+j} times the sum over k > j of the row-i/column-j
/// minors whose column k is replaced by [b, a_{. k}]. Indices are 0-based;
/// the sign parity is the same as with 1-based indices.
IdentityResult column_replacement_check(const Algebra& alg, const NcMatrix& a, int i, int j, const NcElement& b);

/// Truncated Laurent series in a central variable u with NcElement
/// coefficients. Coefficients of u^e are exact for e >= valid_from; a series
/// without a valid_from is an exact Laurent polynomial.
class USeries {
 public:
  USeries() = default;
  static USeries polynomial(std::map<int, NcElement> coeffs);
  static USeries truncated(std::map<int, NcElement> coeffs, int valid_from);

  [[nodiscard]] const NcElement& coefficient(int e) const;
  [[nodiscard]] const std::map<int, NcElement>& coefficients() const { return coeffs_; }
  [[nodiscard]] std::optional<int> valid_from() const { return valid_from_; }
  [[nodiscard]] bool is_exact() const { return !valid_from_.has_value(); }
  /// Highest exponent with a nonzero coefficient; nullopt for zero.
  [[nodiscard]] std::optional<int> top() const;

  [[nodiscard]] USeries derivative() const;
  [[nodiscard]] USeries multiply(const Algebra& alg, const USeries& rhs) const;
  USeries& operator+=(const USeries& rhs);

 private:
  void trim();

  std::map<int, NcElement> coeffs_;
  std::optional<int> valid_from_;
};

/// cdet(u + A) as a polynomial in u.
USeries cdet_shifted(const Algebra& alg, const NcMatrix& a);

enum class CheckStatus { Pass, Fail, Inconclusive };

struct NewtonResult {
  CheckStatus status = CheckStatus::Inconclusive;
  int truncation = 0;
  /// Exponents compared, from n-1 down to -truncation.
  std::vector<int> exponents;
  std::optional<int> first_mismatch;
  NcElement residual;
};

/// d/du cdet(u + tau + E[-1]) against
/// cdet(u + tau + E[-1]) * sum_k (-1)^k u^{-k-1} tr(tau + E[-1])^k,
/// coefficient by coefficient down to u^{-truncation}. Truncation < 1 is
/// inconclusive.
NewtonResult newton_identity_check(const Algebra& alg, int truncation);

}  // namespace sugawara
