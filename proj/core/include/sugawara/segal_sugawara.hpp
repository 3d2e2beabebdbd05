#pragma once

#include <cstdint>
#include <vector>

#include "sugawara/algebra.hpp"
#include "sugawara/commutative.hpp"
#include "sugawara/nc_element.hpp"
#include "sugawara/nc_matrix.hpp"
#include "sugawara/report.hpp"

namespace sugawara {

/// c_0 + c_1 tau + ... + c_d tau^d with coefficients on the left of the tau powers.
class TauPolynomial {
 public:
  TauPolynomial() = default;
  explicit TauPolynomial(std::vector<NcElement> coefficients);
  /// Splits each normal word into its trailing run of tau and the rest.
  /// Throws std::invalid_argument if tau is followed by another generator.
  static TauPolynomial from_element(const NcElement& x);

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of tau^k; zero beyond the degree.
  [[nodiscard]] const NcElement& coefficient(int k) const;
  [[nodiscard]] const std::vector<NcElement>& coefficients() const { return coeffs_; }
  [[nodiscard]] NcElement to_element(const Algebra& alg) const;

  friend bool operator==(const TauPolynomial&, const TauPolynomial&) = default;

 private:
  std::vector<NcElement> coeffs_;
};

/// Element of V(gl_n) (x) C[tau]: a normal-form element with no E-generator
/// of nonnegative mode, K a polynomial variable.
class VacuumVector {
 public:
  VacuumVector() = default;
  /// Throws std::invalid_argument if some word contains e_ij[r] with r >= 0.
  explicit VacuumVector(NcElement x);
  static VacuumVector vacuum() { return VacuumVector(NcElement::one()); }

  [[nodiscard]] const NcElement& element() const { return x_; }
  [[nodiscard]] bool is_zero() const { return x_.is_zero(); }
  [[nodiscard]] TauPolynomial tau_components() const { return TauPolynomial::from_element(x_); }

  friend bool operator==(const VacuumVector&, const VacuumVector&) = default;

 private:
  NcElement x_;
};

/// S_1..S_n: the coefficient of tau^{n-l} in cdet(tau + E[-1]).
std::vector<NcElement> segal_sugawara_cdet(const Algebra& alg);
/// T_{k0}..T_{kk}: the coefficient of tau^{k-l} in tr(tau + E[-1])^k.
std::vector<NcElement> segal_sugawara_trace(const Algebra& alg, int k);

/// x . v in the vacuum module, for x = e_ij[r] with r >= 0.
/// Throws std::invalid_argument for any other generator.
VacuumVector act_on_vacuum(const Algebra& alg, Generator x, const VacuumVector& v);

/// (K+n)/n ((n-1) |tau+E[-1]|_nn - sum_{i<n} |tau+E[-1]|_ii), where |A|_ii is
/// cdet of A with row and column i deleted.
NcElement centrality_rhs(const Algebra& alg);

struct CentralityOptions {
  /// Also test every e_ij[1] for divisibility by K+n (n <= 2 only).
  bool exhaustive_first_mode = false;
};

/// e_ij[0] cdet(tau+E[-1]) = 0 for all i, j; e_nn[1] cdet(tau+E[-1]) equals
/// centrality_rhs; and the latter vanishes at K = -n.
CheckReport verify_centrality(int n, CentralityOptions options = {});

/// [S_l, S_m], [T_ll, T_mm], [S_l, T_mm] and [S_l, T^r S_m] for 1 <= r <= r_max.
CheckReport verify_commutativity(int n, int r_max = 2);

/// T^{-r-1}(S) / (-r-1)!, the coefficient of z^{-r-1} in Y(S, z)1.
/// Throws std::invalid_argument for r >= 0.
NcElement field_plus_coefficient(const Algebra& alg, const NcElement& s, int r);

/// Coefficient of u^{n-l} in the commutative det(u + E[-1]).
CommutativeElement char_poly_coefficient(int n, int l);
/// Commutative tr E[-1]^l.
CommutativeElement power_sum(int n, int l);

/// Symbols of S_l and T_ll against the characteristic polynomial and power
/// sums; algebraic independence of each family by Jacobian rank at random
/// rational points (fixed seed, retried on deficiency).
CheckReport verify_complete_set(int n, std::uint64_t seed = 0x5eed2008ULL);

}  // namespace sugawara
