#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sugawara/linalg.hpp"
#include "sugawara/rational.hpp"
#include "sugawara/report.hpp"

namespace sugawara {

/// Rank n, sites at distinct rational points, each carrying C^n.
struct SiteConfig {
  int n = 2;
  std::vector<Rational> points;
  std::size_t dimension_cap = 256;

  [[nodiscard]] int sites() const { return static_cast<int>(points.size()); }
  /// n^m.
  [[nodiscard]] std::size_t dimension() const;
  /// Throws std::invalid_argument for n < 1, no sites, repeated points, or
  /// n^m above the cap.
  void validate() const;
};

/// e_ij acting at one site (1-based) of (C^n)^{(x) m}; the basis index of
/// (s_1, ..., s_m) is sum_a s_a n^{m-a}.
RationalMatrix site_operator(const SiteConfig& cfg, int site, int i, int j);
/// sum_a e_ij^{(a)}.
RationalMatrix global_operator(const SiteConfig& cfg, int i, int j);

/// Polynomial in z with matrix coefficients; entry p is the z^p coefficient.
using MatrixPolynomial = std::vector<RationalMatrix>;

/// N(z) / P(z)^d with P(z) = prod_a (z - z_a).
struct OperatorRational {
  MatrixPolynomial numerator;
  int denominator_power = 0;
};

/// Entry (i, j) is sum_a X^{(a)} / (z - z_a), X = e_ji when transposed
/// (the default convention), X = e_ij otherwise. 0-based positions.
std::vector<std::vector<OperatorRational>> lax_matrix(const SiteConfig& cfg, bool transposed = true);

/// Coefficient of d_z^k times z^p in P(z)^n cdet(d_z + L(z)).
struct GaudinOperator {
  int d_power = 0;
  int z_power = 0;
  RationalMatrix matrix;
};

/// Every nonzero z-coefficient of every d_z-power coefficient of
/// P(z)^n cdet(d_z + L(z)).
std::vector<GaudinOperator> gaudin_operators(const SiteConfig& cfg, bool transposed = true);

struct GaudinReport {
  CheckReport report;
  bool transposed = true;
  std::size_t operator_count = 0;
  /// Largest squared Frobenius norm among nonzero commutators.
  Rational max_violation;
};

/// Pairwise commutators of gaudin_operators and commutators with every
/// global e_ij, all required to be exactly zero.
GaudinReport verify_gaudin_commutativity(const SiteConfig& cfg, bool transposed = true);

}  // namespace sugawara
