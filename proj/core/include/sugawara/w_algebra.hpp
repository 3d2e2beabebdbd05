#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sugawara/algebra.hpp"
#include "sugawara/laurent.hpp"
#include "sugawara/nc_element.hpp"
#include "sugawara/ore.hpp"
#include "sugawara/report.hpp"
#include "sugawara/wpolynomial.hpp"

namespace sugawara {

struct TranslateW {
  WPolynomial operator()(const WPolynomial& p) const { return p.translate(); }
};

/// Polynomial in tau with left WPolynomial coefficients, [tau, b_i[r]] = -r b_i[r-1].
using WTauOperator = OrePolynomial<WPolynomial, TranslateW>;

template <class C>
struct DifferentiateZ {
  LaurentSeries<C> operator()(const LaurentSeries<C>& s) const { return s.derivative(); }
};

/// Differential operator in d/dz with truncated Laurent series coefficients.
template <class C>
using DiffOperator = OrePolynomial<LaurentSeries<C>, DifferentiateZ<C>>;

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  /// prod_k k^{m_k} m_k!, with m_k the multiplicity of k.
  [[nodiscard]] Rational z() const;
};

/// All partitions of r (one empty partition for r = 0).
std::vector<Partition> partitions(int r);

/// Q_i p = sum_r sum_{lambda |- r} b_i(lambda)/z_lambda (d/db_i[-r-1] - d/db_{i+1}[-r-1]) p
/// with b_i(lambda) = prod_k (b_i[-lambda_k] - b_{i+1}[-lambda_k]). The sum
/// stops at the deepest mode of b_i, b_{i+1} in p, so the result is exact.
WPolynomial screening(int i, const WPolynomial& p);

/// (tau + b_n[-1]) ... (tau + b_1[-1]).
WTauOperator miura_operator(int n);
/// B_1..B_n: the coefficient of tau^{n-l} in the Miura product.
std::vector<WPolynomial> miura_image_cdet(int n);

/// Q_i(T^r B_l) = 0 for all i < n, l <= n, r <= r_max, and Q_1(b_1[-1]) != 0.
CheckReport verify_w_membership(int n, int r_max = 2);

/// The homomorphism rho restricted to the center z(gl_n^) inside U(g_-).
///
/// Images of S_1..S_n are obtained from the reversed-order expansion of
/// cdet(tau+E[-1]): that expansion is checked to equal cdet, and its
/// identity-permutation term (tau+e_nn[-1])...(tau+e_11[-1]) is mapped by
/// e_ii[r] -> b_i[r]. A central element is then decomposed, by exact linear
/// algebra on PBW coefficients, as a polynomial in the T^r S_l; its image is
/// the same polynomial in the T^r rho(S_l).
class RhoMap {
 public:
  explicit RhoMap(int n);

  [[nodiscard]] int rank() const { return n_; }
  /// rho(S_1..S_n).
  [[nodiscard]] const std::vector<WPolynomial>& generator_images() const { return images_; }
  /// True iff the reversed-order expansion reproduced cdet(tau+E[-1]).
  [[nodiscard]] bool reversed_expansion_matches() const { return reversed_ok_; }

  /// Throws std::invalid_argument if x has tau, K or nonnegative modes, or is
  /// not a polynomial in the T^r S_l.
  [[nodiscard]] WPolynomial operator()(const NcElement& x) const;
  /// Image of the coefficients of a tau-polynomial, e.g. tr(tau+E[-1])^k.
  [[nodiscard]] WTauOperator on_tau_polynomial(const NcElement& x) const;

  [[nodiscard]] const Algebra& algebra() const { return *alg_; }

 private:
  struct Factor {
    int l;
    int r;
  };
  [[nodiscard]] const NcElement& translated_generator(int l, int r) const;
  [[nodiscard]] const WPolynomial& translated_image(int l, int r) const;
  [[nodiscard]] WPolynomial decompose_homogeneous(const NcElement& x, int weight) const;

  int n_;
  std::unique_ptr<Algebra> alg_;
  std::vector<NcElement> s_;
  std::vector<WPolynomial> images_;
  bool reversed_ok_ = false;
  mutable std::map<std::pair<int, int>, NcElement> ts_cache_;
  mutable std::map<std::pair<int, int>, WPolynomial> tb_cache_;
};

/// Sum of |mode| over a word; elements of the families are homogeneous.
int weight(const Word& w);

/// t^k coefficients, k <= k_max, of the trace generating function with
/// A_j = tau + b_j[-1].
std::vector<WTauOperator> trace_generating_image(int n, int k_max);
/// Same coefficients obtained by solving the Newton identity on the Miura side.
std::vector<WTauOperator> trace_newton_transport(int n, int k_max);

/// Agreement of the trace generating function, the Newton transport, and
/// rho applied to tr(tau+E[-1])^k, for k <= k_max.
CheckReport verify_trace_images(int n, int k_max = 4);

/// rho(S_l) = B_l and rho(T S_l) = T B_l for all l.
CheckReport verify_miura_image(int n);

/// n truncated series chi_i(z) = sum_r chi_i[r] z^{-r-1}, i = 1..n.
class ChiSeries {
 public:
  struct Component {
    std::map<int, Rational> coeffs;  // r -> chi_i[r]
    int min_r = 0;
    int max_r = 0;
  };

  /// Throws std::invalid_argument if a coefficient lies outside [min_r, max_r].
  explicit ChiSeries(std::vector<Component> components);
  /// chi_i(z) = c_i / z, exact.
  static ChiSeries simple_poles(const std::vector<Rational>& residues);

  [[nodiscard]] int rank() const { return static_cast<int>(components_.size()); }
  [[nodiscard]] const std::vector<Component>& components() const { return components_; }
  /// Known for z-exponents below -min_r; zero below -max_r-1.
  [[nodiscard]] LaurentSeries<Rational> series(int i) const;
  [[nodiscard]] int min_depth() const;

 private:
  std::vector<Component> components_;
  bool exact_ = false;
};

class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int required_min_r)
      : std::runtime_error(what), required_min_r_(required_min_r) {}
  /// A min_r (applied to every component) for which the request succeeds.
  [[nodiscard]] int required_min_r() const { return required_min_r_; }

 private:
  int required_min_r_;
};

enum class EigenFamily { Cdet, Trace };

/// Eigenvalue operator on the Wakimoto module: (d_z + chi_n) ... (d_z + chi_1)
/// for Cdet, or the t^k coefficient of the trace generating function with
/// A_i = d_z + chi_i for Trace. Every coefficient must be known through
/// z^required_order, else TruncationError.
DiffOperator<Rational> wakimoto_eigenvalue(EigenFamily family, const ChiSeries& chi, int k, int required_order);

/// The cdet eigenvalue with chi_i replaced by b_i(z) = sum_{r<0} b_i[r] z^{-r-1}
/// truncated at depth `depth`.
DiffOperator<WPolynomial> formal_miura_operator(int n, int depth);

/// The d_z^{n-l} coefficient of formal_miura_operator matches
/// sum_m z^m T^m(B_l)/m! on every known power.
CheckReport verify_formal_substitution(int n, int depth = 4);

std::string to_string(const WTauOperator& op);
std::string to_string(const LaurentSeries<Rational>& s);
std::string to_string(const DiffOperator<Rational>& op);

}  // namespace sugawara
