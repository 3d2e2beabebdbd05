#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sugawara/commutative.hpp"
#include "sugawara/generator.hpp"
#include "sugawara/nc_element.hpp"

namespace sugawara {

/// Lie bracket of two generators as a linear combination of generators plus
/// a multiple of K.
struct BracketValue {
  std::vector<std::pair<Generator, Rational>> generators;
  Rational central;

  [[nodiscard]] bool is_zero() const { return generators.empty() && central.is_zero(); }
};

/// Enveloping algebra of affine gl_n extended by tau, at a fixed rank n.
///
/// Relations:
///   [e_ij[r], e_kl[s]] = d_kj e_il[r+s] - d_il e_kj[r+s]
///                        + K (d_kj d_il - d_ij d_kl / n) r d_{r,-s}
///   [tau, e_ij[r]]     = -r e_ij[r-1],   K central.
///
/// Products are brought to PBW normal form by adjacent transpositions. The
/// products "normal word times generator" are memoized, so an Algebra owns
/// mutable caches and must not be shared between threads; create one per
/// task instead.
class Algebra {
 public:
  explicit Algebra(int n, std::size_t cache_limit = 1U << 19);

  [[nodiscard]] int rank() const { return n_; }

  [[nodiscard]] BracketValue bracket_value(Generator a, Generator b) const;
  /// [a, b] as an element.
  [[nodiscard]] NcElement bracket(Generator a, Generator b) const;

  /// Product of the word in the algebra, in normal form. Any K in the word
  /// raises the K-degree.
  [[nodiscard]] NcElement normal_order(std::span<const Generator> word) const;
  [[nodiscard]] NcElement multiply(const NcElement& a, const NcElement& b) const;
  [[nodiscard]] NcElement multiply(std::span<const NcElement> factors) const;
  [[nodiscard]] NcElement times_generator(const NcElement& a, Generator g) const;
  [[nodiscard]] NcElement commutator(const NcElement& a, const NcElement& b) const;
  [[nodiscard]] NcElement power(const NcElement& a, int k) const;

  /// The translation derivation T: e_ij[r] -> -r e_ij[r-1], K fixed, T(1) = 0.
  /// Throws std::invalid_argument if a word contains tau.
  [[nodiscard]] NcElement translate(const NcElement& a) const;
  [[nodiscard]] NcElement translate(const NcElement& a, int times) const;

  /// Degree-d part of the image in S(g_-). Throws std::invalid_argument if
  /// the element has tau, a nonnegative mode or a K factor.
  [[nodiscard]] CommutativeElement symbol(const NcElement& a, int d) const;

  /// Throws std::out_of_range if the generator has indices beyond the rank.
  void validate(Generator g) const;

  [[nodiscard]] std::size_t cache_size() const { return cache_.size(); }
  void clear_cache() const { cache_.clear(); }

 private:
  using Product = std::shared_ptr<const NcElement>;

  /// m * g for a normal word m and a non-central generator g.
  [[nodiscard]] Product word_times(const Word& m, Generator g) const;
  void accumulate_times(TermAccumulator& acc, const NcElement& x, Generator g, const Rational& c, int kshift) const;

  int n_;
  Rational inv_n_;
  std::size_t cache_limit_;
  mutable std::unordered_map<Word, Product, WordHash> cache_;
};

/// Drops every term whose word contains an E-generator of nonnegative mode.
/// In normal form such generators sit at the right end, so these are
/// exactly the terms lying in the left ideal generated by gl_n[t].
NcElement vacuum_projection(const NcElement& x);

}  // namespace sugawara
