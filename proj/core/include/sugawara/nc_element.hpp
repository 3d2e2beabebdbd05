#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sugawara/generator.hpp"
#include "sugawara/rational.hpp"

namespace sugawara {

/// coeff * K^kdeg * word, with the word in PBW normal form.
struct Term {
  Rational coeff;
  int kdeg = 0;
  Word word;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Serialization order of terms: K-degree, then word length, then
/// lexicographic generator order.
inline bool term_key_less(int ka, const Word& wa, int kb, const Word& wb) {
  if (ka != kb) return ka < kb;
  return word_less(wa, wb);
}

/// True iff the word is nondecreasing in the generator order and has no K.
bool is_normal_word(std::span<const Generator> word);

/// Exact linear combination of normal-ordered words times powers of K.
///
/// Values are immutable after construction and always canonical: terms are
/// sorted, merged and nonzero, so two elements are equal iff their term
/// vectors are equal. Arithmetic that needs the commutation relations
/// (products, brackets) lives on Algebra.
class NcElement {
 public:
  NcElement() = default;

  static NcElement scalar(const Rational& c);
  static NcElement one() { return scalar(Rational(1)); }
  static NcElement generator(Generator g, const Rational& c = Rational(1));
  /// Builds from terms whose words are already normal. Duplicate keys are
  /// merged and zero coefficients dropped. Throws std::invalid_argument if a
  /// word is not in normal form.
  static NcElement from_terms(std::vector<Term> terms);

  [[nodiscard]] std::span<const Term> terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  /// Longest word length (filtration degree); -1 for zero.
  [[nodiscard]] int degree() const;
  [[nodiscard]] int max_kdeg() const;
  [[nodiscard]] Rational coefficient(int kdeg, const Word& word) const;

  /// Evaluate K at a number: the result has K-degree 0 everywhere.
  [[nodiscard]] NcElement substitute_k(const Rational& value) const;
  /// Coefficient of K^d as an element of K-degree 0.
  [[nodiscard]] NcElement k_coefficient(int d) const;
  /// Multiply by K^d.
  [[nodiscard]] NcElement times_k(int d = 1) const;
  /// True iff no word contains tau or an E-generator with mode >= 0.
  [[nodiscard]] bool in_negative_part() const;

  NcElement operator-() const;
  NcElement& operator+=(const NcElement& rhs);
  NcElement& operator-=(const NcElement& rhs);
  NcElement& operator*=(const Rational& c);

  friend NcElement operator+(NcElement a, const NcElement& b) { return a += b; }
  friend NcElement operator-(NcElement a, const NcElement& b) { return a -= b; }
  friend NcElement operator*(NcElement a, const Rational& c) { return a *= c; }
  friend NcElement operator*(const Rational& c, NcElement a) { return a *= c; }
  friend bool operator==(const NcElement&, const NcElement&) = default;

  /// Human-readable form, e.g. "e_{11}[-1]*e_{22}[-1] - e_{12}[-1]*e_{21}[-1] + e_{11}[-2]".
  [[nodiscard]] std::string to_string() const;

 private:
  friend class TermAccumulator;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const NcElement& x);

/// Hash-map accumulator used by the hot loops; converts to a canonical
/// NcElement once at the end.
class TermAccumulator {
 public:
  void add(int kdeg, const Word& word, const Rational& c);
  void add(int kdeg, Word&& word, const Rational& c);
  /// Adds c * K^kshift * x.
  void add(const NcElement& x, const Rational& c, int kshift = 0);
  [[nodiscard]] bool empty() const { return map_.empty(); }
  NcElement finish();

 private:
  struct Key {
    int kdeg;
    Word word;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return WordHash{}(k.word) * 31 + static_cast<std::size_t>(k.kdeg);
    }
  };
  std::unordered_map<Key, Rational, KeyHash> map_;
};

}  // namespace sugawara
