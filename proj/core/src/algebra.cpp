#include "sugawara/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sugawara {

Algebra::Algebra(int n, std::size_t cache_limit) : n_(n), cache_limit_(cache_limit) {
  if (n < 1 || n > Generator::kMaxIndex) throw std::invalid_argument("algebra rank must be in [1, 63]");
  inv_n_ = Rational(1, n);
}

void Algebra::validate(Generator g) const {
  if (g.is_e() && (g.row() > n_ || g.col() > n_))
    throw std::out_of_range("generator " + g.to_string() + " exceeds rank " + std::to_string(n_));
}

BracketValue Algebra::bracket_value(Generator a, Generator b) const {
  BracketValue out;
  if (a.is_central() || b.is_central() || a == b) return out;
  if (a.is_tau() && b.is_tau()) return out;
  if (a.is_tau()) {
    if (b.mode() != 0) out.generators.emplace_back(b.with_mode(b.mode() - 1), Rational(-b.mode()));
    return out;
  }
  if (b.is_tau()) {
    if (a.mode() != 0) out.generators.emplace_back(a.with_mode(a.mode() - 1), Rational(a.mode()));
    return out;
  }
  const int i = a.row(), j = a.col(), r = a.mode();
  const int k = b.row(), l = b.col(), s = b.mode();
  if (k == j && i == l && i == j) {
    // e_ii[r], e_ii[s]: the two generator terms cancel.
  } else {
    if (k == j) out.generators.emplace_back(Generator::e(i, l, r + s), Rational(1));
    if (i == l) out.generators.emplace_back(Generator::e(k, j, r + s), Rational(-1));
  }
  if (r + s == 0 && r != 0) {
    Rational form = Rational((k == j && i == l) ? 1 : 0);
    if (i == j && k == l) form -= inv_n_;
    out.central = form * Rational(r);
  }
  return out;
}

NcElement Algebra::bracket(Generator a, Generator b) const {
  validate(a);
  validate(b);
  const BracketValue v = bracket_value(a, b);
  TermAccumulator acc;
  for (const auto& [g, c] : v.generators) acc.add(0, Word{g}, c);
  acc.add(1, Word{}, v.central);
  return acc.finish();
}

Algebra::Product Algebra::word_times(const Word& m, Generator g) const {
  const auto pos = std::upper_bound(m.begin(), m.end(), g);
  if (pos == m.end()) {
    Word w = m;
    w.push_back(g);
    return std::make_shared<const NcElement>(NcElement::from_terms({Term{Rational(1), 0, std::move(w)}}));
  }

  Word key = m;
  key.push_back(g);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  TermAccumulator acc;
  {
    Word top;
    top.reserve(m.size() + 1);
    top.insert(top.end(), m.begin(), pos);
    top.push_back(g);
    top.insert(top.end(), pos, m.end());
    acc.add(0, std::move(top), Rational(1));
  }

  // m[0..t) g m[t] m(t..) arises from swapping g past m[t]; each swap
  // leaves the correction m[0..t) [m[t], g] m(t..).
  const auto first = static_cast<std::size_t>(pos - m.begin());
  for (std::size_t t = m.size(); t-- > first;) {
    const BracketValue bv = bracket_value(m[t], g);
    if (bv.is_zero()) continue;
    const Word prefix(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(t));
    if (!bv.central.is_zero()) {
      Word rest = prefix;
      rest.insert(rest.end(), m.begin() + static_cast<std::ptrdiff_t>(t) + 1, m.end());
      acc.add(1, std::move(rest), bv.central);
    }
    for (const auto& [z, c] : bv.generators) {
      NcElement partial = *word_times(prefix, z);
      for (std::size_t s = t + 1; s < m.size(); ++s) partial = times_generator(partial, m[s]);
      acc.add(partial, c);
    }
  }

  auto result = std::make_shared<const NcElement>(acc.finish());
  if (cache_.size() >= cache_limit_) cache_.clear();
  cache_.emplace(std::move(key), result);
  return result;
}

void Algebra::accumulate_times(TermAccumulator& acc, const NcElement& x, Generator g, const Rational& c,
                               int kshift) const {
  if (g.is_central()) {
    acc.add(x, c, kshift + 1);
    return;
  }
  for (const auto& t : x.terms()) {
    const Product p = word_times(t.word, g);
    acc.add(*p, t.coeff * c, t.kdeg + kshift);
  }
}

NcElement Algebra::times_generator(const NcElement& a, Generator g) const {
  validate(g);
  TermAccumulator acc;
  accumulate_times(acc, a, g, Rational(1), 0);
  return acc.finish();
}

NcElement Algebra::normal_order(std::span<const Generator> word) const {
  for (const auto& g : word) validate(g);
  if (is_normal_word(word)) return NcElement::from_terms({Term{Rational(1), 0, Word(word.begin(), word.end())}});
  NcElement x = NcElement::one();
  for (const auto& g : word) x = times_generator(x, g);
  return x;
}

NcElement Algebra::multiply(const NcElement& a, const NcElement& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  TermAccumulator acc;
  for (const auto& tb : b.terms()) {
    if (tb.word.empty()) {
      acc.add(a, tb.coeff, tb.kdeg);
      continue;
    }
    NcElement x = a;
    for (std::size_t i = 0; i + 1 < tb.word.size(); ++i) x = times_generator(x, tb.word[i]);
    accumulate_times(acc, x, tb.word.back(), tb.coeff, tb.kdeg);
  }
  return acc.finish();
}

NcElement Algebra::multiply(std::span<const NcElement> factors) const {
  NcElement x = NcElement::one();
  for (const auto& f : factors) x = multiply(x, f);
  return x;
}

NcElement Algebra::commutator(const NcElement& a, const NcElement& b) const { return multiply(a, b) - multiply(b, a); }

NcElement Algebra::power(const NcElement& a, int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  NcElement x = NcElement::one();
  for (int i = 0; i < k; ++i) x = multiply(x, a);
  return x;
}

NcElement Algebra::translate(const NcElement& a) const {
  TermAccumulator acc;
  for (const auto& t : a.terms()) {
    for (std::size_t p = 0; p < t.word.size(); ++p) {
      const Generator g = t.word[p];
      if (g.is_tau()) throw std::invalid_argument("translate: tau is outside U(g_-)");
      if (g.mode() == 0) continue;
      const Word prefix(t.word.begin(), t.word.begin() + static_cast<std::ptrdiff_t>(p));
      NcElement x = *word_times(prefix, g.with_mode(g.mode() - 1));
      for (std::size_t s = p + 1; s < t.word.size(); ++s) x = times_generator(x, t.word[s]);
      acc.add(x, t.coeff * Rational(-g.mode()), t.kdeg);
    }
  }
  return acc.finish();
}

NcElement Algebra::translate(const NcElement& a, int times) const {
  NcElement x = a;
  for (int i = 0; i < times; ++i) x = translate(x);
  return x;
}

CommutativeElement Algebra::symbol(const NcElement& a, int d) const {
  CommutativeElement out;
  for (const auto& t : a.terms()) {
    if (t.kdeg != 0) throw std::invalid_argument("symbol: element has a K factor");
    for (const auto& g : t.word)
      if (!g.is_e() || g.mode() >= 0) throw std::invalid_argument("symbol: element is outside U(g_-)");
    if (static_cast<int>(t.word.size()) == d) out.add_term(t.word, t.coeff);
  }
  return out;
}

NcElement vacuum_projection(const NcElement& x) {
  std::vector<Term> kept;
  for (const auto& t : x.terms()) {
    const bool annihilated = !t.word.empty() && t.word.back().is_e() && t.word.back().mode() >= 0;
    if (!annihilated) kept.push_back(t);
  }
  return NcElement::from_terms(std::move(kept));
}

}  // namespace sugawara
