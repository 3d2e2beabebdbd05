#include "sugawara/nc_element.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sugawara {

namespace {

bool term_less(const Term& a, const Term& b) { return term_key_less(a.kdeg, a.word, b.kdeg, b.word); }

std::string format_monomial(int kdeg, const Word& word) {
  std::string out;
  auto append = [&out](const std::string& s) {
    if (!out.empty()) out += '*';
    out += s;
  };
  if (kdeg == 1) append("K");
  if (kdeg > 1) append("K^" + std::to_string(kdeg));
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    const auto run = j - i;
    append(run == 1 ? word[i].to_string() : word[i].to_string() + "^" + std::to_string(run));
    i = j;
  }
  return out;
}

}  // namespace

bool is_normal_word(std::span<const Generator> word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i].is_central()) return false;
    if (i > 0 && word[i] < word[i - 1]) return false;
  }
  return true;
}

NcElement NcElement::scalar(const Rational& c) {
  NcElement x;
  if (!c.is_zero()) x.terms_.push_back(Term{c, 0, {}});
  return x;
}

NcElement NcElement::generator(Generator g, const Rational& c) {
  NcElement x;
  if (c.is_zero()) return x;
  if (g.is_central())
    x.terms_.push_back(Term{c, 1, {}});
  else
    x.terms_.push_back(Term{c, 0, {g}});
  return x;
}

NcElement NcElement::from_terms(std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (!is_normal_word(t.word)) throw std::invalid_argument("from_terms: word not in normal form");
    if (t.kdeg < 0) throw std::invalid_argument("from_terms: negative K-degree");
  }
  std::sort(terms.begin(), terms.end(), term_less);
  NcElement x;
  for (auto& t : terms) {
    if (!x.terms_.empty() && x.terms_.back().kdeg == t.kdeg && x.terms_.back().word == t.word) {
      x.terms_.back().coeff += t.coeff;
      if (x.terms_.back().coeff.is_zero()) x.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      x.terms_.push_back(std::move(t));
    }
  }
  return x;
}

int NcElement::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.word.size()));
  return d;
}

int NcElement::max_kdeg() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.kdeg);
  return d;
}

Rational NcElement::coefficient(int kdeg, const Word& word) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{Rational(0), kdeg, word}, term_less);
  if (it != terms_.end() && it->kdeg == kdeg && it->word == word) return it->coeff;
  return Rational(0);
}

NcElement NcElement::substitute_k(const Rational& value) const {
  TermAccumulator acc;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    for (int i = 0; i < t.kdeg; ++i) c *= value;
    acc.add(0, t.word, c);
  }
  return acc.finish();
}

NcElement NcElement::k_coefficient(int d) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.kdeg == d) out.push_back(Term{t.coeff, 0, t.word});
  return from_terms(std::move(out));
}

NcElement NcElement::times_k(int d) const {
  NcElement x = *this;
  for (auto& t : x.terms_) t.kdeg += d;
  return x;
}

bool NcElement::in_negative_part() const {
  for (const auto& t : terms_)
    for (const auto& g : t.word)
      if (!g.is_e() || g.mode() >= 0) return false;
  return true;
}

NcElement NcElement::operator-() const {
  NcElement x = *this;
  for (auto& t : x.terms_) t.coeff = -t.coeff;
  return x;
}

NcElement& NcElement::operator+=(const NcElement& rhs) {
  if (rhs.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && term_less(*a, *b))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || term_less(*b, *a)) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (!c.is_zero()) merged.push_back(Term{std::move(c), a->kdeg, std::move(a->word)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

NcElement& NcElement::operator-=(const NcElement& rhs) { return *this += -rhs; }

NcElement& NcElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

std::string NcElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff.sign() < 0;
    const Rational mag = negative ? -t.coeff : t.coeff;
    const std::string mono = format_monomial(t.kdeg, t.word);
    std::string body;
    if (mono.empty())
      body = mag.to_display_string();
    else if (mag.is_one())
      body = mono;
    else
      body = mag.to_display_string() + "*" + mono;
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

void TermAccumulator::add(int kdeg, const Word& word, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = map_.try_emplace(Key{kdeg, word}, c);
  if (!inserted) it->second += c;
}

void TermAccumulator::add(int kdeg, Word&& word, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = map_.try_emplace(Key{kdeg, std::move(word)}, c);
  if (!inserted) it->second += c;
}

void TermAccumulator::add(const NcElement& x, const Rational& c, int kshift) {
  if (c.is_zero()) return;
  for (const auto& t : x.terms()) add(t.kdeg + kshift, t.word, t.coeff * c);
}

NcElement TermAccumulator::finish() {
  std::vector<Term> terms;
  terms.reserve(map_.size());
  for (auto& [key, c] : map_)
    if (!c.is_zero()) terms.push_back(Term{std::move(c), key.kdeg, key.word});
  map_.clear();
  std::sort(terms.begin(), terms.end(), term_less);
  NcElement x;
  x.terms_ = std::move(terms);
  return x;
}

std::ostream& operator<<(std::ostream& os, const NcElement& x) { return os << x.to_string(); }

}  // namespace sugawara
