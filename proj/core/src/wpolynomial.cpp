#include "sugawara/wpolynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sugawara {

std::string BVar::to_string() const {
  return "b_" + std::to_string(index) + "[" + std::to_string(mode) + "]";
}

WPolynomial WPolynomial::constant(const Rational& c) {
  WPolynomial p;
  p.add_term({}, c);
  return p;
}

WPolynomial WPolynomial::variable(int index, int mode) {
  if (index < 1 || mode >= 0) throw std::invalid_argument("b_i[r] needs i >= 1 and r < 0");
  WPolynomial p;
  p.add_term({BVar{index, mode}}, Rational(1));
  return p;
}

void WPolynomial::add_term(Monomial m, const Rational& c) {
  if (c.is_zero()) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int WPolynomial::depth(int index) const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& v : m)
      if (v.index == index) d = std::max(d, -v.mode);
  return d;
}

int WPolynomial::max_index() const {
  int i = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& v : m) i = std::max(i, v.index);
  return i;
}

WPolynomial WPolynomial::translate() const {
  WPolynomial out;
  for (const auto& [m, c] : terms_)
    for (std::size_t p = 0; p < m.size(); ++p) {
      Monomial next = m;
      next[p].mode -= 1;
      out.add_term(std::move(next), c * Rational(-m[p].mode));
    }
  return out;
}

WPolynomial WPolynomial::partial(BVar v) const {
  WPolynomial out;
  for (const auto& [m, c] : terms_) {
    const auto count = std::count(m.begin(), m.end(), v);
    if (count == 0) continue;
    Monomial rest = m;
    rest.erase(std::find(rest.begin(), rest.end(), v));
    out.add_term(std::move(rest), c * Rational(count));
  }
  return out;
}

WPolynomial WPolynomial::operator-() const {
  WPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

WPolynomial& WPolynomial::operator+=(const WPolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

WPolynomial& WPolynomial::operator-=(const WPolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

WPolynomial& WPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

WPolynomial operator*(const WPolynomial& a, const WPolynomial& b) {
  WPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      WPolynomial::Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

std::string WPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    std::string mono;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      mono += (mono.empty() ? "" : "*") + m[i].to_string();
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    const std::string body =
        mono.empty() ? mag.to_display_string() : (mag.is_one() ? mono : mag.to_display_string() + "*" + mono);
    out += first ? (negative ? "-" : "") + body : (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const WPolynomial& p) { return os << p.to_string(); }

}  // namespace sugawara
