#include "sugawara/commutative.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

namespace sugawara {

CommutativeElement CommutativeElement::scalar(const Rational& c) {
  CommutativeElement x;
  x.add_term({}, c);
  return x;
}

CommutativeElement CommutativeElement::variable(Generator g) {
  CommutativeElement x;
  x.add_term({g}, Rational(1));
  return x;
}

void CommutativeElement::add_term(Monomial monomial, const Rational& c) {
  if (c.is_zero()) return;
  std::sort(monomial.begin(), monomial.end());
  auto [it, inserted] = terms_.try_emplace(std::move(monomial), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<Generator> CommutativeElement::variables() const {
  std::set<Generator> vars;
  for (const auto& [m, c] : terms_) vars.insert(m.begin(), m.end());
  return {vars.begin(), vars.end()};
}

CommutativeElement& CommutativeElement::operator+=(const CommutativeElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

CommutativeElement& CommutativeElement::operator-=(const CommutativeElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

CommutativeElement operator*(const CommutativeElement& a, const CommutativeElement& b) {
  CommutativeElement out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      CommutativeElement::Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

CommutativeElement operator*(CommutativeElement a, const Rational& c) {
  if (c.is_zero()) return {};
  for (auto& [m, v] : a.terms_) v *= c;
  return a;
}

CommutativeElement CommutativeElement::derivative(Generator var) const {
  CommutativeElement out;
  for (const auto& [m, c] : terms_) {
    const auto count = std::count(m.begin(), m.end(), var);
    if (count == 0) continue;
    Monomial rest = m;
    rest.erase(std::find(rest.begin(), rest.end(), var));
    out.add_term(std::move(rest), c * Rational(count));
  }
  return out;
}

Rational CommutativeElement::evaluate(const std::map<Generator, Rational>& point) const {
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& g : m) {
      auto it = point.find(g);
      if (it == point.end()) throw std::invalid_argument("evaluate: no value for " + g.to_string());
      v *= it->second;
    }
    total += v;
  }
  return total;
}

std::string CommutativeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    std::string mono;
    for (const auto& g : m) mono += (mono.empty() ? "" : "*") + g.to_string();
    std::string body = mono.empty() ? mag.to_display_string() : (mag.is_one() ? mono : mag.to_display_string() + "*" + mono);
    out += first ? (negative ? "-" : "") + body : (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const CommutativeElement& x) { return os << x.to_string(); }

}  // namespace sugawara
