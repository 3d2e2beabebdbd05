#include "sugawara/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace sugawara {

namespace {

using i128 = __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin = std::numeric_limits<std::int64_t>::min();

bool fits(i128 v) { return v >= kMin && v <= kMax; }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpq_class to_mpq_i128(i128 num, i128 den) {
  // mpz has no direct __int128 constructor; go through two 64-bit halves.
  auto make = [](i128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  };
  mpq_class q(make(num), make(den));
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  i128 n = num;
  i128 d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (fits(n) && fits(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  } else {
    assign_big(to_mpq_i128(n, d));
  }
}

Rational::Rational(const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  assign_big(std::move(v));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_), big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Rational::assign_big(mpq_class value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(value));
  }
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const { return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_); }

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  auto check_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!check_int(num, true) || !check_int(den, false))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string num_s(num);
  if (!num_s.empty() && num_s[0] == '+') num_s.erase(0, 1);
  mpz_class n(num_s, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
  return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_display_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_ || num_ == std::numeric_limits<std::int64_t>::min()) return Rational(mpq_class(-to_mpq()));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      const i128 s = static_cast<i128>(num_) + rhs.num_;
      if (fits(s)) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
    }
    const i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
    const i128 d = static_cast<i128>(den_) * rhs.den_;
    const i128 g = gcd128(n, d);
    const i128 rn = g > 1 ? n / g : n;
    const i128 rd = g > 1 ? d / g : d;
    if (fits(rn) && fits(rd)) {
      num_ = static_cast<std::int64_t>(rn);
      den_ = static_cast<std::int64_t>(rd);
      return *this;
    }
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      const i128 p = static_cast<i128>(num_) * rhs.num_;
      if (fits(p)) {
        num_ = static_cast<std::int64_t>(p);
        return *this;
      }
    }
    // Cross-reduce before multiplying to keep values small.
    const i128 g1 = gcd128(num_, rhs.den_);
    const i128 g2 = gcd128(rhs.num_, den_);
    const i128 n = (static_cast<i128>(num_) / (g1 ? g1 : 1)) * (static_cast<i128>(rhs.num_) / (g2 ? g2 : 1));
    const i128 d = (static_cast<i128>(den_) / (g2 ? g2 : 1)) * (static_cast<i128>(rhs.den_) / (g1 ? g1 : 1));
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero rational");
  if (!rhs.big_) return *this *= Rational(rhs.den_, rhs.num_);
  assign_big(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const i128 l = static_cast<i128>(a.num_) * b.den_;
  const i128 r = static_cast<i128>(b.num_) * a.den_;
  return l <=> r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_display_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational factorial(int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i) f *= Rational(i);
  return f;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational b(1);
  for (int i = 1; i <= k; ++i) b = b * Rational(n - k + i) / Rational(i);
  return b;
}

}  // namespace sugawara
