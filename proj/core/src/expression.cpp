#include "sugawara/expression.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace sugawara {

namespace {

std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 3) == "\xE2\x88\x92") {  // U+2212 minus
      out += '-';
      i += 2;
    } else if (text.substr(i, 2) == "\xCF\x84") {  // U+03C4 tau
      out += "tau";
      i += 1;
    } else {
      out += text[i];
    }
  }
  return out;
}

class Parser {
 public:
  Parser(const Algebra& alg, std::string text) : alg_(alg), s_(std::move(text)) {}

  NcElement parse() {
    NcElement x = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip();
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    const std::size_t end = pos_ + w.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  long long integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    if (pos_ - digits > 9) fail("integer too large");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  int index() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an index");
    if (pos_ - start > 3) fail("index too large");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  NcElement expr() {
    NcElement x = term();
    for (;;) {
      if (accept('+'))
        x += term();
      else if (accept('-'))
        x -= term();
      else
        return x;
    }
  }

  NcElement term() {
    NcElement x = power();
    while (accept('*')) x = alg_.multiply(x, power());
    return x;
  }

  NcElement power() {
    NcElement x = unary();
    if (accept('^')) {
      const long long k = integer();
      if (k < 0 || k > 64) fail("exponent out of range");
      x = alg_.power(x, static_cast<int>(k));
    }
    return x;
  }

  NcElement unary() {
    if (accept('-')) return -unary();
    return atom();
  }

  Generator e_generator() {
    // After "e_".
    int i = 0, j = 0;
    if (accept('{')) {
      skip();
      const std::size_t start = pos_;
      i = index();
      if (accept(',')) {
        j = index();
      } else {
        // Two single digits, e.g. {12}.
        const std::string digits = s_.substr(start, pos_ - start);
        if (digits.size() != 2) {
          pos_ = start;
          fail("ambiguous index pair; write e_{i,j}");
        }
        i = digits[0] - '0';
        j = digits[1] - '0';
      }
      expect('}');
    } else {
      skip();
      if (pos_ + 1 >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
          !std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))
        fail("expected two index digits");
      i = s_[pos_] - '0';
      j = s_[pos_ + 1] - '0';
      pos_ += 2;
    }
    expect('[');
    const long long r = integer();
    expect(']');
    if (r < -100000 || r > 100000) fail("mode out of range");
    if (i < 1 || j < 1 || i > alg_.rank() || j > alg_.rank()) fail("generator index exceeds the rank");
    return Generator::e(i, j, static_cast<int>(r));
  }

  NcElement trace_macro() {
    // After "trE".
    expect('[');
    std::vector<int> modes;
    do {
      const long long r = integer();
      if (r < -100000 || r > 100000) fail("mode out of range");
      modes.push_back(static_cast<int>(r));
    } while (accept(','));
    expect(']');
    const int n = alg_.rank();
    const std::size_t k = modes.size();
    std::vector<int> idx(k, 1);
    TermAccumulator acc;
    for (;;) {
      Word w;
      for (std::size_t p = 0; p < k; ++p) w.push_back(Generator::e(idx[p], idx[(p + 1) % k], modes[p]));
      acc.add(alg_.normal_order(w), Rational(1));
      std::size_t p = 0;
      while (p < k && ++idx[p] > n) idx[p++] = 1;
      if (p == k) break;
    }
    return acc.finish();
  }

  NcElement atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (accept('(')) {
      NcElement x = expr();
      expect(')');
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      try {
        return NcElement::scalar(Rational::parse(s_.substr(start, pos_ - start)));
      } catch (const std::exception& ex) {
        pos_ = start;
        fail(ex.what());
      }
    }
    if (accept_word("tau")) return NcElement::generator(Generator::tau());
    if (accept_word("K")) return NcElement::generator(Generator::central());
    if (s_.compare(pos_, 3, "trE") == 0) {
      pos_ += 3;
      return trace_macro();
    }
    if (s_.compare(pos_, 2, "e_") == 0) {
      pos_ += 2;
      return NcElement::generator(e_generator());
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const Algebra& alg_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

NcElement parse_expression(const Algebra& alg, std::string_view text) { return Parser(alg, normalize(text)).parse(); }

}  // namespace sugawara
