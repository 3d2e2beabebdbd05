#include "sugawara/w_algebra.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <unordered_map>

#include "sugawara/linalg.hpp"
#include "sugawara/nc_matrix.hpp"
#include "sugawara/segal_sugawara.hpp"

namespace sugawara {

Rational Partition::z() const {
  Rational z(1);
  std::map<int, int> mult;
  for (int p : parts) ++mult[p];
  for (const auto& [k, m] : mult) {
    for (int i = 0; i < m; ++i) z *= Rational(k);
    z *= factorial(m);
  }
  return z;
}

std::vector<Partition> partitions(int r) {
  if (r < 0) throw std::invalid_argument("partitions: r must be >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(r, r);
  return out;
}

namespace {

WPolynomial screening_coefficient(int i, int r) {
  WPolynomial total;
  for (const auto& lambda : partitions(r)) {
    WPolynomial prod = WPolynomial::constant(Rational(1));
    for (int part : lambda.parts) prod = prod * (WPolynomial::variable(i, -part) - WPolynomial::variable(i + 1, -part));
    total += prod * (Rational(1) / lambda.z());
  }
  return total;
}

}  // namespace

WPolynomial screening(int i, const WPolynomial& p) {
  if (i < 1) throw std::invalid_argument("screening: i must be >= 1");
  const int depth = std::max(p.depth(i), p.depth(i + 1));
  WPolynomial out;
  for (int r = 0; r + 1 <= depth; ++r) {
    const WPolynomial d = p.partial(BVar{i, -r - 1}) - p.partial(BVar{i + 1, -r - 1});
    if (d.is_zero()) continue;
    out += screening_coefficient(i, r) * d;
  }
  return out;
}

namespace {

std::vector<WTauOperator> miura_factors(int n) {
  std::vector<WTauOperator> a;
  for (int j = 1; j <= n; ++j) a.push_back(WTauOperator::symbol() + WTauOperator::constant(WPolynomial::variable(j, -1)));
  return a;
}

}  // namespace

WTauOperator miura_operator(int n) {
  if (n < 1) throw std::invalid_argument("miura_operator: n must be >= 1");
  const auto a = miura_factors(n);
  WTauOperator p = WTauOperator::one();
  for (int j = n; j >= 1; --j) p = p * a[static_cast<std::size_t>(j - 1)];
  return p;
}

std::vector<WPolynomial> miura_image_cdet(int n) {
  const WTauOperator p = miura_operator(n);
  std::vector<WPolynomial> b;
  for (int l = 1; l <= n; ++l) b.push_back(p.coefficient(n - l));
  return b;
}

CheckReport verify_w_membership(int n, int r_max) {
  if (n < 2) throw std::invalid_argument("verify_w_membership: n must be >= 2");
  Stopwatch clock;
  CheckReport report = CheckReport::named("w_membership", n);
  const auto b = miura_image_cdet(n);
  for (int l = 1; l <= n; ++l) {
    WPolynomial x = b[static_cast<std::size_t>(l - 1)];
    for (int r = 0; r <= r_max; ++r) {
      for (int i = 1; i < n; ++i) {
        ++report.checked;
        const WPolynomial q = screening(i, x);
        if (!q.is_zero())
          report.fail("Q_" + std::to_string(i) + "(T^" + std::to_string(r) + " B_" + std::to_string(l) + ")",
                      q.to_string());
      }
      x = x.translate();
    }
  }
  ++report.checked;
  if (screening(1, WPolynomial::variable(1, -1)).is_zero())
    report.fail("negative control Q_1(b_1[-1]) vanished", "0");
  report.wall_ms = clock.elapsed_ms();
  return report;
}

int weight(const Word& w) {
  int s = 0;
  for (const auto& g : w) s += g.is_e() ? -g.mode() : 0;
  return s;
}

namespace {

WPolynomial diagonal_to_w(const NcElement& x) {
  WPolynomial out;
  for (const auto& t : x.terms()) {
    if (t.kdeg != 0) throw std::invalid_argument("diagonal substitution: unexpected K");
    WPolynomial::Monomial m;
    for (const auto& g : t.word) {
      if (!g.is_e() || g.row() != g.col() || g.mode() >= 0)
        throw std::invalid_argument("diagonal substitution: unexpected generator " + g.to_string());
      m.push_back(BVar{g.row(), g.mode()});
    }
    out.add_term(std::move(m), t.coeff);
  }
  return out;
}

}  // namespace

RhoMap::RhoMap(int n) : n_(n), alg_(std::make_unique<Algebra>(n)) {
  const NcMatrix m = build_tau_matrix(n);
  const NcElement c = cdet(*alg_, m);
  s_ = segal_sugawara_cdet(*alg_);

  // Rows and columns in reversed order: sum sgn(s) a_{s(n)n} ... a_{s(1)1}.
  NcElement reversed;
  for_each_permutation(n, [&](std::span<const int> sigma, int sign) {
    NcElement prod = NcElement::scalar(Rational(sign));
    for (int col = n - 1; col >= 0; --col) prod = alg_->multiply(prod, m(sigma[static_cast<std::size_t>(col)], col));
    reversed += prod;
  });
  reversed_ok_ = reversed == c;

  NcElement identity_term = NcElement::one();
  for (int col = n - 1; col >= 0; --col) identity_term = alg_->multiply(identity_term, m(col, col));
  const TauPolynomial p = TauPolynomial::from_element(identity_term);
  for (int l = 1; l <= n; ++l) images_.push_back(diagonal_to_w(p.coefficient(n - l)));
}

const NcElement& RhoMap::translated_generator(int l, int r) const {
  auto key = std::make_pair(l, r);
  if (auto it = ts_cache_.find(key); it != ts_cache_.end()) return it->second;
  NcElement x = r == 0 ? s_[static_cast<std::size_t>(l - 1)] : alg_->translate(translated_generator(l, r - 1));
  return ts_cache_.emplace(key, std::move(x)).first->second;
}

const WPolynomial& RhoMap::translated_image(int l, int r) const {
  auto key = std::make_pair(l, r);
  if (auto it = tb_cache_.find(key); it != tb_cache_.end()) return it->second;
  WPolynomial x = r == 0 ? images_[static_cast<std::size_t>(l - 1)] : translated_image(l, r - 1).translate();
  return tb_cache_.emplace(key, std::move(x)).first->second;
}

WPolynomial RhoMap::decompose_homogeneous(const NcElement& x, int w) const {
  std::vector<Factor> types;
  for (int l = 1; l <= n_; ++l)
    for (int r = 0; l + r <= w; ++r) types.push_back({l, r});

  // Multisets of factor types with total weight w, as nondecreasing index lists.
  std::vector<std::vector<std::size_t>> monomials;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int remaining) {
    if (remaining == 0) {
      monomials.push_back(cur);
      return;
    }
    for (std::size_t t = from; t < types.size(); ++t) {
      const int wt = types[t].l + types[t].r;
      if (wt > remaining) continue;
      cur.push_back(t);
      rec(t, remaining - wt);
      cur.pop_back();
    }
  };
  rec(0, w);

  std::vector<NcElement> products;
  for (const auto& mono : monomials) {
    NcElement p = NcElement::one();
    for (std::size_t t : mono) p = alg_->multiply(p, translated_generator(types[t].l, types[t].r));
    products.push_back(std::move(p));
  }

  struct KeyHash {
    std::size_t operator()(const Word& w) const noexcept { return WordHash{}(w); }
  };
  std::unordered_map<Word, std::size_t, KeyHash> rows;
  auto row_of = [&](const Word& word) {
    auto [it, inserted] = rows.try_emplace(word, rows.size());
    return it->second;
  };
  for (const auto& p : products)
    for (const auto& t : p.terms()) row_of(t.word);
  for (const auto& t : x.terms()) row_of(t.word);

  RationalMatrix a(rows.size(), products.size());
  std::vector<Rational> rhs(rows.size());
  for (std::size_t c = 0; c < products.size(); ++c)
    for (const auto& t : products[c].terms()) a(rows.at(t.word), c) = t.coeff;
  for (const auto& t : x.terms()) rhs[rows.at(t.word)] = t.coeff;

  const auto sol = solve(std::move(a), std::move(rhs));
  if (!sol) throw std::invalid_argument("rho: element is not a polynomial in the T^r S_l");

  WPolynomial out;
  for (std::size_t c = 0; c < monomials.size(); ++c) {
    if ((*sol)[c].is_zero()) continue;
    WPolynomial img = WPolynomial::constant((*sol)[c]);
    for (std::size_t t : monomials[c]) img = img * translated_image(types[t].l, types[t].r);
    out += img;
  }
  return out;
}

WPolynomial RhoMap::operator()(const NcElement& x) const {
  if (x.max_kdeg() > 0) throw std::invalid_argument("rho: element has a K factor");
  if (!x.in_negative_part()) throw std::invalid_argument("rho: element is outside U(g_-)");
  std::map<int, std::vector<Term>> by_weight;
  for (const auto& t : x.terms()) by_weight[weight(t.word)].push_back(t);
  WPolynomial out;
  for (auto& [w, terms] : by_weight) {
    const NcElement part = NcElement::from_terms(std::move(terms));
    if (w == 0)
      out += WPolynomial::constant(part.coefficient(0, {}));
    else
      out += decompose_homogeneous(part, w);
  }
  return out;
}

WTauOperator RhoMap::on_tau_polynomial(const NcElement& x) const {
  const TauPolynomial p = TauPolynomial::from_element(x);
  std::vector<WPolynomial> coeffs;
  for (const auto& c : p.coefficients()) coeffs.push_back((*this)(c));
  return WTauOperator(std::move(coeffs));
}

std::vector<WTauOperator> trace_generating_image(int n, int k_max) {
  if (k_max < 0) throw std::invalid_argument("trace_generating_image: k_max must be >= 0");
  return trace_generating_coefficients(miura_factors(n), k_max);
}

std::vector<WTauOperator> trace_newton_transport(int n, int k_max) {
  if (k_max < 0) throw std::invalid_argument("trace_newton_transport: k_max must be >= 0");
  return newton_trace_coefficients(miura_factors(n), k_max);
}

CheckReport verify_trace_images(int n, int k_max) {
  Stopwatch clock;
  CheckReport report = CheckReport::named("trace_images", n);
  const auto generating = trace_generating_image(n, k_max);
  const auto newton = trace_newton_transport(n, k_max);
  const RhoMap rho(n);
  const auto traces = trace_powers(rho.algebra(), build_tau_matrix(n), k_max);
  for (int k = 0; k <= k_max; ++k) {
    const auto& g = generating[static_cast<std::size_t>(k)];
    ++report.checked;
    if (!(g == newton[static_cast<std::size_t>(k)]))
      report.fail("t^" + std::to_string(k) + ": generating function vs Newton transport",
                  to_string(g - newton[static_cast<std::size_t>(k)]));
    ++report.checked;
    const WTauOperator image = rho.on_tau_polynomial(traces[static_cast<std::size_t>(k)]);
    if (!(g == image))
      report.fail("t^" + std::to_string(k) + ": generating function vs rho(tr(tau+E[-1])^k)", to_string(g - image));
  }
  report.wall_ms = clock.elapsed_ms();
  return report;
}

CheckReport verify_miura_image(int n) {
  Stopwatch clock;
  CheckReport report = CheckReport::named("miura_image", n);
  const RhoMap rho(n);
  ++report.checked;
  if (!rho.reversed_expansion_matches()) report.fail("reversed-order expansion differs from cdet(tau+E[-1])", "");
  const auto b = miura_image_cdet(n);
  const auto s = segal_sugawara_cdet(rho.algebra());
  for (int l = 1; l <= n; ++l) {
    const auto& bl = b[static_cast<std::size_t>(l - 1)];
    const auto& sl = s[static_cast<std::size_t>(l - 1)];
    ++report.checked;
    const WPolynomial img = rho(sl);
    if (img != bl) report.fail("rho(S_" + std::to_string(l) + ") != B_" + std::to_string(l), (img - bl).to_string());
    ++report.checked;
    const WPolynomial timg = rho(rho.algebra().translate(sl));
    if (timg != bl.translate())
      report.fail("rho(T S_" + std::to_string(l) + ") != T B_" + std::to_string(l), (timg - bl.translate()).to_string());
  }
  report.wall_ms = clock.elapsed_ms();
  return report;
}

ChiSeries::ChiSeries(std::vector<Component> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.min_r > c.max_r) throw std::invalid_argument("chi series: min_r exceeds max_r");
    for (const auto& [r, v] : c.coeffs)
      if (r < c.min_r || r > c.max_r) throw std::invalid_argument("chi series: coefficient outside [min_r, max_r]");
  }
}

ChiSeries ChiSeries::simple_poles(const std::vector<Rational>& residues) {
  std::vector<Component> comps;
  for (const auto& c : residues) comps.push_back(Component{{{0, c}}, 0, 0});
  ChiSeries chi(std::move(comps));
  chi.exact_ = true;
  return chi;
}

LaurentSeries<Rational> ChiSeries::series(int i) const {
  const auto& c = components_.at(static_cast<std::size_t>(i - 1));
  std::map<int, Rational> m;
  for (const auto& [r, v] : c.coeffs) m[-r - 1] = v;
  return LaurentSeries<Rational>::from_map(std::move(m), exact_ ? std::nullopt : std::optional<int>(-c.min_r));
}

int ChiSeries::min_depth() const {
  int d = 0;
  bool first = true;
  for (const auto& c : components_) {
    d = first ? c.min_r : std::min(d, c.min_r);
    first = false;
  }
  return d;
}

DiffOperator<Rational> wakimoto_eigenvalue(EigenFamily family, const ChiSeries& chi, int k, int required_order) {
  using Op = DiffOperator<Rational>;
  const int n = chi.rank();
  if (n < 1) throw std::invalid_argument("wakimoto_eigenvalue: empty chi");
  std::vector<Op> factors;
  for (int i = 1; i <= n; ++i) factors.push_back(Op::symbol() + Op::constant(chi.series(i)));
  Op result;
  if (family == EigenFamily::Cdet) {
    result = Op::one();
    for (int i = n; i >= 1; --i) result = result * factors[static_cast<std::size_t>(i - 1)];
  } else {
    if (k < 0) throw std::invalid_argument("wakimoto_eigenvalue: k must be >= 0");
    result = trace_generating_coefficients(factors, k)[static_cast<std::size_t>(k)];
  }
  int deficiency = 0;
  for (const auto& c : result.coefficients())
    if (c.precision() && *c.precision() <= required_order)
      deficiency = std::max(deficiency, required_order + 1 - *c.precision());
  if (deficiency > 0) {
    const int need = chi.min_depth() - deficiency;
    throw TruncationError("chi truncation too shallow for z^" + std::to_string(required_order) +
                              "; use min_r <= " + std::to_string(need),
                          need);
  }
  return result;
}

DiffOperator<WPolynomial> formal_miura_operator(int n, int depth) {
  using Series = LaurentSeries<WPolynomial>;
  using Op = DiffOperator<WPolynomial>;
  if (depth < 1) throw std::invalid_argument("formal_miura_operator: depth must be >= 1");
  Op p = Op::one();
  for (int i = n; i >= 1; --i) {
    std::map<int, WPolynomial> m;
    for (int r = -1; r >= -depth; --r) m[-r - 1] = WPolynomial::variable(i, r);
    p = p * (Op::symbol() + Op::constant(Series::from_map(std::move(m), depth)));
  }
  return p;
}

CheckReport verify_formal_substitution(int n, int depth) {
  Stopwatch clock;
  CheckReport report = CheckReport::named("formal_substitution", n);
  const auto op = formal_miura_operator(n, depth);
  const auto b = miura_image_cdet(n);
  ++report.checked;
  if (!op.coefficient(n).agrees_with(LaurentSeries<WPolynomial>::constant(Rational(1))))
    report.fail("leading coefficient", "not 1");
  for (int l = 1; l <= n; ++l) {
    const auto s = op.coefficient(n - l);
    const int prec = s.precision().value_or(depth);
    if (prec < 1) report.fail("coefficient of d^" + std::to_string(n - l), "no known z-power; increase depth");
    WPolynomial tm = b[static_cast<std::size_t>(l - 1)];
    for (int m = 0; m < prec; ++m) {
      ++report.checked;
      const WPolynomial want = tm * (Rational(1) / factorial(m));
      if (s.coefficient(m) != want)
        report.fail("z^" + std::to_string(m) + " of the d^" + std::to_string(n - l) + " coefficient",
                    (s.coefficient(m) - want).to_string());
      tm = tm.translate();
    }
  }
  report.wall_ms = clock.elapsed_ms();
  return report;
}

namespace {

std::string parenthesize(const std::string& s, bool multi) { return multi ? "(" + s + ")" : s; }

template <class Coeff, class Fmt>
std::string format_operator(const std::vector<Coeff>& coeffs, const char* symbol, Fmt fmt) {
  std::string out;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const auto& c = coeffs[static_cast<std::size_t>(k)];
    auto [text, multi, zero, one] = fmt(c);
    if (zero) continue;
    std::string power = k == 0 ? "" : (k == 1 ? std::string(symbol) : std::string(symbol) + "^" + std::to_string(k));
    std::string term;
    if (power.empty())
      term = text;
    else if (one)
      term = power;
    else
      term = parenthesize(text, multi) + "*" + power;
    if (out.empty())
      out = term;
    else if (term.front() == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const WTauOperator& op) {
  return format_operator(op.coefficients(), "tau", [](const WPolynomial& p) {
    return std::make_tuple(p.to_string(), p.size() > 1 || (p.size() == 1 && p.terms().begin()->second.sign() < 0),
                           p.is_zero(), p == WPolynomial::constant(Rational(1)));
  });
}

std::string to_string(const LaurentSeries<Rational>& s) {
  std::string out;
  for (const auto& [e, c] : s.coefficients()) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    std::string body;
    if (e == 0)
      body = mag.to_display_string();
    else
      body = (mag.is_one() ? "" : mag.to_display_string() + "*") + "z^" + std::to_string(e);
    out += out.empty() ? (negative ? "-" : "") + body : (negative ? " - " : " + ") + body;
  }
  if (s.precision()) out += (out.empty() ? "" : " + ") + std::string("O(z^") + std::to_string(*s.precision()) + ")";
  return out.empty() ? "0" : out;
}

std::string to_string(const DiffOperator<Rational>& op) {
  return format_operator(op.coefficients(), "d_z", [](const LaurentSeries<Rational>& s) {
    const bool one = s.is_exact() && s.coefficients().size() == 1 && s.coefficients().begin()->first == 0 &&
                     s.coefficients().begin()->second.is_one();
    const bool zero = s.is_exact() && s.is_zero();
    const bool multi = s.coefficients().size() + (s.is_exact() ? 0 : 1) > 1 ||
                       (!s.coefficients().empty() && s.coefficients().begin()->second.sign() < 0);
    return std::make_tuple(to_string(s), multi, zero, one);
  });
}

}  // namespace sugawara
