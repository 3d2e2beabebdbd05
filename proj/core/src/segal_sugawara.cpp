#include "sugawara/segal_sugawara.hpp"

#include <bit>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>

#include "sugawara/linalg.hpp"
#include "sugawara/parallel.hpp"

namespace sugawara {

TauPolynomial::TauPolynomial(std::vector<NcElement> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TauPolynomial TauPolynomial::from_element(const NcElement& x) {
  std::vector<std::vector<Term>> parts;
  for (const auto& t : x.terms()) {
    std::size_t k = t.word.size();
    while (k > 0 && t.word[k - 1].is_tau()) --k;
    for (std::size_t p = 0; p < k; ++p)
      if (t.word[p].is_tau()) throw std::invalid_argument("TauPolynomial: tau is not rightmost in " + x.to_string());
    const std::size_t power = t.word.size() - k;
    if (parts.size() <= power) parts.resize(power + 1);
    parts[power].push_back(Term{t.coeff, t.kdeg, Word(t.word.begin(), t.word.begin() + static_cast<std::ptrdiff_t>(k))});
  }
  std::vector<NcElement> coeffs;
  for (auto& p : parts) coeffs.push_back(NcElement::from_terms(std::move(p)));
  return TauPolynomial(std::move(coeffs));
}

const NcElement& TauPolynomial::coefficient(int k) const {
  static const NcElement kZero;
  if (k < 0 || k > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

NcElement TauPolynomial::to_element(const Algebra& alg) const {
  NcElement out;
  NcElement tau_power = NcElement::one();
  const NcElement tau = NcElement::generator(Generator::tau());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out += alg.multiply(coeffs_[k], tau_power);
    tau_power = alg.multiply(tau_power, tau);
  }
  return out;
}

VacuumVector::VacuumVector(NcElement x) : x_(std::move(x)) {
  for (const auto& t : x_.terms())
    for (const auto& g : t.word)
      if (g.is_e() && g.mode() >= 0)
        throw std::invalid_argument("VacuumVector: " + g.to_string() + " annihilates the vacuum");
}

std::vector<NcElement> segal_sugawara_cdet(const Algebra& alg) {
  const int n = alg.rank();
  const TauPolynomial p = TauPolynomial::from_element(cdet(alg, build_tau_matrix(n)));
  std::vector<NcElement> s;
  for (int l = 1; l <= n; ++l) s.push_back(p.coefficient(n - l));
  return s;
}

std::vector<NcElement> segal_sugawara_trace(const Algebra& alg, int k) {
  if (k < 0) throw std::invalid_argument("segal_sugawara_trace: k must be >= 0");
  const TauPolynomial p = TauPolynomial::from_element(trace_power(alg, build_tau_matrix(alg.rank()), k));
  std::vector<NcElement> t;
  for (int l = 0; l <= k; ++l) t.push_back(p.coefficient(k - l));
  return t;
}

VacuumVector act_on_vacuum(const Algebra& alg, Generator x, const VacuumVector& v) {
  if (!x.is_e() || x.mode() < 0)
    throw std::invalid_argument("act_on_vacuum: expected e_ij[r] with r >= 0, got " + x.to_string());
  return VacuumVector(vacuum_projection(alg.multiply(NcElement::generator(x), v.element())));
}

namespace {

NcElement times_k_plus(const NcElement& x, int n) { return x.times_k(1) + x * Rational(n); }

Algebra& algebra_for(std::vector<std::unique_ptr<Algebra>>& algebras, std::size_t worker, int n) {
  auto& slot = algebras[worker];
  if (!slot) slot = std::make_unique<Algebra>(n);
  return *slot;
}

}  // namespace

NcElement centrality_rhs(const Algebra& alg) {
  const int n = alg.rank();
  const NcMatrix m = build_tau_matrix(n);
  NcElement inner = cdet(alg, m.principal_minor(n - 1)) * Rational(n - 1);
  for (int i = 0; i + 1 < n; ++i) inner -= cdet(alg, m.principal_minor(i));
  return times_k_plus(inner, n) * Rational(1, n);
}

CheckReport verify_centrality(int n, CentralityOptions options) {
  Stopwatch clock;
  CheckReport report = CheckReport::named("centrality", n);
  Algebra main(n);
  const VacuumVector c(cdet(main, build_tau_matrix(n)));
  const NcElement rhs = centrality_rhs(main);

  struct Task {
    Generator x;
    int kind;  // 0: annihilation, 1: closed form, 2: divisibility only
  };
  std::vector<Task> tasks;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) tasks.push_back({Generator::e(i, j, 0), 0});
  tasks.push_back({Generator::e(n, n, 1), 1});
  if (options.exhaustive_first_mode && n <= 2)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != n || j != n) tasks.push_back({Generator::e(i, j, 1), 2});

  std::vector<std::unique_ptr<Algebra>> algebras(worker_count());
  std::vector<std::string> residuals(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t t, std::size_t w) {
    Algebra& alg = algebra_for(algebras, w, n);
    const NcElement lhs = act_on_vacuum(alg, tasks[t].x, c).element();
    NcElement bad;
    if (tasks[t].kind == 0)
      bad = lhs;
    else if (tasks[t].kind == 1)
      bad = lhs - rhs;
    if (bad.is_zero()) bad = lhs.substitute_k(Rational(-n));
    if (!bad.is_zero()) residuals[t] = bad.to_string();
  });
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    ++report.checked;
    if (residuals[t].empty()) continue;
    const std::string what = tasks[t].kind == 0   ? " . cdet(tau+E[-1]) != 0"
                             : tasks[t].kind == 1 ? " . cdet(tau+E[-1]) differs from the closed form"
                                                  : " . cdet(tau+E[-1]) is not divisible by K+n";
    report.fail(tasks[t].x.to_string() + what, residuals[t]);
  }
  report.wall_ms = clock.elapsed_ms();
  return report;
}

CheckReport verify_commutativity(int n, int r_max) {
  if (r_max < 0) throw std::invalid_argument("verify_commutativity: r_max must be >= 0");
  Stopwatch clock;
  CheckReport report = CheckReport::named("commutativity", n);
  Algebra main(n);
  const auto s = segal_sugawara_cdet(main);
  std::vector<NcElement> t;
  for (int l = 1; l <= n; ++l) t.push_back(segal_sugawara_trace(main, l).back());
  // ts[r][m] = T^r S_m.
  std::vector<std::vector<NcElement>> ts{s};
  for (int r = 1; r <= r_max; ++r) {
    std::vector<NcElement> next;
    for (const auto& x : ts.back()) next.push_back(main.translate(x));
    ts.push_back(std::move(next));
  }

  struct Task {
    std::string label;
    const NcElement* a;
    const NcElement* b;
  };
  std::vector<Task> tasks;
  auto name = [](const char* sym, int l) { return std::string(sym) + "_" + std::to_string(l); };
  for (int l = 1; l <= n; ++l)
    for (int m = l + 1; m <= n; ++m)
      tasks.push_back({"[" + name("S", l) + ", " + name("S", m) + "]", &s[l - 1], &s[m - 1]});
  for (int l = 1; l <= n; ++l)
    for (int m = l + 1; m <= n; ++m)
      tasks.push_back({"[T_" + std::to_string(l) + std::to_string(l) + ", T_" + std::to_string(m) + std::to_string(m) + "]",
                       &t[l - 1], &t[m - 1]});
  for (int l = 1; l <= n; ++l)
    for (int m = 1; m <= n; ++m)
      tasks.push_back({"[" + name("S", l) + ", T_" + std::to_string(m) + std::to_string(m) + "]", &s[l - 1], &t[m - 1]});
  for (int r = 1; r <= r_max; ++r)
    for (int l = 1; l <= n; ++l)
      for (int m = 1; m <= n; ++m)
        tasks.push_back({"[" + name("S", l) + ", T^" + std::to_string(r) + " " + name("S", m) + "]", &s[l - 1],
                         &ts[static_cast<std::size_t>(r)][m - 1]});

  std::vector<std::unique_ptr<Algebra>> algebras(worker_count());
  std::vector<std::string> residuals(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t k, std::size_t w) {
    Algebra& alg = algebra_for(algebras, w, n);
    const NcElement c = alg.commutator(*tasks[k].a, *tasks[k].b);
    if (!c.is_zero()) residuals[k] = c.to_string();
  });
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    ++report.checked;
    if (!residuals[k].empty()) report.fail(tasks[k].label, residuals[k]);
  }
  report.wall_ms = clock.elapsed_ms();
  return report;
}

NcElement field_plus_coefficient(const Algebra& alg, const NcElement& s, int r) {
  if (r >= 0) throw std::invalid_argument("field_plus_coefficient: r must be negative");
  const int d = -r - 1;
  return alg.translate(s, d) * (Rational(1) / factorial(d));
}

namespace {

CommutativeElement commutative_det(const std::vector<std::vector<CommutativeElement>>& a) {
  const int n = static_cast<int>(a.size());
  CommutativeElement total;
  for_each_permutation(n, [&](std::span<const int> sigma, int sign) {
    CommutativeElement prod = CommutativeElement::scalar(Rational(sign));
    for (int c = 0; c < n; ++c) prod = prod * a[static_cast<std::size_t>(sigma[static_cast<std::size_t>(c)])][static_cast<std::size_t>(c)];
    total += prod;
  });
  return total;
}

CommutativeElement var(int i, int j) { return CommutativeElement::variable(Generator::e(i, j, -1)); }

}  // namespace

CommutativeElement char_poly_coefficient(int n, int l) {
  if (l < 0 || l > n) throw std::invalid_argument("char_poly_coefficient: l out of range");
  CommutativeElement total;
  // Sum of the l x l principal minors of E[-1].
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != l) continue;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1U << i)) idx.push_back(i + 1);
    std::vector<std::vector<CommutativeElement>> m(idx.size(), std::vector<CommutativeElement>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) m[a][b] = var(idx[a], idx[b]);
    total += commutative_det(m);
  }
  return total;
}

CommutativeElement power_sum(int n, int l) {
  if (l < 0) throw std::invalid_argument("power_sum: l must be >= 0");
  if (l == 0) return CommutativeElement::scalar(Rational(n));
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<CommutativeElement>> e(un, std::vector<CommutativeElement>(un));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) e[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = var(i, j);
  auto p = e;
  for (int k = 2; k <= l; ++k) {
    std::vector<std::vector<CommutativeElement>> q(un, std::vector<CommutativeElement>(un));
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j)
        for (std::size_t m = 0; m < un; ++m) q[i][j] += p[i][m] * e[m][j];
    p = std::move(q);
  }
  CommutativeElement tr;
  for (std::size_t i = 0; i < un; ++i) tr += p[i][i];
  return tr;
}

namespace {

bool independent_at_random_points(const std::vector<CommutativeElement>& polys, int n, std::mt19937_64& rng,
                                  int attempts) {
  std::vector<Generator> vars;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) vars.push_back(Generator::e(i, j, -1));
  std::vector<std::vector<CommutativeElement>> grad(polys.size());
  for (std::size_t p = 0; p < polys.size(); ++p)
    for (const auto& v : vars) grad[p].push_back(polys[p].derivative(v));
  std::uniform_int_distribution<int> dist(-97, 97);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::map<Generator, Rational> point;
    for (const auto& v : vars) point[v] = Rational(dist(rng), 1 + (dist(rng) % 7 + 7) % 7);
    RationalMatrix jac(polys.size(), vars.size());
    for (std::size_t p = 0; p < polys.size(); ++p)
      for (std::size_t v = 0; v < vars.size(); ++v) jac(p, v) = grad[p][v].evaluate(point);
    if (rank(jac) == polys.size()) return true;
  }
  return false;
}

}  // namespace

CheckReport verify_complete_set(int n, std::uint64_t seed) {
  Stopwatch clock;
  CheckReport report = CheckReport::named("complete_set", n);
  Algebra alg(n);
  const auto s = segal_sugawara_cdet(alg);
  std::vector<CommutativeElement> s_symbols, t_symbols;
  for (int l = 1; l <= n; ++l) {
    const NcElement& sl = s[static_cast<std::size_t>(l - 1)];
    ++report.checked;
    if (sl.degree() > l) report.fail("deg S_" + std::to_string(l) + " > " + std::to_string(l), sl.to_string());
    CommutativeElement sym = alg.symbol(sl, l);
    const CommutativeElement want = char_poly_coefficient(n, l);
    ++report.checked;
    if (sym != want) report.fail("symbol(S_" + std::to_string(l) + ")", (sym - want).to_string());
    s_symbols.push_back(std::move(sym));

    const NcElement tl = segal_sugawara_trace(alg, l).back();
    ++report.checked;
    if (tl.degree() > l) report.fail("deg T_" + std::to_string(l) + std::to_string(l) + " > " + std::to_string(l), tl.to_string());
    CommutativeElement tsym = alg.symbol(tl, l);
    const CommutativeElement twant = power_sum(n, l);
    ++report.checked;
    if (tsym != twant) report.fail("symbol(T_" + std::to_string(l) + std::to_string(l) + ")", (tsym - twant).to_string());
    t_symbols.push_back(std::move(tsym));
  }
  std::mt19937_64 rng(seed);
  ++report.checked;
  if (!independent_at_random_points(s_symbols, n, rng, 8)) report.fail("Jacobian rank of symbols of S_1..S_n", "rank deficient");
  ++report.checked;
  if (!independent_at_random_points(t_symbols, n, rng, 8))
    report.fail("Jacobian rank of symbols of T_11..T_nn", "rank deficient");
  report.wall_ms = clock.elapsed_ms();
  return report;
}

}  // namespace sugawara
