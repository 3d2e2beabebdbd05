#include "sugawara/gaudin.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sugawara/nc_matrix.hpp"
#include "sugawara/parallel.hpp"

namespace sugawara {

std::size_t SiteConfig::dimension() const {
  std::size_t d = 1;
  for (int a = 0; a < sites(); ++a) {
    d *= static_cast<std::size_t>(n);
    if (d > (std::size_t{1} << 40)) break;
  }
  return d;
}

void SiteConfig::validate() const {
  if (n < 1) throw std::invalid_argument("gaudin: n must be >= 1");
  if (points.empty()) throw std::invalid_argument("gaudin: at least one site is required");
  std::set<Rational> seen;
  for (const auto& z : points)
    if (!seen.insert(z).second) throw std::invalid_argument("gaudin: duplicate site point " + z.to_display_string());
  if (dimension() > dimension_cap)
    throw std::invalid_argument("gaudin: n^m = " + std::to_string(dimension()) + " exceeds the cap " +
                                std::to_string(dimension_cap));
}

RationalMatrix site_operator(const SiteConfig& cfg, int site, int i, int j) {
  if (site < 1 || site > cfg.sites() || i < 1 || j < 1 || i > cfg.n || j > cfg.n)
    throw std::out_of_range("site_operator: index out of range");
  const auto n = static_cast<std::size_t>(cfg.n);
  RationalMatrix e(n, n);
  e(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = Rational(1);
  RationalMatrix out = RationalMatrix::identity(1);
  for (int a = 1; a <= cfg.sites(); ++a) out = kronecker(out, a == site ? e : RationalMatrix::identity(n));
  return out;
}

RationalMatrix global_operator(const SiteConfig& cfg, int i, int j) {
  RationalMatrix g(cfg.dimension(), cfg.dimension());
  for (int a = 1; a <= cfg.sites(); ++a) g += site_operator(cfg, a, i, j);
  return g;
}

namespace {

using ScalarPolynomial = std::vector<Rational>;

ScalarPolynomial scalar_mul(const ScalarPolynomial& a, const ScalarPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  ScalarPolynomial c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

ScalarPolynomial scalar_derivative(const ScalarPolynomial& a) {
  ScalarPolynomial d;
  for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * Rational(static_cast<std::int64_t>(k)));
  return d;
}

struct Context {
  std::size_t dim;
  ScalarPolynomial p;       // prod (z - z_a)
  ScalarPolynomial p_diff;  // P'
  std::vector<ScalarPolynomial> p_powers;

  const ScalarPolynomial& p_power(int d) {
    while (static_cast<int>(p_powers.size()) <= d) p_powers.push_back(scalar_mul(p_powers.back(), p));
    return p_powers[static_cast<std::size_t>(d)];
  }
};

void trim(MatrixPolynomial& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

MatrixPolynomial add(MatrixPolynomial a, const MatrixPolynomial& b) {
  if (b.size() > a.size()) a.resize(b.size(), b.front() * Rational(0));
  for (std::size_t k = 0; k < b.size(); ++k) a[k] += b[k];
  trim(a);
  return a;
}

MatrixPolynomial mul(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  const RationalMatrix zero = a.front() * Rational(0);
  MatrixPolynomial c(a.size() + b.size() - 1, zero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

MatrixPolynomial scale(const MatrixPolynomial& a, const ScalarPolynomial& s) {
  if (a.empty() || s.empty()) return {};
  const RationalMatrix zero = a.front() * Rational(0);
  MatrixPolynomial c(a.size() + s.size() - 1, zero);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (!s[j].is_zero()) c[i + j] += a[i] * s[j];
  trim(c);
  return c;
}

MatrixPolynomial matrix_derivative(const MatrixPolynomial& a) {
  MatrixPolynomial d;
  for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * Rational(static_cast<std::int64_t>(k)));
  trim(d);
  return d;
}

OperatorRational raise(Context& ctx, const OperatorRational& x, int d) {
  if (d == x.denominator_power) return x;
  return {scale(x.numerator, ctx.p_power(d - x.denominator_power)), d};
}

OperatorRational add(Context& ctx, const OperatorRational& a, const OperatorRational& b) {
  if (a.numerator.empty()) return b;
  if (b.numerator.empty()) return a;
  const int d = std::max(a.denominator_power, b.denominator_power);
  return {add(raise(ctx, a, d).numerator, raise(ctx, b, d).numerator), d};
}

OperatorRational mul(const OperatorRational& a, const OperatorRational& b) {
  return {mul(a.numerator, b.numerator), a.denominator_power + b.denominator_power};
}

// (N / P^d)' = (N' P - d N P') / P^{d+1}.
OperatorRational derivative(Context& ctx, const OperatorRational& x) {
  if (x.numerator.empty()) return x;
  MatrixPolynomial num = scale(matrix_derivative(x.numerator), ctx.p);
  if (x.denominator_power != 0)
    num = add(num, scale(x.numerator, scalar_mul(ctx.p_diff, {Rational(-x.denominator_power)})));
  return {num, x.denominator_power + 1};
}

// sum_k c_k d_z^k, coefficients on the left.
using DiffOp = std::vector<OperatorRational>;

DiffOp add(Context& ctx, DiffOp a, const DiffOp& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) a[k] = add(ctx, a[k], b[k]);
  return a;
}

DiffOp mul(Context& ctx, const DiffOp& a, const DiffOp& b) {
  if (a.empty() || b.empty()) return {};
  DiffOp out(a.size() + b.size() - 1);
  for (std::size_t j = 0; j < b.size(); ++j) {
    std::vector<OperatorRational> derivs{b[j]};
    for (std::size_t i = 0; i < a.size(); ++i) {
      while (derivs.size() <= i) derivs.push_back(derivative(ctx, derivs.back()));
      if (a[i].numerator.empty()) continue;
      for (std::size_t t = 0; t <= i; ++t) {
        if (derivs[t].numerator.empty()) continue;
        OperatorRational term = mul(a[i], derivs[t]);
        const Rational c = binomial(static_cast<int>(i), static_cast<int>(t));
        for (auto& m : term.numerator) m *= c;
        out[i - t + j] = add(ctx, out[i - t + j], term);
      }
    }
  }
  return out;
}

Context make_context(const SiteConfig& cfg) {
  Context ctx;
  ctx.dim = cfg.dimension();
  ctx.p = {Rational(1)};
  for (const auto& z : cfg.points) ctx.p = scalar_mul(ctx.p, {-z, Rational(1)});
  ctx.p_diff = scalar_derivative(ctx.p);
  ctx.p_powers = {ScalarPolynomial{Rational(1)}};
  return ctx;
}

}  // namespace

std::vector<std::vector<OperatorRational>> lax_matrix(const SiteConfig& cfg, bool transposed) {
  cfg.validate();
  const int n = cfg.n;
  const int m = cfg.sites();
  std::vector<std::vector<OperatorRational>> lax(static_cast<std::size_t>(n),
                                                 std::vector<OperatorRational>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      MatrixPolynomial num;
      for (int a = 1; a <= m; ++a) {
        ScalarPolynomial others{Rational(1)};
        for (int b = 1; b <= m; ++b)
          if (b != a) others = scalar_mul(others, {-cfg.points[static_cast<std::size_t>(b - 1)], Rational(1)});
        const RationalMatrix x = transposed ? site_operator(cfg, a, j, i) : site_operator(cfg, a, i, j);
        num = num.empty() ? scale({x}, others) : add(num, scale({x}, others));
      }
      lax[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = {num, 1};
    }
  return lax;
}

std::vector<GaudinOperator> gaudin_operators(const SiteConfig& cfg, bool transposed) {
  cfg.validate();
  const int n = cfg.n;
  Context ctx = make_context(cfg);
  const auto lax = lax_matrix(cfg, transposed);
  const RationalMatrix id = RationalMatrix::identity(ctx.dim);

  // Entry (i, j) of d_z + L(z) as a differential operator.
  auto entry = [&](int i, int j) {
    DiffOp op{lax[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]};
    if (i == j) op.push_back(OperatorRational{{id}, 0});
    return op;
  };

  DiffOp total;
  for_each_permutation(n, [&](std::span<const int> sigma, int sign) {
    DiffOp prod{OperatorRational{{id * Rational(sign)}, 0}};
    for (int c = 0; c < n; ++c) prod = mul(ctx, prod, entry(sigma[static_cast<std::size_t>(c)], c));
    total = add(ctx, total, prod);
  });

  std::vector<GaudinOperator> ops;
  for (std::size_t k = 0; k < total.size(); ++k) {
    const OperatorRational& c = total[k];
    if (c.numerator.empty()) continue;
    if (c.denominator_power > n) throw std::logic_error("gaudin: denominator exceeds P^n");
    const MatrixPolynomial cleared = scale(c.numerator, ctx.p_power(n - c.denominator_power));
    for (std::size_t p = 0; p < cleared.size(); ++p)
      if (!cleared[p].is_zero()) ops.push_back({static_cast<int>(k), static_cast<int>(p), cleared[p]});
  }
  return ops;
}

GaudinReport verify_gaudin_commutativity(const SiteConfig& cfg, bool transposed) {
  Stopwatch clock;
  GaudinReport out;
  out.transposed = transposed;
  out.report = CheckReport::named(transposed ? "gaudin_transposed" : "gaudin_untransposed", cfg.n);
  const auto ops = gaudin_operators(cfg, transposed);
  out.operator_count = ops.size();

  std::vector<RationalMatrix> globals;
  std::vector<std::string> global_names;
  for (int i = 1; i <= cfg.n; ++i)
    for (int j = 1; j <= cfg.n; ++j) {
      globals.push_back(global_operator(cfg, i, j));
      global_names.push_back("e_{" + std::to_string(i) + std::to_string(j) + "}");
    }

  auto label = [&](std::size_t k) {
    return "[d^" + std::to_string(ops[k].d_power) + " z^" + std::to_string(ops[k].z_power) + "]";
  };
  struct Pair {
    std::size_t a;
    std::size_t b;
    bool global;
  };
  std::vector<Pair> pairs;
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b) pairs.push_back({a, b, false});
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t g = 0; g < globals.size(); ++g) pairs.push_back({a, g, true});

  std::vector<Rational> norms(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k, std::size_t) {
    const auto& p = pairs[k];
    const RationalMatrix c = commutator(ops[p.a].matrix, p.global ? globals[p.b] : ops[p.b].matrix);
    norms[k] = c.frobenius_squared();
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    ++out.report.checked;
    if (norms[k].is_zero()) continue;
    const auto& p = pairs[k];
    const std::string name = "[" + label(p.a) + ", " + (p.global ? "global " + global_names[p.b] : label(p.b)) + "]";
    out.report.fail(name, "squared Frobenius norm " + norms[k].to_display_string());
    if (norms[k] > out.max_violation) out.max_violation = norms[k];
  }
  out.report.wall_ms = clock.elapsed_ms();
  return out;
}

}  // namespace sugawara
