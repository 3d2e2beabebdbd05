#include "properties.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "sugawara/nc_matrix.hpp"
#include "sugawara/serialize.hpp"

namespace sugawara::props {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational() {
    const int p = uniform(-6, 6);
    return Rational(p == 0 ? 1 : p, uniform(1, 5));
  }

  Generator generator(int n, int min_mode, int max_mode, bool allow_tau) {
    if (allow_tau && uniform(0, 5) == 0) return Generator::tau();
    return Generator::e(uniform(1, n), uniform(1, n), uniform(min_mode, max_mode));
  }

  NcElement element(const Algebra& alg, int min_mode, int max_mode, bool allow_tau, int max_len = 3) {
    NcElement x;
    const int terms = uniform(1, 3);
    for (int t = 0; t < terms; ++t) {
      Word w;
      const int len = uniform(0, max_len);
      for (int g = 0; g < len; ++g) w.push_back(generator(alg.rank(), min_mode, max_mode, allow_tau));
      x += alg.normal_order(w) * rational();
    }
    return x;
  }

  /// Two distinct indices in [0, size).
  std::pair<int, int> distinct_pair(int size) {
    const int p = uniform(0, size - 1);
    int q = uniform(0, size - 2);
    if (q >= p) ++q;
    return {p, q};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Runs check(sampler) count times; a false return or an exception is a failure.
PropertyResult run(const std::string& name, int count, std::uint64_t seed,
                   const std::function<bool(Sampler&, std::string&)>& check) {
  PropertyResult result{name, 0, 0, {}};
  Sampler s(seed);
  for (int i = 0; i < count; ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = check(s, detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    ++result.instances;
    if (!ok) {
      if (result.failures++ == 0) result.first_failure = "instance " + std::to_string(i) + ": " + detail;
    }
  }
  return result;
}

NcElement jacobiator(const Algebra& alg, const NcElement& a, const NcElement& b, const NcElement& c) {
  return alg.commutator(a, alg.commutator(b, c)) + alg.commutator(b, alg.commutator(c, a)) +
         alg.commutator(c, alg.commutator(a, b));
}

}  // namespace

PropertyResult jacobi_on_generators(int count, std::uint64_t seed) {
  return run("jacobi (generators)", count, seed, [](Sampler& s, std::string& detail) {
    Algebra alg(s.uniform(1, 3));
    const NcElement a = NcElement::generator(s.generator(alg.rank(), -2, 2, true));
    const NcElement b = NcElement::generator(s.generator(alg.rank(), -2, 2, true));
    const NcElement c = NcElement::generator(s.generator(alg.rank(), -2, 2, true));
    detail = a.to_string() + ", " + b.to_string() + ", " + c.to_string();
    return jacobiator(alg, a, b, c).is_zero();
  });
}

PropertyResult jacobi_on_elements(int count, std::uint64_t seed) {
  Algebra alg(2);
  return run("jacobi (elements)", count, seed, [&alg](Sampler& s, std::string&) {
    const NcElement a = s.element(alg, -2, 1, true, 2);
    const NcElement b = s.element(alg, -2, 1, true, 2);
    const NcElement c = s.element(alg, -2, 1, true, 1);
    return jacobiator(alg, a, b, c).is_zero();
  });
}

PropertyResult associativity(int count, std::uint64_t seed) {
  Algebra alg(2);
  return run("associativity", count, seed, [&alg](Sampler& s, std::string&) {
    const NcElement a = s.element(alg, -2, 1, true, 2);
    const NcElement b = s.element(alg, -2, 1, true, 2);
    const NcElement c = s.element(alg, -2, 1, true, 2);
    return alg.multiply(alg.multiply(a, b), c) == alg.multiply(a, alg.multiply(b, c));
  });
}

// T is a derivation of U(g_-) and agrees with ad(tau) there.
PropertyResult translation_is_derivation(int count, std::uint64_t seed) {
  return run("derivation (translation)", count, seed, [](Sampler& s, std::string& detail) {
    Algebra alg(s.uniform(1, 3));
    const NcElement x = s.element(alg, -3, -1, false);
    const NcElement y = s.element(alg, -3, -1, false);
    detail = x.to_string() + " ; " + y.to_string();
    const NcElement lhs = alg.translate(alg.multiply(x, y));
    const NcElement rhs = alg.multiply(alg.translate(x), y) + alg.multiply(x, alg.translate(y));
    return lhs == rhs && alg.commutator(NcElement::generator(Generator::tau()), x) == alg.translate(x);
  });
}

PropertyResult commutator_is_derivation(int count, std::uint64_t seed) {
  Algebra alg(2);
  return run("derivation (commutator)", count, seed, [&alg](Sampler& s, std::string&) {
    const NcElement g = NcElement::generator(s.generator(2, -2, 2, true));
    const NcElement x = s.element(alg, -2, 1, true, 2);
    const NcElement y = s.element(alg, -2, 1, true, 2);
    return alg.commutator(g, alg.multiply(x, y)) ==
           alg.multiply(alg.commutator(g, x), y) + alg.multiply(x, alg.commutator(g, y));
  });
}

PropertyResult row_swap_antisymmetry(int count, std::uint64_t seed) {
  Algebra alg(2);
  return run("determinant antisymmetry (rows, any matrix)", count, seed, [&alg](Sampler& s, std::string&) {
    const int size = s.uniform(2, 3);
    NcMatrix m(size);
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c) m(r, c) = s.element(alg, -2, -1, true, size == 2 ? 2 : 1);
    const auto [p, q] = s.distinct_pair(size);
    return row_swap_antisymmetric(alg, m, p, q);
  });
}

// Principal submatrices of tau + E[-1] with permuted indices, a scalar added
// on the diagonal and columns scaled by nonzero rationals stay Manin.
PropertyResult column_swap_antisymmetry_manin(int count, std::uint64_t seed) {
  std::vector<std::unique_ptr<Algebra>> algebras;
  for (int n = 0; n <= 3; ++n) algebras.push_back(std::make_unique<Algebra>(std::max(n, 1)));
  return run("determinant antisymmetry (columns, Manin)", count, seed, [&](Sampler& s, std::string& detail) {
    const int n = s.uniform(2, 3);
    const Algebra& alg = *algebras[static_cast<std::size_t>(n)];
    const NcMatrix full = build_tau_matrix(n);
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), s.engine());
    const int size = s.uniform(2, n);
    NcMatrix m(size);
    const Rational shift = s.rational();
    for (int c = 0; c < size; ++c) {
      const Rational scale = s.rational();
      for (int r = 0; r < size; ++r) {
        NcElement entry = full(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
        if (r == c) entry += NcElement::scalar(shift);
        m(r, c) = entry * scale;
      }
    }
    if (!is_manin(alg, m).is_manin) {
      detail = "sampled matrix is not Manin";
      return false;
    }
    const auto [p, q] = s.distinct_pair(size);
    return column_swap_antisymmetric(alg, m, p, q);
  });
}

PropertyResult serialization_round_trip(int count, std::uint64_t seed) {
  return run("serialization round-trip", count, seed, [](Sampler& s, std::string& detail) {
    Algebra alg(s.uniform(1, 4));
    NcElement x = s.element(alg, -4, 3, true);
    if (s.uniform(0, 2) == 0) x = x.times_k(s.uniform(1, 2));
    const std::string text = serialize(x);
    detail = text;
    if (parse_nc_element(text) != x || serialize(parse_nc_element(text)) != text) return false;

    WPolynomial p;
    for (int t = s.uniform(0, 4); t > 0; --t) {
      WPolynomial m = WPolynomial::constant(s.rational());
      for (int v = s.uniform(0, 3); v > 0; --v) m = m * WPolynomial::variable(s.uniform(1, 3), s.uniform(-3, -1));
      p += m;
    }
    detail = serialize(p);
    if (parse_wpolynomial(serialize(p)) != p) return false;

    RationalMatrix mat(static_cast<std::size_t>(s.uniform(1, 4)), static_cast<std::size_t>(s.uniform(1, 4)));
    for (std::size_t r = 0; r < mat.rows(); ++r)
      for (std::size_t c = 0; c < mat.cols(); ++c)
        if (s.uniform(0, 1)) mat(r, c) = s.rational();
    if (matrix_from_json(parse_json(to_json(mat).dump())) != mat) return false;

    std::vector<ChiSeries::Component> comps(static_cast<std::size_t>(s.uniform(1, 3)));
    for (auto& comp : comps) {
      comp.min_r = s.uniform(-5, 0);
      comp.max_r = s.uniform(comp.min_r, 2);
      for (int r = comp.min_r; r <= comp.max_r; ++r)
        if (s.uniform(0, 1)) comp.coeffs[r] = s.rational();
    }
    const ChiSeries back = parse_chi_series(to_json(ChiSeries(comps)).dump());
    if (back.rank() != static_cast<int>(comps.size())) return false;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      const auto& b = back.components()[k];
      if (b.coeffs != comps[k].coeffs || b.min_r != comps[k].min_r || b.max_r != comps[k].max_r) return false;
    }
    return true;
  });
}

}  // namespace sugawara::props
