#include "sugawara/nc_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sugawara {

NcMatrix::NcMatrix(int size) : n_(size) {
  if (size < 0) throw std::invalid_argument("negative matrix size");
  entries_.resize(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
}

std::size_t NcMatrix::index(int row, int col) const {
  if (row < 0 || row >= n_ || col < 0 || col >= n_) throw std::out_of_range("matrix index out of range");
  return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col);
}

NcMatrix NcMatrix::with_rows_swapped(int p, int q) const {
  NcMatrix m = *this;
  for (int c = 0; c < n_; ++c) std::swap(m(p, c), m(q, c));
  return m;
}

NcMatrix NcMatrix::with_columns_swapped(int p, int q) const {
  NcMatrix m = *this;
  for (int r = 0; r < n_; ++r) std::swap(m(r, p), m(r, q));
  return m;
}

NcMatrix NcMatrix::minor(std::span<const int> rows, std::span<const int> cols) const {
  std::vector<int> keep_r, keep_c;
  for (int i = 0; i < n_; ++i) {
    if (std::find(rows.begin(), rows.end(), i) == rows.end()) keep_r.push_back(i);
    if (std::find(cols.begin(), cols.end(), i) == cols.end()) keep_c.push_back(i);
  }
  if (keep_r.size() != keep_c.size()) throw std::invalid_argument("minor must be square");
  NcMatrix m(static_cast<int>(keep_r.size()));
  for (std::size_t r = 0; r < keep_r.size(); ++r)
    for (std::size_t c = 0; c < keep_c.size(); ++c)
      m(static_cast<int>(r), static_cast<int>(c)) = (*this)(keep_r[r], keep_c[c]);
  return m;
}

NcMatrix NcMatrix::principal_minor(int i) const {
  const int idx[] = {i};
  return minor(idx, idx);
}

void for_each_permutation(int n, const std::function<void(std::span<const int>, int)>& f) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    f(perm, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

namespace {

// Expands the product of the chosen entries into raw words and adds each,
// normal-ordered, to the accumulator.
void expand_product(const Algebra& alg, std::span<const NcElement* const> factors, std::size_t pos, Word& word,
                    int kdeg, const Rational& coeff, TermAccumulator& acc) {
  if (pos == factors.size()) {
    acc.add(alg.normal_order(word), coeff, kdeg);
    return;
  }
  for (const auto& t : factors[pos]->terms()) {
    const auto mark = word.size();
    word.insert(word.end(), t.word.begin(), t.word.end());
    expand_product(alg, factors, pos + 1, word, kdeg + t.kdeg, coeff * t.coeff, acc);
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(mark), word.end());
  }
}

}  // namespace

NcElement cdet(const Algebra& alg, const NcMatrix& a) {
  const int n = a.size();
  if (n == 0) return NcElement::one();
  TermAccumulator acc;
  std::vector<const NcElement*> factors(static_cast<std::size_t>(n));
  Word word;
  for_each_permutation(n, [&](std::span<const int> sigma, int sign) {
    for (int c = 0; c < n; ++c) {
      factors[static_cast<std::size_t>(c)] = &a(sigma[static_cast<std::size_t>(c)], c);
      if (factors[static_cast<std::size_t>(c)]->is_zero()) return;
    }
    expand_product(alg, factors, 0, word, 0, Rational(sign), acc);
  });
  return acc.finish();
}

NcMatrix build_tau_matrix(int n) {
  if (n < 1) throw std::invalid_argument("build_tau_matrix: n must be >= 1");
  NcMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m(i, j) = NcElement::generator(Generator::e(i + 1, j + 1, -1));
      if (i == j) m(i, j) += NcElement::generator(Generator::tau());
    }
  return m;
}

NcMatrix matrix_product(const Algebra& alg, const NcMatrix& a, const NcMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix_product: size mismatch");
  const int n = a.size();
  NcMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      NcElement s;
      for (int k = 0; k < n; ++k) s += alg.multiply(a(i, k), b(k, j));
      c(i, j) = std::move(s);
    }
  return c;
}

NcElement trace(const NcMatrix& a) {
  NcElement s;
  for (int i = 0; i < a.size(); ++i) s += a(i, i);
  return s;
}

std::vector<NcElement> trace_powers(const Algebra& alg, const NcMatrix& a, int k_max) {
  if (k_max < 0) throw std::invalid_argument("trace_powers: k_max must be >= 0");
  std::vector<NcElement> out;
  out.push_back(NcElement::scalar(Rational(a.size())));
  if (k_max == 0) return out;
  NcMatrix p = a;
  out.push_back(trace(p));
  for (int k = 2; k <= k_max; ++k) {
    p = matrix_product(alg, p, a);
    out.push_back(trace(p));
  }
  return out;
}

NcElement trace_power(const Algebra& alg, const NcMatrix& a, int k) {
  if (k < 0) throw std::invalid_argument("trace_power: k must be >= 0");
  return trace_powers(alg, a, k).back();
}

ManinResult is_manin(const Algebra& alg, const NcMatrix& a) {
  const int n = a.size();
  ManinResult result;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          NcElement lhs = alg.commutator(a(i, j), a(k, l));
          NcElement rhs = alg.commutator(a(k, j), a(i, l));
          NcElement diff = lhs - rhs;
          if (!diff.is_zero()) {
            result.is_manin = false;
            result.witness = std::array<int, 4>{i, j, k, l};
            result.residual = std::move(diff);
            return result;
          }
        }
  return result;
}

bool row_swap_antisymmetric(const Algebra& alg, const NcMatrix& a, int p, int q) {
  return cdet(alg, a.with_rows_swapped(p, q)) == -cdet(alg, a);
}

bool column_swap_antisymmetric(const Algebra& alg, const NcMatrix& a, int p, int q) {
  return cdet(alg, a.with_columns_swapped(p, q)) == -cdet(alg, a);
}

IdentityResult commutator_expansion_check(const Algebra& alg, const NcMatrix& a, const NcElement& b) {
  const int n = a.size();
  IdentityResult r;
  r.lhs = alg.commutator(b, cdet(alg, a));
  for (int col = 0; col < n; ++col) {
    NcMatrix m = a;
    for (int row = 0; row < n; ++row) m(row, col) = alg.commutator(b, a(row, col));
    r.rhs += cdet(alg, m);
  }
  r.holds = r.lhs == r.rhs;
  return r;
}

IdentityResult column_replacement_check(const Algebra& alg, const NcMatrix& a, int i, int j, const NcElement& b) {
  const int n = a.size();
  if (i < 0 || i >= n || j < 0 || j >= n) throw std::out_of_range("column_replacement_check: index out of range");
  IdentityResult r;

  NcMatrix replaced = a;
  for (int row = 0; row < n; ++row) replaced(row, j) = row == i ? b : NcElement{};
  r.lhs = cdet(alg, replaced);

  // Move the replaced column to the last position.
  NcMatrix moved(n);
  for (int row = 0; row < n; ++row) {
    int dst = 0;
    for (int col = 0; col < n; ++col)
      if (col != j) moved(row, dst++) = a(row, col);
    moved(row, n - 1) = replaced(row, j);
  }
  const int moved_sign = (n - 1 - j) % 2 == 0 ? 1 : -1;
  r.rhs = cdet(alg, moved) * Rational(moved_sign);

  const int sum_sign = (i + j) % 2 == 0 ? 1 : -1;
  const int del_r[] = {i};
  const int del_c[] = {j};
  const NcMatrix base = a.minor(del_r, del_c);
  for (int k = j + 1; k < n; ++k) {
    NcMatrix m = base;
    const int target_col = k - 1;  // column k shifts left once column j is gone
    int dst_row = 0;
    for (int row = 0; row < n; ++row) {
      if (row == i) continue;
      m(dst_row++, target_col) = alg.commutator(b, a(row, k));
    }
    r.rhs += cdet(alg, m) * Rational(sum_sign);
  }
  r.holds = r.lhs == r.rhs;
  return r;
}

USeries USeries::polynomial(std::map<int, NcElement> coeffs) {
  USeries s;
  s.coeffs_ = std::move(coeffs);
  s.trim();
  return s;
}

USeries USeries::truncated(std::map<int, NcElement> coeffs, int valid_from) {
  USeries s;
  s.coeffs_ = std::move(coeffs);
  s.valid_from_ = valid_from;
  s.trim();
  return s;
}

void USeries::trim() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    const bool below = valid_from_ && it->first < *valid_from_;
    if (it->second.is_zero() || below)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

const NcElement& USeries::coefficient(int e) const {
  static const NcElement kZero;
  if (valid_from_ && e < *valid_from_) throw std::out_of_range("USeries: coefficient below the valid order");
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? kZero : it->second;
}

std::optional<int> USeries::top() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

USeries USeries::derivative() const {
  USeries d;
  for (const auto& [e, c] : coeffs_)
    if (e != 0) d.coeffs_[e - 1] = c * Rational(e);
  if (valid_from_) d.valid_from_ = *valid_from_ - 1;
  d.trim();
  return d;
}

USeries USeries::multiply(const Algebra& alg, const USeries& rhs) const {
  USeries out;
  const auto ta = top();
  const auto tb = rhs.top();
  if (valid_from_ || rhs.valid_from_) {
    // Coefficient e of the product needs a_i for i >= e - top(b) and b_j for
    // j >= e - top(a); an empty side contributes nothing.
    std::optional<int> v;
    if (valid_from_ && tb) v = *valid_from_ + *tb;
    if (rhs.valid_from_ && ta) v = v ? std::max(*v, *rhs.valid_from_ + *ta) : *rhs.valid_from_ + *ta;
    if (!v) v = std::max(valid_from_.value_or(0), rhs.valid_from_.value_or(0));
    out.valid_from_ = v;
  }
  std::map<int, TermAccumulator> acc;
  for (const auto& [ea, ca] : coeffs_)
    for (const auto& [eb, cb] : rhs.coeffs_) {
      const int e = ea + eb;
      if (out.valid_from_ && e < *out.valid_from_) continue;
      acc[e].add(alg.multiply(ca, cb), Rational(1));
    }
  for (auto& [e, a] : acc) out.coeffs_[e] = a.finish();
  out.trim();
  return out;
}

USeries& USeries::operator+=(const USeries& rhs) {
  if (rhs.valid_from_) valid_from_ = valid_from_ ? std::max(*valid_from_, *rhs.valid_from_) : *rhs.valid_from_;
  for (const auto& [e, c] : rhs.coeffs_) coeffs_[e] += c;
  trim();
  return *this;
}

USeries cdet_shifted(const Algebra& alg, const NcMatrix& a) {
  const int n = a.size();
  USeries total = USeries::polynomial({});
  for_each_permutation(n, [&](std::span<const int> sigma, int sign) {
    USeries prod = USeries::polynomial({{0, NcElement::scalar(Rational(sign))}});
    for (int c = 0; c < n; ++c) {
      const int row = sigma[static_cast<std::size_t>(c)];
      std::map<int, NcElement> entry;
      if (!a(row, c).is_zero()) entry[0] = a(row, c);
      if (row == c) entry[1] = NcElement::one();
      prod = prod.multiply(alg, USeries::polynomial(std::move(entry)));
    }
    total += prod;
  });
  return total;
}

NewtonResult newton_identity_check(const Algebra& alg, int truncation) {
  NewtonResult result;
  result.truncation = truncation;
  if (truncation < 1) {
    result.status = CheckStatus::Inconclusive;
    return result;
  }
  const int n = alg.rank();
  const NcMatrix m = build_tau_matrix(n);

  const USeries c = cdet_shifted(alg, m);
  const USeries lhs = c.derivative();

  // Enough trace powers that the product is exact down to u^{-truncation}.
  const int k_max = truncation + n - 1;
  const auto traces = trace_powers(alg, m, k_max);
  std::map<int, NcElement> tail;
  for (int k = 0; k <= k_max; ++k)
    tail[-k - 1] = traces[static_cast<std::size_t>(k)] * Rational(k % 2 == 0 ? 1 : -1);
  const USeries rhs = c.multiply(alg, USeries::truncated(std::move(tail), -k_max - 1));

  result.status = CheckStatus::Pass;
  for (int e = n - 1; e >= -truncation; --e) {
    result.exponents.push_back(e);
    NcElement diff = lhs.coefficient(e) - rhs.coefficient(e);
    if (!diff.is_zero() && !result.first_mismatch) {
      result.status = CheckStatus::Fail;
      result.first_mismatch = e;
      result.residual = std::move(diff);
    }
  }
  return result;
}

}  // namespace sugawara
