#include <gtest/gtest.h>

#include "sugawara/expression.hpp"
#include "sugawara/nc_matrix.hpp"
#include "sugawara/segal_sugawara.hpp"
#include "sugawara/w_algebra.hpp"

using namespace sugawara;

namespace {

WPolynomial b(int i, int r) { return WPolynomial::variable(i, r); }

}  // namespace

TEST(Partitions, CountsAndCentralizerOrders) {
  EXPECT_EQ(partitions(0).size(), 1U);
  EXPECT_EQ(partitions(4).size(), 5U);
  EXPECT_EQ(partitions(6).size(), 11U);
  EXPECT_EQ((Partition{{2, 1, 1}}.z()), Rational(4));
  EXPECT_EQ((Partition{{3}}.z()), Rational(3));
}

TEST(MiuraImage, RankOne) {
  const auto bs = miura_image_cdet(1);
  ASSERT_EQ(bs.size(), 1U);
  EXPECT_EQ(bs[0], b(1, -1));
}

TEST(MiuraImage, RankTwo) {
  const auto bs = miura_image_cdet(2);
  EXPECT_EQ(bs[0], b(1, -1) + b(2, -1));
  EXPECT_EQ(bs[1], b(1, -1) * b(2, -1) + b(1, -2));
}

TEST(MiuraImage, RankThreeTop) {
  const auto bs = miura_image_cdet(3);
  const WPolynomial expected = b(1, -1) * b(2, -1) * b(3, -1) + b(1, -2) * b(2, -1) + b(1, -2) * b(3, -1) +
                               b(1, -1) * b(2, -2) + b(1, -3) * Rational(2);
  EXPECT_EQ(bs[2], expected);
}

TEST(Screening, Examples) {
  EXPECT_TRUE(screening(1, b(1, -1) + b(2, -1)).is_zero());
  EXPECT_TRUE(screening(1, b(1, -1) * b(2, -1) + b(1, -2)).is_zero());
  EXPECT_EQ(screening(1, b(1, -1)), WPolynomial::constant(Rational(1)));
}

TEST(Screening, TranslatedB2) {
  const auto bs = miura_image_cdet(2);
  EXPECT_TRUE(screening(1, bs[1].translate()).is_zero());
}

TEST(Screening, RankThreeTopIsInKernel) {
  const auto bs = miura_image_cdet(3);
  EXPECT_TRUE(screening(1, bs[2]).is_zero());
  EXPECT_TRUE(screening(2, bs[2]).is_zero());
}

TEST(WMembership, RanksTwoAndThree) {
  for (int n = 2; n <= 3; ++n) EXPECT_TRUE(verify_w_membership(n).passed) << "n=" << n;
}

TEST(Rho, UnitAndGenerators) {
  const RhoMap rho(3);
  EXPECT_TRUE(rho.reversed_expansion_matches());
  EXPECT_EQ(rho(NcElement::one()), WPolynomial::constant(Rational(1)));
  const auto s = segal_sugawara_cdet(rho.algebra());
  const auto bs = miura_image_cdet(3);
  for (int l = 0; l < 3; ++l) EXPECT_EQ(rho(s[static_cast<std::size_t>(l)]), bs[static_cast<std::size_t>(l)]);
}

TEST(Rho, CommutesWithTranslation) {
  const RhoMap rho(2);
  const auto s = segal_sugawara_cdet(rho.algebra());
  EXPECT_EQ(rho(rho.algebra().translate(s[1])), miura_image_cdet(2)[1].translate());
}

TEST(Rho, RejectsNonCentralInput) {
  const RhoMap rho(2);
  EXPECT_THROW((void)rho(parse_expression(rho.algebra(), "e_{12}[-1]")), std::invalid_argument);
  EXPECT_THROW((void)rho(parse_expression(rho.algebra(), "tau")), std::invalid_argument);
}

TEST(TraceImage, RankOneIsPower) {
  const auto coeffs = trace_generating_image(1, 3);
  WTauOperator a(std::vector<WPolynomial>{b(1, -1), WPolynomial::constant(Rational(1))});
  EXPECT_EQ(coeffs[3], a * a * a);
}

TEST(TraceImage, RankTwoLinear) {
  const auto coeffs = trace_generating_image(2, 1);
  const WTauOperator expected(std::vector<WPolynomial>{b(1, -1) + b(2, -1), WPolynomial::constant(Rational(2))});
  EXPECT_EQ(coeffs[1], expected);
}

TEST(TraceImage, RankTwoQuadraticMatchesRho) {
  const RhoMap rho(2);
  const NcElement tr2 = trace_power(rho.algebra(), build_tau_matrix(2), 2);
  const auto coeffs = trace_generating_image(2, 2);
  EXPECT_EQ(rho.on_tau_polynomial(tr2), coeffs[2]);
  EXPECT_EQ(to_string(coeffs[2]), "2*tau^2 + (2*b_1[-1] + 2*b_2[-1])*tau + b_1[-1]^2 + b_2[-1]^2 + 2*b_2[-2]");
  EXPECT_EQ(coeffs, trace_newton_transport(2, 2));
}

TEST(TraceImage, AllRoutesAgree) {
  for (int n = 2; n <= 3; ++n) EXPECT_TRUE(verify_trace_images(n, 4).passed) << "n=" << n;
}

TEST(MiuraCheck, RanksTwoAndThree) {
  for (int n = 2; n <= 3; ++n) EXPECT_TRUE(verify_miura_image(n).passed) << "n=" << n;
}

TEST(Laurent, ProductPrecision) {
  const auto a = LaurentSeries<Rational>::from_map({{-1, Rational(1)}, {0, Rational(2)}}, 2);
  const auto c = a * a;
  ASSERT_TRUE(c.precision().has_value());
  EXPECT_EQ(*c.precision(), 1);
  EXPECT_EQ(c.coefficient(-2), Rational(1));
  EXPECT_EQ(c.coefficient(-1), Rational(4));
  EXPECT_THROW((void)c.coefficient(1), std::out_of_range);
}

TEST(Wakimoto, RankOne) {
  const ChiSeries chi = ChiSeries::simple_poles({Rational(5)});
  EXPECT_EQ(to_string(wakimoto_eigenvalue(EigenFamily::Cdet, chi, 1, 0)), "d_z + 5*z^-1");
}

TEST(Wakimoto, ZeroCharacter) {
  const ChiSeries chi = ChiSeries::simple_poles({Rational(0), Rational(0)});
  EXPECT_EQ(to_string(wakimoto_eigenvalue(EigenFamily::Cdet, chi, 2, 0)), "d_z^2");
}

TEST(Wakimoto, SimplePoles) {
  // (d + c2/z)(d + c1/z) = d^2 + (c1+c2)/z d + (c1 c2 - c1)/z^2 with c1=3, c2=5.
  const ChiSeries chi = ChiSeries::simple_poles({Rational(3), Rational(5)});
  EXPECT_EQ(to_string(wakimoto_eigenvalue(EigenFamily::Cdet, chi, 2, 0)), "d_z^2 + 8*z^-1*d_z + 12*z^-2");
}

TEST(Wakimoto, TruncatedSeriesSucceedsWhenDeepEnough) {
  std::vector<ChiSeries::Component> comps(2);
  for (auto& c : comps) {
    c.min_r = -5;
    c.max_r = 0;
    for (int r = -5; r <= 0; ++r) c.coeffs[r] = Rational(r + 7);
  }
  const ChiSeries chi(comps);
  const auto op = wakimoto_eigenvalue(EigenFamily::Cdet, chi, 2, 3);
  EXPECT_NO_THROW((void)op.coefficient(0).coefficient(3));
}

TEST(Wakimoto, TruncationReportsRequiredDepth) {
  std::vector<ChiSeries::Component> comps(2);
  for (auto& c : comps) {
    c.min_r = -2;
    c.max_r = 0;
    c.coeffs[0] = Rational(1);
  }
  const ChiSeries chi(comps);
  try {
    (void)wakimoto_eigenvalue(EigenFamily::Cdet, chi, 2, 3);
    FAIL() << "expected TruncationError";
  } catch (const TruncationError& e) {
    EXPECT_EQ(e.required_min_r(), -5);
    comps[0].min_r = comps[1].min_r = e.required_min_r();
    EXPECT_NO_THROW((void)wakimoto_eigenvalue(EigenFamily::Cdet, ChiSeries(comps), 2, 3));
  }
}

TEST(Wakimoto, ComponentRangeValidated) {
  std::vector<ChiSeries::Component> comps(1);
  comps[0].min_r = 0;
  comps[0].max_r = 1;
  comps[0].coeffs[3] = Rational(1);
  EXPECT_THROW(ChiSeries{comps}, std::invalid_argument);
}

TEST(Wakimoto, FormalSubstitution) {
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(verify_formal_substitution(n).passed) << "n=" << n;
}
