#include <gtest/gtest.h>

#include "sugawara/expression.hpp"
#include "sugawara/nc_matrix.hpp"
#include "sugawara/segal_sugawara.hpp"

using namespace sugawara;

TEST(SegalSugawaraCdet, RankOne) {
  Algebra alg(1);
  const auto s = segal_sugawara_cdet(alg);
  ASSERT_EQ(s.size(), 1U);
  EXPECT_EQ(s[0], parse_expression(alg, "e_{11}[-1]"));
}

TEST(SegalSugawaraCdet, RankTwo) {
  Algebra alg(2);
  const auto s = segal_sugawara_cdet(alg);
  ASSERT_EQ(s.size(), 2U);
  EXPECT_EQ(s[0], parse_expression(alg, "e_{11}[-1] + e_{22}[-1]"));
  EXPECT_EQ(s[1], parse_expression(alg, "e_{11}[-1]*e_{22}[-1] - e_{21}[-1]*e_{12}[-1] + e_{22}[-2]"));
}

TEST(SegalSugawaraCdet, RankThreeQuadraticPart) {
  Algebra alg(3);
  const auto s = segal_sugawara_cdet(alg);
  const NcElement expected = parse_expression(alg,
                                              "e_{11}[-1]*e_{22}[-1] - e_{21}[-1]*e_{12}[-1]"
                                              " + e_{11}[-1]*e_{33}[-1] - e_{31}[-1]*e_{13}[-1]"
                                              " + e_{22}[-1]*e_{33}[-1] - e_{32}[-1]*e_{23}[-1]"
                                              " + e_{22}[-2] + 2*e_{33}[-2]");
  EXPECT_EQ(s[1], expected);
  EXPECT_TRUE(s[2].in_negative_part());
  EXPECT_EQ(s[2].degree(), 3);
}

TEST(SegalSugawaraTrace, DegreeZeroAndOne) {
  Algebra alg(3);
  const auto t0 = segal_sugawara_trace(alg, 0);
  ASSERT_EQ(t0.size(), 1U);
  EXPECT_EQ(t0[0], NcElement::scalar(Rational(3)));
  const auto t1 = segal_sugawara_trace(alg, 1);
  EXPECT_EQ(t1[0], NcElement::scalar(Rational(3)));
  EXPECT_EQ(t1[1], parse_expression(alg, "trE[-1]"));
}

TEST(SegalSugawaraTrace, CubicTopCoefficient) {
  Algebra alg(3);
  const auto t3 = segal_sugawara_trace(alg, 3);
  ASSERT_EQ(t3.size(), 4U);
  EXPECT_EQ(t3[3], parse_expression(alg, "trE[-1,-1,-1] + 2*trE[-1,-2] + trE[-2,-1] + 2*trE[-3]"));
}

TEST(TauPolynomial, RejectsTauBeforeGenerator) {
  Algebra alg(2);
  const NcElement x = parse_expression(alg, "tau*e_{11}[1]");
  EXPECT_THROW((void)TauPolynomial::from_element(x), std::invalid_argument);
}

TEST(TauPolynomial, RoundTripsThroughElement) {
  Algebra alg(2);
  const NcElement c = cdet(alg, build_tau_matrix(2));
  const TauPolynomial p = TauPolynomial::from_element(c);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.to_element(alg), c);
}

TEST(VacuumVector, RejectsNonnegativeModes) {
  Algebra alg(2);
  EXPECT_THROW(VacuumVector(parse_expression(alg, "e_{11}[0]")), std::invalid_argument);
}

TEST(ActOnVacuum, ZeroModeKillsVacuum) {
  Algebra alg(2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      EXPECT_TRUE(act_on_vacuum(alg, Generator::e(i, j, 0), VacuumVector::vacuum()).is_zero());
}

TEST(ActOnVacuum, ZeroModeKillsS2) {
  Algebra alg(2);
  const auto s = segal_sugawara_cdet(alg);
  EXPECT_TRUE(act_on_vacuum(alg, Generator::e(1, 2, 0), VacuumVector(s[1])).is_zero());
}

TEST(ActOnVacuum, FirstModeOnCdetRankTwo) {
  Algebra alg(2);
  const VacuumVector v(cdet(alg, build_tau_matrix(2)));
  const VacuumVector out = act_on_vacuum(alg, Generator::e(2, 2, 1), v);
  EXPECT_EQ(out.element(), parse_expression(alg, "1/2*(K + 2)*(e_{11}[-1] - e_{22}[-1])"));
  EXPECT_EQ(out.element(), centrality_rhs(alg));
  EXPECT_TRUE(out.element().substitute_k(Rational(-2)).is_zero());
}

TEST(ActOnVacuum, RejectsTauAndNegativeModes) {
  Algebra alg(2);
  EXPECT_THROW((void)act_on_vacuum(alg, Generator::tau(), VacuumVector::vacuum()), std::invalid_argument);
  EXPECT_THROW((void)act_on_vacuum(alg, Generator::e(1, 1, -1), VacuumVector::vacuum()), std::invalid_argument);
}

TEST(Centrality, RanksOneToThree) {
  for (int n = 1; n <= 3; ++n) {
    const CheckReport r = verify_centrality(n);
    EXPECT_TRUE(r.passed) << "n=" << n;
    EXPECT_GT(r.checked, 0U);
  }
}

TEST(Centrality, ExhaustiveFirstModeRankTwo) {
  const CheckReport r = verify_centrality(2, {.exhaustive_first_mode = true});
  EXPECT_TRUE(r.passed);
}

TEST(Commutativity, RankTwo) { EXPECT_TRUE(verify_commutativity(2).passed); }

TEST(Commutativity, S2WithTranslate) {
  Algebra alg(2);
  const auto s = segal_sugawara_cdet(alg);
  EXPECT_TRUE(alg.commutator(s[1], alg.translate(s[1])).is_zero());
  EXPECT_TRUE(alg.commutator(s[0], s[1]).is_zero());
}

TEST(FieldPlusCoefficient, Examples) {
  Algebra alg(2);
  const auto s = segal_sugawara_cdet(alg);
  EXPECT_EQ(field_plus_coefficient(alg, s[1], -1), s[1]);
  EXPECT_EQ(field_plus_coefficient(alg, s[0], -2), parse_expression(alg, "e_{11}[-2] + e_{22}[-2]"));
  EXPECT_EQ(field_plus_coefficient(alg, parse_expression(alg, "e_{11}[-1]"), -3), parse_expression(alg, "e_{11}[-3]"));
}

TEST(FieldPlusCoefficient, DistinctCoefficientsCommute) {
  Algebra alg(2);
  const auto s = segal_sugawara_cdet(alg);
  const NcElement a = field_plus_coefficient(alg, s[1], -2);
  const NcElement b = field_plus_coefficient(alg, s[0], -3);
  EXPECT_TRUE(alg.commutator(a, b).is_zero());
}

TEST(CompleteSet, SymbolsRankTwo) {
  Algebra alg(2);
  const auto s = segal_sugawara_cdet(alg);
  EXPECT_EQ(alg.symbol(s[1], 2), char_poly_coefficient(2, 2));
  EXPECT_EQ(alg.symbol(s[0], 1), char_poly_coefficient(2, 1));
  EXPECT_EQ(power_sum(2, 1), char_poly_coefficient(2, 1));
}

TEST(CompleteSet, RanksOneToThree) {
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(verify_complete_set(n).passed) << "n=" << n;
}
