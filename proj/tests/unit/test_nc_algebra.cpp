#include <gtest/gtest.h>

#include <random>

#include "sugawara/algebra.hpp"
#include "sugawara/expression.hpp"

using namespace sugawara;

namespace {

NcElement gen(Generator g) { return NcElement::generator(g); }
Generator e(int i, int j, int r) { return Generator::e(i, j, r); }

}  // namespace

TEST(Generator, OrderPutsTauAfterNegativeModes) {
  EXPECT_LT(e(1, 1, -2), e(1, 1, -1));
  EXPECT_LT(e(1, 2, -1), e(2, 1, -1));
  EXPECT_LT(e(3, 3, -1), Generator::tau());
  EXPECT_LT(Generator::tau(), e(1, 1, 0));
  EXPECT_LT(e(2, 2, 5), Generator::central());
  EXPECT_EQ(e(1, 2, -3).to_string(), "e_{12}[-3]");
  EXPECT_EQ(e(10, 2, 0).to_string(), "e_{10,2}[0]");
  EXPECT_THROW(e(0, 1, 0), std::out_of_range);
}

TEST(Bracket, TauLowersMode) {
  Algebra alg(2);
  EXPECT_EQ(alg.bracket(Generator::tau(), e(1, 2, 3)), gen(e(1, 2, 2)) * Rational(-3));
  EXPECT_TRUE(alg.bracket(Generator::tau(), e(1, 2, 0)).is_zero());
  EXPECT_TRUE(alg.bracket(Generator::tau(), Generator::central()).is_zero());
}

TEST(Bracket, DisjointIndices) {
  Algebra alg(2);
  EXPECT_TRUE(alg.bracket(e(1, 1, 0), e(2, 2, 5)).is_zero());
}

TEST(Bracket, CocycleTerm) {
  Algebra alg(2);
  EXPECT_EQ(alg.bracket(e(1, 2, 1), e(2, 1, -1)), parse_expression(alg, "e_{11}[0] - e_{22}[0] + K"));
  EXPECT_EQ(alg.bracket(e(1, 1, 2), e(1, 1, -2)), gen(Generator::central()));
}

TEST(Bracket, RankOneHasNoCocycle) {
  Algebra alg(1);
  EXPECT_TRUE(alg.bracket(e(1, 1, 3), e(1, 1, -3)).is_zero());
}

TEST(Bracket, RejectsIndexBeyondRank) {
  Algebra alg(2);
  EXPECT_THROW((void)alg.bracket(e(3, 1, 0), e(1, 1, 0)), std::out_of_range);
}

TEST(Multiply, Examples) {
  Algebra alg(2);
  const NcElement x = parse_expression(alg, "e_{12}[-1] + 3*tau");
  EXPECT_EQ(alg.multiply(NcElement::one(), x), x);
  EXPECT_EQ(alg.multiply(gen(e(2, 1, -1)), gen(e(1, 2, -1))),
            parse_expression(alg, "e_{12}[-1]*e_{21}[-1] + e_{22}[-2] - e_{11}[-2]"));
  const NcElement sq = alg.multiply(gen(e(1, 1, -1)), gen(e(1, 1, -1)));
  ASSERT_EQ(sq.size(), 1U);
  EXPECT_EQ(sq.terms()[0].word, (Word{e(1, 1, -1), e(1, 1, -1)}));
}

TEST(NormalOrder, Examples) {
  Algebra alg(2);
  const Word ordered{e(1, 1, -1), Generator::tau()};
  const NcElement a = alg.normal_order(ordered);
  ASSERT_EQ(a.size(), 1U);
  EXPECT_EQ(a.terms()[0].word, ordered);

  const Word reversed{Generator::tau(), e(1, 1, -1)};
  EXPECT_EQ(alg.normal_order(reversed), a + gen(e(1, 1, -2)));

  const Word with_k{e(1, 2, -1), Generator::central(), e(1, 1, -1)};
  const NcElement k = alg.normal_order(with_k);
  EXPECT_EQ(k, alg.normal_order(Word{e(1, 2, -1), e(1, 1, -1)}).times_k(1));
}

TEST(NormalOrder, Idempotent) {
  Algebra alg(3);
  const NcElement x = parse_expression(alg, "(e_{21}[-1] + tau)^3 * e_{13}[-2]");
  for (const auto& t : x.terms()) {
    const NcElement y = alg.normal_order(t.word);
    ASSERT_EQ(y.size(), 1U);
    EXPECT_EQ(y.terms()[0].word, t.word);
  }
}

TEST(Translate, Examples) {
  Algebra alg(2);
  EXPECT_TRUE(alg.translate(NcElement::one()).is_zero());
  EXPECT_EQ(alg.translate(gen(e(1, 1, -1))), gen(e(1, 1, -2)));
  EXPECT_EQ(alg.translate(parse_expression(alg, "e_{11}[-1]*e_{22}[-1]")),
            parse_expression(alg, "e_{11}[-2]*e_{22}[-1] + e_{11}[-1]*e_{22}[-2]"));
  EXPECT_EQ(alg.translate(gen(Generator::central())), NcElement{});
  EXPECT_THROW((void)alg.translate(gen(Generator::tau())), std::invalid_argument);
}

TEST(Symbol, Examples) {
  Algebra alg(2);
  const NcElement x = parse_expression(alg, "e_{11}[-1]*e_{22}[-1] + e_{22}[-2]");
  CommutativeElement expect;
  expect.add_term({e(1, 1, -1), e(2, 2, -1)}, Rational(1));
  EXPECT_EQ(alg.symbol(x, 2), expect);
  EXPECT_EQ(alg.symbol(x, 3), CommutativeElement{});
  EXPECT_EQ(alg.symbol(NcElement::one(), 0), CommutativeElement::scalar(Rational(1)));
  EXPECT_THROW((void)alg.symbol(gen(Generator::tau()), 1), std::invalid_argument);
}

TEST(VacuumProjection, DropsAnnihilatedTerms) {
  Algebra alg(2);
  const NcElement x = parse_expression(alg, "e_{11}[-1]*e_{12}[0] + e_{11}[-1]*tau + e_{21}[1]");
  EXPECT_EQ(vacuum_projection(x), parse_expression(alg, "e_{11}[-1]*tau"));
}

TEST(Expression, ParsesTraceMacroAndUnicode) {
  Algebra alg(2);
  EXPECT_EQ(parse_expression(alg, "trE[-1]"), parse_expression(alg, "e_{11}[-1] + e_{22}[-1]"));
  EXPECT_EQ(parse_expression(alg, "\xCF\x84 + e_{12}[\xE2\x88\x92" "1]"), parse_expression(alg, "tau + e_{12}[-1]"));
  EXPECT_EQ(parse_expression(alg, "1/2*e_{1,2}[-1]*2"), parse_expression(alg, "e_12[-1]"));
  EXPECT_THROW(parse_expression(alg, "e_{13}[-1]"), ParseError);
  EXPECT_THROW(parse_expression(alg, "e_{12}[-1] +"), ParseError);
  EXPECT_THROW(parse_expression(alg, "(tau"), ParseError);
}

TEST(AlgebraInvariants, NoCentralTermInsideNegativePart) {
  Algebra alg(3);
  const NcElement x = parse_expression(alg, "(trE[-1] + e_{12}[-2] + e_{31}[-1])^4");
  EXPECT_EQ(x.max_kdeg(), 0);
  EXPECT_TRUE(x.in_negative_part());
}
