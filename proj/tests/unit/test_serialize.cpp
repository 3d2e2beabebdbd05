#include <gtest/gtest.h>

#include "sugawara/expression.hpp"
#include "sugawara/segal_sugawara.hpp"
#include "sugawara/serialize.hpp"

using namespace sugawara;

TEST(Serialize, ZeroElement) { EXPECT_EQ(serialize(NcElement{}), R"({"terms":[]})"); }

TEST(Serialize, GeneratorsAndK) {
  Algebra alg(2);
  const NcElement x = parse_expression(alg, "-1/2*K*e_{12}[-1]*tau + 3");
  EXPECT_EQ(serialize(x),
            R"({"terms":[{"coeff":"3/1","kdeg":0,"word":[]},)"
            R"({"coeff":"-1/2","kdeg":1,"word":[{"e":[1,2,-1]},"tau"]}]})");
}

TEST(Serialize, RoundTripS2) {
  Algebra alg(2);
  const auto s = segal_sugawara_cdet(alg);
  EXPECT_EQ(parse_nc_element(serialize(s[1])), s[1]);
}

TEST(Serialize, Deterministic) {
  Algebra alg(3);
  const auto t = segal_sugawara_trace(alg, 3);
  Algebra other(3);
  EXPECT_EQ(serialize(t[3]), serialize(segal_sugawara_trace(other, 3)[3]));
}

TEST(Parse, ZeroDenominatorRejected) {
  try {
    (void)parse_nc_element(R"({"terms":[{"coeff":"1/0","kdeg":0,"word":[]}]})");
    FAIL();
  } catch (const SerializationError& e) {
    EXPECT_EQ(e.location(), "/terms/0/coeff");
  }
}

TEST(Parse, MalformedJsonHasByteOffset) {
  try {
    (void)parse_nc_element(R"({"terms":[)");
    FAIL();
  } catch (const SerializationError& e) {
    EXPECT_EQ(e.location().rfind("byte ", 0), 0U);
  }
}

TEST(Parse, StructuralErrors) {
  EXPECT_THROW((void)parse_nc_element(R"({"term":[]})"), SerializationError);
  EXPECT_THROW((void)parse_nc_element(R"({"terms":[{"coeff":"1","kdeg":0,"word":["sigma"]}]})"), SerializationError);
  EXPECT_THROW((void)parse_nc_element(R"({"terms":[{"coeff":"1","kdeg":0,"word":[{"e":[1,2]}]}]})"),
               SerializationError);
  // Not normal-ordered: tau must be rightmost among negative-part words.
  EXPECT_THROW((void)parse_nc_element(R"({"terms":[{"coeff":"1","kdeg":0,"word":["tau",{"e":[1,1,-1]}]}]})"),
               SerializationError);
  EXPECT_THROW((void)parse_nc_element(R"({"terms":[{"coeff":"1","kdeg":-1,"word":[]}]})"), SerializationError);
}

TEST(Parse, DuplicateTermsMerge) {
  const NcElement x = parse_nc_element(
      R"({"terms":[{"coeff":"1/2","kdeg":0,"word":["tau"]},{"coeff":"1/2","kdeg":0,"word":["tau"]}]})");
  EXPECT_EQ(x, NcElement::generator(Generator::tau()));
}

TEST(SerializeW, RoundTrip) {
  const WPolynomial p =
      WPolynomial::variable(1, -1) * WPolynomial::variable(2, -1) + WPolynomial::variable(1, -2) * Rational(-3, 4);
  const std::string text = serialize(p);
  EXPECT_EQ(text, R"({"terms":[{"coeff":"1/1","vars":[["b",1,-1],["b",2,-1]]},{"coeff":"-3/4","vars":[["b",1,-2]]}]})");
  EXPECT_EQ(parse_wpolynomial(text), p);
  EXPECT_THROW((void)parse_wpolynomial(R"({"terms":[{"coeff":"1","vars":[["b",1,0]]}]})"), SerializationError);
}

TEST(SerializeChi, RoundTrip) {
  const ChiSeries chi = parse_chi_series(R"([{"coeffs":{"0":"3","-1":"1/2"},"min_r":-2,"max_r":0},)"
                                         R"({"coeffs":{},"min_r":0,"max_r":0}])");
  EXPECT_EQ(chi.rank(), 2);
  EXPECT_EQ(chi.components()[0].coeffs.at(-1), Rational(1, 2));
  EXPECT_EQ(chi_series_from_json(to_json(chi)).components()[0].coeffs, chi.components()[0].coeffs);
  EXPECT_THROW((void)parse_chi_series(R"([{"coeffs":{"x":"1"},"min_r":0,"max_r":0}])"), SerializationError);
  EXPECT_THROW((void)parse_chi_series(R"([{"coeffs":{"5":"1"},"min_r":0,"max_r":0}])"), SerializationError);
}

TEST(SerializeMatrix, RoundTrip) {
  RationalMatrix m(2, 3);
  m(0, 1) = Rational(5, 3);
  m(1, 2) = Rational(-1);
  EXPECT_EQ(matrix_from_json(to_json(m)), m);
  EXPECT_THROW((void)matrix_from_json(parse_json(R"([["1"],["1","2"]])")), SerializationError);
}

TEST(SerializeReport, RoundTrip) {
  CheckReport r = CheckReport::named("demo", 2);
  r.checked = 4;
  r.fail("x", "y");
  const Json j = to_json(r);
  EXPECT_EQ(j["check"], "demo");
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(j["witnesses"][0]["label"], "x");
  const CheckReport back = check_report_from_json(parse_json(j.dump()));
  EXPECT_EQ(back.check, "demo");
  EXPECT_EQ(back.checked, 4U);
  ASSERT_EQ(back.witnesses.size(), 1U);
  EXPECT_EQ(back.witnesses[0].residual, "y");
  EXPECT_THROW((void)check_report_from_json(parse_json(R"({"check":"a","n":1})")), SerializationError);
}

TEST(SerializeNcMatrix, RoundTrip) {
  const NcMatrix m = build_tau_matrix(2);
  const Json j = to_json(m);
  EXPECT_EQ(j[0][1].dump(), R"({"terms":[{"coeff":"1/1","kdeg":0,"word":[{"e":[1,2,-1]}]}]})");
  EXPECT_EQ(nc_matrix_from_json(parse_json(j.dump())), m);
  try {
    (void)nc_matrix_from_json(parse_json(R"([[{"terms":[{"coeff":"1/0","kdeg":0,"word":[]}]}]])"));
    FAIL();
  } catch (const SerializationError& e) {
    EXPECT_EQ(e.location(), "/0/0/terms/0/coeff");
  }
}
