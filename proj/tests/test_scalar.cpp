#include "qlie/scalar.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

using qlie::Scalar;
using qlie::ScalarForm;

namespace {

Scalar S(const char* s) { return Scalar::parse(s); }
Scalar q(int k) { return Scalar::q_pow(k); }
Scalar v(int e) { return Scalar::v_pow(e); }

Scalar random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 4), exp(-6, 6), coef(-5, 5);
  Scalar s;
  for (int i = len(rng); i > 0; --i) s += Scalar(mpz_class(coef(rng))) * v(exp(rng));
  return s;
}

Scalar random_scalar(std::mt19937& rng) {
  Scalar d;
  while (d.is_zero()) d = random_laurent(rng);
  return random_laurent(rng) / d;
}

}  // namespace

TEST(Scalar, CancelsCommonFactors) {
  const Scalar a = (v(2) - Scalar(1)) / (v(1) - Scalar(1));
  EXPECT_EQ(a, v(1) + Scalar(1));
  EXPECT_TRUE(a.is_laurent());
  EXPECT_TRUE((Scalar() / v(3)).is_zero());
}

TEST(Scalar, RatioOfQDifferences) {
  const Scalar r = (q(1) - q(-1)) / (q(1) + q(-1));
  EXPECT_EQ(r * (v(4) + Scalar(1)), v(4) - Scalar(1));
  EXPECT_EQ(r.to_string(), "(q^2-1)/(q^2+1)");
}

TEST(Scalar, QNumbers) {
  EXPECT_EQ(qlie::q_number(0), Scalar());
  EXPECT_EQ(qlie::q_number(1), Scalar(1));
  EXPECT_EQ(qlie::q_number(3), q(2) + Scalar(1) + q(-2));
  EXPECT_EQ(qlie::q_number(3).to_string(), "q^2+1+q^-2");
  EXPECT_EQ(qlie::q_number(-2), -qlie::q_number(2));
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(qlie::q_number(k) * (q(1) - q(-1)), q(k) - q(-k)) << k;
}

TEST(Scalar, Conjugation) {
  EXPECT_EQ(qlie::q_conjugate(S("q^{3/2}")), S("q^{-3/2}"));
  EXPECT_EQ(qlie::q_conjugate(S("q+q^-1")), S("q+q^-1"));
  EXPECT_EQ(qlie::q_conjugate(S("-q^-1")), S("-q"));
  EXPECT_EQ(S("(q-q^-1)/(q^2+1)").bar(), S("(q^-1-q)/(q^-2+1)"));
}

TEST(Scalar, EvaluateAtOne) {
  EXPECT_EQ(qlie::evaluate_at_one(S("q+q^-1")), mpq_class(2));
  EXPECT_EQ(qlie::evaluate_at_one(S("(q-q^-1)/(q+q^-1)")), mpq_class(0));
  EXPECT_EQ(qlie::evaluate_at_one(qlie::q_number(3)), mpq_class(3));
  EXPECT_EQ(qlie::evaluate_at_one(S("(q-1)/(q^2-1)")), mpq_class(1, 2));
}

TEST(Scalar, SquareRootOfQ) {
  EXPECT_EQ(v(1) * v(1), q(1));
  EXPECT_EQ(S("q^{1/2}"), v(1));
  EXPECT_EQ(v(1).to_string(), "q^{1/2}");
  EXPECT_EQ(v(1).to_string(ScalarForm::v), "v");
}

TEST(Scalar, ParserAcceptsPrintedForms) {
  EXPECT_EQ(S("q^-1(q+q^-1)"), Scalar(1) + q(-2));
  EXPECT_EQ(S("-(q^2-q^-2)"), q(-2) - q(2));
  EXPECT_EQ(S("(q^2+1+q^-2)q^-1"), q(1) + q(-1) + q(-3));
  EXPECT_EQ(S("q^{5/2}(q+q^-1)+q^{-5/2}"), v(7) + v(3) + v(-5));
  EXPECT_EQ(S("(q-q^-1)^2"), q(2) - Scalar(2) + q(-2));
  EXPECT_EQ(S("3/4"), Scalar(mpq_class(3, 4)));
}

TEST(Scalar, ParserRejectsMalformedInput) {
  for (const char* bad : {"", "q^", "(q+1", "q)", "q^{1/3}", "2q**", "x"}) EXPECT_ANY_THROW(S(bad)) << bad;
}

TEST(Scalar, DivisionByZeroThrows) { EXPECT_ANY_THROW(Scalar(1) / Scalar()); }

TEST(Scalar, FieldAxiomsOnRandomSamples) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * (b * c), (a * b) * c);
    EXPECT_EQ(a - a, Scalar());
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
    EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
    EXPECT_EQ(a.bar().bar(), a);
  }
}

TEST(Scalar, StringRoundTripBothForms) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Scalar a = random_scalar(rng);
    for (ScalarForm f : {ScalarForm::q, ScalarForm::v}) {
      const std::string s = a.to_string(f);
      EXPECT_EQ(Scalar::parse(s), a) << s;
      EXPECT_EQ(Scalar::parse(s).to_string(f), s);
    }
  }
}
