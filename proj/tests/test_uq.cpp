#include "qlie/suites.hpp"

#include <gtest/gtest.h>

using namespace qlie;

namespace {

Scalar q(int k) { return Scalar::q_pow(k); }
Scalar qd() { return q(1) - q(-1); }

class Sl2 : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { A = new Algebra(2); }
  static void TearDownTestSuite() { delete A; }
  static Algebra* A;
};
Algebra* Sl2::A = nullptr;

class Sl3 : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { A = new Algebra(3); }
  static void TearDownTestSuite() { delete A; }
  static Algebra* A;
};
Algebra* Sl3::A = nullptr;

}  // namespace

TEST(Algebra, SupportedRanks) {
  EXPECT_THROW(Algebra(1), std::invalid_argument);
  EXPECT_THROW(Algebra(5), std::invalid_argument);
}

TEST_F(Sl2, CertifiedOnConstruction) {
  ASSERT_TRUE(A->certificate().has_value());
  EXPECT_EQ(A->certificate()->ambiguities, 18u);
  EXPECT_TRUE(A->certificate()->confluent());
}

TEST_F(Sl2, CommutatorOfEAndF) {
  const Element expect = A->multiply(A->F(1), A->E(1)) + (A->KH(1, 2) - A->KH(1, -2)) * qd().inverse();
  EXPECT_EQ(A->multiply(A->E(1), A->F(1)), expect);
}

TEST_F(Sl2, UnitAndAssociativity) {
  const Element x = A->E(1) + A->KH(1, -1) * q(2), y = A->F(1) * q(-1) + A->one();
  EXPECT_EQ(A->multiply(A->one(), x), x);
  EXPECT_EQ(A->multiply(A->multiply(x, y), x), A->multiply(x, A->multiply(y, x)));
}

TEST_F(Sl2, Coproduct) {
  EXPECT_EQ(A->coproduct(A->E(1)), A->tensor(A->E(1), A->KH(1, -1)) + A->tensor(A->KH(1), A->E(1)));
  const Element k = A->K(fundamental(1));
  EXPECT_EQ(A->coproduct(k), A->tensor(k, k));
  EXPECT_EQ(A->coproduct(A->one()), A->tensor(A->one(), A->one()));
}

TEST_F(Sl2, AntipodeAndCounit) {
  EXPECT_EQ(A->antipode(A->E(1)), A->E(1) * (-q(-1)));
  EXPECT_EQ(A->antipode(A->E(1)), -A->multiply({A->KH(1, -1), A->E(1), A->KH(1)}));
  EXPECT_EQ(A->antipode(A->K(fundamental(1))), A->K(-fundamental(1)));
  EXPECT_EQ(A->counit(A->K(fundamental(1)) + A->E(1)), Scalar(1));
}

TEST_F(Sl2, AdjointActionOnTheSeed) {
  const Element seed = A->KH(1, -2);
  EXPECT_EQ(A->ad_E(1, seed), A->multiply(A->KH(1, -1), A->E(1)) * qd());
  for (const Element& x : {A->E(1), A->F(1), A->K(fundamental(1)), A->multiply(A->E(1), A->F(1))})
    EXPECT_EQ(A->ad(x, A->one()), A->one() * A->counit(x));
}

TEST_F(Sl2, KSequence) {
  EXPECT_EQ(A->K_element(0, fundamental(1)), A->KH(1, -2));
  const Element qEF_FE = A->multiply(A->E(1), A->F(1)) * q(1) - A->multiply(A->F(1), A->E(1)) * q(-1);
  EXPECT_EQ(A->K_element(1, fundamental(1)), qEF_FE * (-qd()));
  EXPECT_EQ(A->central_element(fundamental(1)), A->KH(1, -2) + qEF_FE * (qd() / (q(1) + q(-1))));
}

TEST_F(Sl2, Centrality) {
  const Element C = A->central_element(fundamental(1));
  EXPECT_TRUE(A->is_central(C));
  EXPECT_FALSE(A->is_central(A->E(1)));
  EXPECT_FALSE(A->is_central(C + A->E(1)));
}

TEST_F(Sl2, HopfLaws) { EXPECT_TRUE(suites::hopf_suite(*A, 30, 1u).ok()); }

TEST_F(Sl3, WeightCommutation) {
  const Element k1 = A->K(fundamental(1)), k2 = A->K(fundamental(2));
  EXPECT_EQ(A->multiply(k1, A->E(1)), A->multiply(A->E(1), k1) * Scalar::v_pow(1));
  EXPECT_EQ(A->multiply(k2, A->E(1)), A->multiply(A->E(1), k2));
  EXPECT_EQ(A->ad_K(fundamental(1), A->E(1)), A->E(1) * Scalar::v_pow(1));
  EXPECT_EQ(A->ad_K(fundamental(2), A->E(1)), A->E(1));
}

TEST_F(Sl3, SerreRelations) {
  const Element e1 = A->E(1), e2 = A->E(2), f1 = A->F(1), f2 = A->F(2);
  const Scalar two = q_number(2);
  EXPECT_TRUE((A->multiply({e1, e1, e2}) - A->multiply({e1, e2, e1}) * two + A->multiply({e2, e1, e1})).is_zero());
  EXPECT_TRUE((A->multiply({e2, e2, e1}) - A->multiply({e2, e1, e2}) * two + A->multiply({e1, e2, e2})).is_zero());
  EXPECT_TRUE((A->multiply({f1, f1, f2}) - A->multiply({f1, f2, f1}) * two + A->multiply({f2, f1, f1})).is_zero());
  EXPECT_EQ(A->multiply(e1, f2), A->multiply(f2, e1));
}

TEST_F(Sl3, CentralElement) {
  const Weight w = fundamental(1);
  const Element C = A->K_element(0, w) - A->K_element(1, w) * (q_number(2) / q_number(3)) + A->K_element(2, w) * q_number(3).inverse();
  EXPECT_EQ(A->central_element(w), C);
  EXPECT_TRUE(A->is_central(C));
  EXPECT_FALSE(A->is_central(C + A->E(1)));
}

TEST_F(Sl3, AdjointMatchesHopfFormula) {
  const Element y = A->multiply(A->F(2), A->E(1)) + A->K(fundamental(2));
  for (const Element& x : {A->E(1), A->F(2), A->K(fundamental(1)), A->multiply(A->E(2), A->F(1))})
    EXPECT_EQ(A->ad(x, y), A->ad_hopf(x, y));
}

TEST_F(Sl3, AntipodeIsAntiMultiplicative) {
  const Element x = A->E(1) + A->F(2), y = A->multiply(A->K(fundamental(1)), A->E(2));
  EXPECT_EQ(A->antipode(A->multiply(x, y)), A->multiply(A->antipode(y), A->antipode(x)));
}

TEST(Centrality, UpToSl4) {
  for (int n = 2; n <= 4; ++n) {
    Algebra A(n);
    EXPECT_TRUE(A.is_central(A.central_element(fundamental(1)))) << n;
    EXPECT_TRUE(suites::centrality(A).ok()) << n;
  }
}
