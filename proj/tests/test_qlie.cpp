#include "qlie/suites.hpp"

#include <gtest/gtest.h>

#include <memory>

using namespace qlie;

namespace {

Scalar q(int k) { return Scalar::q_pow(k); }
Scalar S(const char* s) { return Scalar::parse(s); }

template <int N>
class Fixture : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    A = new Algebra(N);
    Q = new QuantumLieAlgebra(*A, fundamental(1));
  }
  static void TearDownTestSuite() {
    delete Q;
    delete A;
  }
  static Algebra* A;
  static QuantumLieAlgebra* Q;

  static std::vector<Scalar> coords(std::initializer_list<std::pair<const char*, Scalar>> terms) {
    std::vector<Scalar> c(Q->dim());
    for (const auto& [n, s] : terms) c[Q->index(n)] += s;
    return c;
  }
  static std::vector<Scalar> bracket(const char* a, const char* b) { return Q->beta()[Q->index(a)][Q->index(b)]; }
  static std::size_t pair(const char* a, const char* b) { return Q->index(a) * Q->dim() + Q->index(b); }
  static std::vector<Scalar> tensor(std::initializer_list<std::pair<std::pair<const char*, const char*>, Scalar>> terms) {
    std::vector<Scalar> t(Q->dim() * Q->dim());
    for (const auto& [ab, s] : terms) t[pair(ab.first, ab.second)] += s;
    return t;
  }
};
template <int N>
Algebra* Fixture<N>::A = nullptr;
template <int N>
QuantumLieAlgebra* Fixture<N>::Q = nullptr;

using Sl2 = Fixture<2>;
using Sl3 = Fixture<3>;

bool detects_corruption(QuantumLieAlgebra& Q, std::size_t i, std::size_t j, std::size_t k) {
  Q.corrupt_beta(i, j, k, Scalar(1));
  Check jac, thm;
  suites::check_jacobi(Q, false, jac);
  suites::check_product_identity(Q, thm);
  Q.corrupt_beta(i, j, k, Scalar(-1));
  return !jac.holds || !thm.holds;
}

}  // namespace

TEST_F(Sl2, Dimensions) {
  EXPECT_EQ(Q->dim(), 3u);
  EXPECT_EQ(Q->dim_lbar(), 4u);
  EXPECT_EQ(Q->names(), (std::vector<std::string>{"X+", "X-", "X0"}));
}

TEST_F(Sl2, BasisDefinitions) {
  EXPECT_EQ(Q->x("X+"), A->multiply(A->KH(1, -1), A->E(1)));
  EXPECT_EQ(Q->x("X0"), (Q->C() - A->KH(1, -2)) * (q(1) - q(-1)).inverse());
  EXPECT_FALSE(Q->coordinates(Q->C()).has_value());
  EXPECT_TRUE(Q->lbar_coordinates(Q->C()).has_value());
}

TEST_F(Sl2, Brackets) {
  EXPECT_EQ(bracket("X0", "X0"), coords({{"X0", q(1) - q(-1)}}));
  EXPECT_EQ(bracket("X+", "X-"), coords({{"X0", q(1) + q(-1)}}));
  EXPECT_EQ(bracket("X+", "X0"), coords({{"X+", -q(-1)}}));
  EXPECT_EQ(bracket("X0", "X+"), coords({{"X+", q(1)}}));
  EXPECT_EQ(bracket("X+", "X+"), coords({}));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      EXPECT_EQ(Q->beta()[a][b], *Q->coordinates(A->ad(Q->basis()[a], Q->basis()[b])));
}

TEST_F(Sl2, SigmaFixesHighestTensor) {
  const std::size_t pp = pair("X+", "X+");
  for (std::size_t r = 0; r < 9; ++r) EXPECT_EQ(Q->sigma()(r, pp), Scalar(r == pp ? 1 : 0));
}

TEST_F(Sl2, MultipliedSigma) {
  const Element lhs = Q->multiply_out(suites::column(Q->sigma(), pair("X+", "X-")));
  const Element rhs = Q->product(Q->index("X+"), Q->index("X-")) - A->multiply(Q->x("X0"), Q->C()) * (q(1) + q(-1));
  EXPECT_EQ(lhs, rhs);
}

TEST_F(Sl2, Antisymmetriser) {
  const Scalar d = casimir_eigenvalue();
  EXPECT_EQ(suites::scaled(suites::column(Q->gamma(), pair("X+", "X0")), d),
            tensor({{{"X+", "X0"}, q(-2)}, {{"X0", "X+"}, Scalar(-1)}}));
  EXPECT_EQ(suites::column(Q->gamma(), pair("X-", "X+")), suites::scaled(suites::column(Q->gamma(), pair("X+", "X-")), -1));
  EXPECT_TRUE(suites::all_zero(suites::column(Q->gamma(), pair("X+", "X+"))));
  EXPECT_TRUE(suites::all_zero(suites::column(Q->gamma(), pair("X-", "X-"))));
  EXPECT_EQ(Q->gamma().kernel().size(), 6u);
}

TEST_F(Sl2, AxiomsHold) {
  const Report r = suites::axioms(*Q);
  EXPECT_TRUE(r.ok()) << r.to_text(true);
}

TEST_F(Sl2, EveryStructureConstantMatters) {
  QuantumLieAlgebra copy = *Q;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(detects_corruption(copy, i, j, k)) << i << j << k;
  Check c;
  suites::check_jacobi(copy, false, c);
  EXPECT_TRUE(c.holds);
}

TEST_F(Sl2, CorruptionReportsWitness) {
  QuantumLieAlgebra copy = *Q;
  copy.corrupt_beta(0, 1, 2, S("q"));
  const Report r = suites::axioms(copy);
  EXPECT_FALSE(r.ok());
  bool witness = false;
  for (const auto& c : r.checks()) witness = witness || (c.asserted && !c.holds && !c.detail.empty());
  EXPECT_TRUE(witness);
}

TEST_F(Sl3, Dimensions) {
  EXPECT_EQ(Q->dim(), 8u);
  EXPECT_EQ(Q->dim_lbar(), 9u);
  EXPECT_EQ(Q->names(), (std::vector<std::string>{"T1", "T2", "X1", "X-1", "X2", "X-2", "X12", "X-12"}));
}

TEST_F(Sl3, LongBrackets) {
  EXPECT_EQ(bracket("X12", "X-12"), coords({{"T1", -q(-1)}, {"T2", 1}}));
  EXPECT_EQ(bracket("T2", "T2"), coords({{"T1", -(q(2) - q(-2))}, {"T2", q(3) - q(-3)}}));
  EXPECT_EQ(bracket("X2", "X-2"), coords({{"T1", q(-1) * (q(1) - q(-1))}, {"T2", -q(1)}}));
  EXPECT_EQ(bracket("X1", "X-1"), coords({{"T1", 1}}));
}

TEST_F(Sl3, RaisingTheCartanPart) {
  EXPECT_EQ(A->ad_E(1, Q->x("T1")), Q->x("X1") * (q(1) + q(-1)));
  EXPECT_EQ(A->ad_E(2, Q->x("T2")), Q->x("X2") * (q(1) + q(-1)));
}

TEST_F(Sl3, AntisymmetriserKernel) {
  EXPECT_EQ(Q->gamma().kernel().size(), 36u);
  const auto w27 = suites::parse_tensor(*Q, "X12*X12:1");
  EXPECT_TRUE(suites::all_zero(Q->gamma().apply(w27)));
}

TEST_F(Sl3, TensorCoordinatesRoundTrip) {
  const auto t = suites::parse_tensor(*Q, tables::sl3_highest_weights[3].tensor);
  const auto back = Q->tensor_coordinates(Q->tensor_from_coordinates(t));
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, t);
}

TEST_F(Sl3, StructureConstantsAreSensitive) {
  QuantumLieAlgebra copy = *Q;
  const std::size_t d = 8;
  for (std::size_t flat = 0; flat < d * d * d; flat += 13)
    EXPECT_TRUE(detects_corruption(copy, flat / (d * d), (flat / d) % d, flat % d)) << flat;
}

TEST(QuantumLieAlgebra, Sl4Dimensions) {
  Algebra A(4);
  QuantumLieAlgebra Q(A, fundamental(1));
  EXPECT_EQ(Q.dim(), 15u);
  EXPECT_EQ(Q.dim_lbar(), 16u);
}

TEST(QuantumLieAlgebra, DualFundamentalWeight) {
  Algebra A(3);
  QuantumLieAlgebra Q(A, fundamental(2));
  EXPECT_EQ(Q.dim(), 8u);
  EXPECT_TRUE(A.is_central(Q.C()));
}
