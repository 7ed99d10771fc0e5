#include "qlie/io.hpp"

#include <gtest/gtest.h>

using namespace qlie;
using io::json;

namespace {

template <int N>
struct Env {
  Algebra A{N};
  QuantumLieAlgebra Q{A, fundamental(1)};
};

template <int N>
const Env<N>& env() {
  static const Env<N> e;
  return e;
}

void expect_same_rules(const rw::RuleSet& a, const rw::RuleSet& b) {
  ASSERT_EQ(a.alphabet().size(), b.alphabet().size());
  for (std::size_t i = 0; i < a.alphabet().size(); ++i) {
    EXPECT_EQ(a.alphabet()[i].name, b.alphabet()[i].name);
    EXPECT_EQ(a.alphabet()[i].degree, b.alphabet()[i].degree);
    EXPECT_EQ(a.alphabet()[i].side, b.alphabet()[i].side);
    EXPECT_EQ(a.alphabet()[i].root, b.alphabet()[i].root);
  }
  ASSERT_EQ(a.rules().size(), b.rules().size());
  for (std::size_t i = 0; i < a.rules().size(); ++i) {
    EXPECT_EQ(a.rules()[i].lhs, b.rules()[i].lhs);
    EXPECT_EQ(a.rules()[i].rhs, b.rules()[i].rhs);
  }
}

}  // namespace

TEST(Io, ElementRoundTrip) {
  const auto& e = env<2>();
  const json j = io::to_json(e.A.rules(), e.Q.C());
  EXPECT_EQ(io::element_from_json(e.A.rules(), j), e.Q.C());
  EXPECT_EQ(io::to_json(e.A.rules(), io::element_from_json(e.A.rules(), j)).dump(), j.dump());
}

TEST(Io, TensorRoundTrip) {
  const auto& e = env<2>();
  const TensorElement t = e.A.coproduct(e.A.multiply(e.A.E(1), e.A.F(1)));
  EXPECT_EQ(io::tensor_from_json(e.A.rules(), io::to_json(e.A.rules(), t)), t);
}

TEST(Io, RulesRoundTrip) {
  for (const rw::RuleSet& rs : {env<2>().A.rules(), env<3>().A.rules(), suites::y_rules(), suites::xc_rules()}) {
    const json j = io::to_json(rs);
    const rw::RuleSet back = io::rules_from_json(j);
    expect_same_rules(rs, back);
    EXPECT_EQ(io::to_json(back).dump(), j.dump());
  }
}

TEST(Io, ImportedRulesKeepTheirCertificate) {
  const rw::RuleSet back = io::rules_from_json(io::to_json(env<3>().A.rules()));
  const auto rep = rw::check_confluence(back);
  EXPECT_EQ(rep.ambiguities, 240u);
  EXPECT_TRUE(rep.confluent());
}

TEST(Io, ImportRejectsNonDecreasingRule) {
  json j = io::to_json(suites::y_rules());
  j["rules"][0]["rhs"] = json::array({{{"word", "Y+ Y0 Y0"}, {"coeff", "1"}}});
  EXPECT_THROW(io::rules_from_json(j), std::invalid_argument);
}

TEST(Io, BasisRoundTrip) {
  const auto& e = env<3>();
  const json j = io::basis_json(e.Q);
  const auto back = io::basis_from_json(e.A.rules(), j);
  ASSERT_EQ(back.size(), e.Q.dim());
  for (std::size_t k = 0; k < back.size(); ++k) {
    EXPECT_EQ(back[k].first, e.Q.names()[k]);
    EXPECT_EQ(back[k].second, e.Q.basis()[k]);
  }
}

TEST(Io, CentralElementRoundTrip) {
  const auto& e = env<3>();
  const json j = io::central_json(e.Q);
  EXPECT_EQ(io::element_from_json(e.A.rules(), j.at("terms")), e.Q.C());
}

TEST(Io, MatricesRoundTrip) {
  const auto& e = env<2>();
  for (const Matrix* m : {&e.Q.sigma(), &e.Q.sigma_bar(), &e.Q.gamma()}) {
    const json j = io::to_json(*m);
    const Matrix back = io::matrix_from_json(j);
    EXPECT_EQ(back, *m);
    EXPECT_EQ(io::to_json(back).dump(), j.dump());
  }
}

TEST(Io, MatrixImportChecksBounds) {
  const json j = {{"rows", 2}, {"cols", 2}, {"entries", json::array({json::array({2, 0, "1"})})}};
  EXPECT_THROW(io::matrix_from_json(j), std::out_of_range);
  const json bad = {{"rows", 1}, {"cols", 1}, {"entries", json::array({json::array({0, 0, "q^"})})}};
  EXPECT_ANY_THROW(io::matrix_from_json(bad));
}

TEST(Io, HighestWeightsRoundTrip) {
  const auto& e = env<3>();
  const json j = io::highest_weights_json(e.Q);
  ASSERT_EQ(j.at("vectors").size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto t = io::coordinates_tensor_from_json(e.Q, j["vectors"][i]["terms"]);
    EXPECT_EQ(t, suites::parse_tensor(e.Q, tables::sl3_highest_weights[i].tensor));
    EXPECT_EQ(io::coordinates_tensor_json(e.Q, t).dump(), j["vectors"][i]["terms"].dump());
  }
  EXPECT_THROW(io::highest_weights_json(env<2>().Q), std::invalid_argument);
}

TEST(Io, TableRoundTrip) {
  for (const QuantumLieAlgebra* Q : {&env<2>().Q, &env<3>().Q}) {
    const json j = io::table_json(*Q);
    EXPECT_EQ(io::beta_from_json(*Q, j), Q->beta());
    EXPECT_EQ(j.at("brackets").size(), Q->dim() * Q->dim());
  }
}

TEST(Io, ExportIsDeterministic) {
  const auto& e = env<3>();
  EXPECT_EQ(io::table_json(e.Q).dump(), io::table_json(e.Q).dump());
  Algebra A(3);
  QuantumLieAlgebra Q(A, fundamental(1));
  EXPECT_EQ(io::basis_json(Q).dump(), io::basis_json(e.Q).dump());
  EXPECT_EQ(io::matrix_json(Q, Q.sigma(), false).dump(), io::matrix_json(e.Q, e.Q.sigma(), false).dump());
}
