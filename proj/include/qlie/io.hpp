#pragma once

/**
 * @file io.hpp
 * @brief JSON export and import of elements, rule sets, bases and matrices.
 *
 * Scalars are stored as canonical strings (Scalar::to_string) and words in
 * RuleSet::word_string syntax, so importing and re-exporting reproduces the
 * document byte for byte.
 */

#include "qlie/qlie.hpp"
#include "qlie/suites.hpp"
#include "qlie/tables.hpp"

#include "json.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qlie::io {

using json = nlohmann::json;

// ---- elements ------------------------------------------------------------------

inline json to_json(const rw::RuleSet& rs, const Element& x) {
  json terms = json::array();
  for (const auto& [w, c] : x) terms.push_back({{"word", rs.word_string(w)}, {"coeff", c.to_string()}});
  return terms;
}

inline Element element_from_json(const rw::RuleSet& rs, const json& j) {
  Element x;
  for (const auto& t : j) x.add(rs.parse_word(t.at("word").get<std::string>()), Scalar::parse(t.at("coeff").get<std::string>()));
  return x;
}

inline json to_json(const rw::RuleSet& rs, const TensorElement& t) {
  json terms = json::array();
  for (const auto& [p, c] : t)
    terms.push_back({{"left", rs.word_string(p.first)}, {"right", rs.word_string(p.second)}, {"coeff", c.to_string()}});
  return terms;
}

inline TensorElement tensor_from_json(const rw::RuleSet& rs, const json& j) {
  TensorElement t;
  for (const auto& e : j)
    t.add({rs.parse_word(e.at("left").get<std::string>()), rs.parse_word(e.at("right").get<std::string>())},
          Scalar::parse(e.at("coeff").get<std::string>()));
  return t;
}

// ---- rule sets -------------------------------------------------------------------

inline json weight_json(const Weight& w, int rank) {
  json a = json::array();
  for (int i = 0; i < rank; ++i) a.push_back(w[static_cast<std::size_t>(i)]);
  return a;
}

inline Weight weight_from_json(const json& j) {
  Weight w;
  if (j.size() > static_cast<std::size_t>(kMaxRank)) throw std::invalid_argument("weight has too many coordinates");
  for (std::size_t i = 0; i < j.size(); ++i) w[i] = j[i].get<int>();
  return w;
}

inline json to_json(const rw::RuleSet& rs) {
  json alpha = json::array();
  for (const auto& s : rs.alphabet())
    alpha.push_back({{"name", s.name}, {"degree", s.degree}, {"side", rw::side_name(s.side)}, {"root", weight_json(s.root, rs.rank())}});
  json rules = json::array();
  for (const auto& r : rs.rules()) rules.push_back({{"lhs", rs.word_string(r.lhs)}, {"rhs", to_json(rs, r.rhs)}});
  return {{"rank", rs.rank()}, {"alphabet", alpha}, {"rules", rules}};
}

/// Rebuilds a rule set; every rule goes through the termination witness check.
inline rw::RuleSet rules_from_json(const json& j) {
  std::vector<rw::Symbol> alpha;
  for (const auto& s : j.at("alphabet"))
    alpha.push_back({s.at("name").get<std::string>(), s.value("degree", 1), rw::side_from_name(s.value("side", std::string("plain"))),
                     s.contains("root") ? weight_from_json(s.at("root")) : Weight{}});
  rw::RuleSet rs(std::move(alpha), j.value("rank", 0));
  for (const auto& r : j.at("rules")) rs.add_rule(rs.parse_word(r.at("lhs").get<std::string>()), element_from_json(rs, r.at("rhs")));
  return rs;
}

// ---- matrices ------------------------------------------------------------------------

inline json to_json(const Matrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k)
      if (!m(i, k).is_zero()) entries.push_back({i, k, m(i, k).to_string()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline Matrix matrix_from_json(const json& j) {
  Matrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  for (const auto& e : j.at("entries")) {
    const auto i = e.at(0).get<std::size_t>(), k = e.at(1).get<std::size_t>();
    if (i >= m.rows() || k >= m.cols()) throw std::out_of_range("matrix entry out of range");
    m(i, k) = Scalar::parse(e.at(2).get<std::string>());
  }
  return m;
}

// ---- quantum Lie algebra objects -------------------------------------------------------

inline json header(const QuantumLieAlgebra& Q) {
  return {{"n", Q.algebra().n()}, {"lambda", weight_json(Q.lambda(), Q.algebra().rank())}, {"basis_names", Q.names()}};
}

inline json basis_json(const QuantumLieAlgebra& Q) {
  json j = header(Q);
  json els = json::array();
  for (std::size_t k = 0; k < Q.dim(); ++k) els.push_back({{"name", Q.names()[k]}, {"terms", to_json(Q.algebra().rules(), Q.basis()[k])}});
  j["elements"] = els;
  return j;
}

inline std::vector<std::pair<std::string, Element>> basis_from_json(const rw::RuleSet& rs, const json& j) {
  std::vector<std::pair<std::string, Element>> out;
  for (const auto& e : j.at("elements")) out.emplace_back(e.at("name").get<std::string>(), element_from_json(rs, e.at("terms")));
  return out;
}

inline json central_json(const QuantumLieAlgebra& Q) {
  json j = header(Q);
  j.erase("basis_names");
  j["terms"] = to_json(Q.algebra().rules(), Q.C());
  return j;
}

inline json matrix_json(const QuantumLieAlgebra& Q, const Matrix& m, bool bar) {
  json j = header(Q);
  if (bar) j["basis_names"].push_back("C");
  j["index"] = "row and column (a, b) of a tensor basis vector x_a (x) x_b is a * dim + b; column = input";
  j["matrix"] = to_json(m);
  return j;
}

inline json coordinates_tensor_json(const QuantumLieAlgebra& Q, const std::vector<Scalar>& t) {
  const std::size_t d = Q.dim();
  json terms = json::array();
  for (std::size_t kl = 0; kl < d * d; ++kl)
    if (!t[kl].is_zero()) terms.push_back({{"left", Q.names()[kl / d]}, {"right", Q.names()[kl % d]}, {"coeff", t[kl].to_string()}});
  return terms;
}

inline std::vector<Scalar> coordinates_tensor_from_json(const QuantumLieAlgebra& Q, const json& j) {
  const std::size_t d = Q.dim();
  std::vector<Scalar> t(d * d);
  for (const auto& e : j)
    t[Q.index(e.at("left").get<std::string>()) * d + Q.index(e.at("right").get<std::string>())] +=
        Scalar::parse(e.at("coeff").get<std::string>());
  return t;
}

/// The six highest-weight vectors of sl(3)_q (x) sl(3)_q in basis coordinates.
inline json highest_weights_json(const QuantumLieAlgebra& Q) {
  if (Q.algebra().n() != 3 || Q.dim() != 8) throw std::invalid_argument("highest weights are available for sl(3) at w_1");
  json j = header(Q);
  json vs = json::array();
  for (const auto& hw : tables::sl3_highest_weights) {
    vs.push_back({{"name", std::string(hw.name)},
                  {"weight", {hw.weight[0], hw.weight[1]}},
                  {"gamma_eigenvalue_times_d", std::string(hw.gamma)},
                  {"terms", coordinates_tensor_json(Q, suites::parse_tensor(Q, hw.tensor))}});
  }
  j["vectors"] = vs;
  return j;
}

// ---- bracket table -------------------------------------------------------------------------

inline json coords_json(const QuantumLieAlgebra& Q, const std::vector<Scalar>& c) {
  json o = json::object();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) o[Q.names()[k]] = c[k].to_string();
  return o;
}

inline json table_json(const QuantumLieAlgebra& Q) {
  json j = header(Q);
  json br = json::array();
  for (std::size_t a = 0; a < Q.dim(); ++a)
    for (std::size_t b = 0; b < Q.dim(); ++b)
      br.push_back({{"left", Q.names()[a]}, {"right", Q.names()[b]}, {"result", coords_json(Q, Q.beta()[a][b])}});
  j["brackets"] = br;
  return j;
}

inline Beta beta_from_json(const QuantumLieAlgebra& Q, const json& j) {
  const std::size_t d = Q.dim();
  Beta b(d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d)));
  for (const auto& e : j.at("brackets")) {
    auto& cell = b[Q.index(e.at("left").get<std::string>())][Q.index(e.at("right").get<std::string>())];
    for (const auto& [k, v] : e.at("result").items()) cell[Q.index(k)] = Scalar::parse(v.get<std::string>());
  }
  return b;
}

}  // namespace qlie::io
