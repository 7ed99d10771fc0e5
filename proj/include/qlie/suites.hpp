#pragma once

/**
 * @file suites.hpp
 * @brief Verification suites over U_q(sl(n)) and its quantum Lie algebras.
 *
 * Each suite returns a Report. Asserted checks decide the outcome; reported
 * checks only record a verdict. Every check that compares two sides prints a
 * witness (the offending index and both sides) when it fails.
 */

#include "qlie/qlie.hpp"
#include "qlie/report.hpp"
#include "qlie/tables.hpp"

#include <array>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace qlie::suites {

// ---- parsing of oracle cells ---------------------------------------------------

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

/// "Name:coef,..." or "0" as coordinates in the named basis of Q.
inline std::vector<Scalar> parse_cell(const QuantumLieAlgebra& Q, std::string_view cell) {
  std::vector<Scalar> c(Q.dim());
  if (cell == "0") return c;
  for (auto part : split(cell, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("bad cell '" + std::string(cell) + "'");
    c[Q.index(std::string(part.substr(0, colon)))] += Scalar::parse(part.substr(colon + 1));
  }
  return c;
}

inline std::size_t pair_index(const QuantumLieAlgebra& Q, std::string_view ab) {
  const auto star = ab.find('*');
  if (star == std::string_view::npos) throw std::invalid_argument("bad tensor label '" + std::string(ab) + "'");
  return Q.index(std::string(ab.substr(0, star))) * Q.dim() + Q.index(std::string(ab.substr(star + 1)));
}

/// "A*B:coef,..." or "0" as flattened L (x) L coordinates.
inline std::vector<Scalar> parse_tensor(const QuantumLieAlgebra& Q, std::string_view cell) {
  std::vector<Scalar> c(Q.dim() * Q.dim());
  if (cell == "0") return c;
  for (auto part : split(cell, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("bad tensor cell '" + std::string(cell) + "'");
    c[pair_index(Q, part.substr(0, colon))] += Scalar::parse(part.substr(colon + 1));
  }
  return c;
}

inline std::string format_tensor(const QuantumLieAlgebra& Q, const std::vector<Scalar>& t) {
  const std::size_t d = Q.dim();
  std::string s;
  bool first = true;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      if (t[k * d + l].is_zero()) continue;
      append_term(s, t[k * d + l], Q.names()[k] + " (x) " + Q.names()[l], first);
      first = false;
    }
  return first ? "0" : s;
}

inline std::vector<Scalar> column(const Matrix& m, std::size_t j) {
  std::vector<Scalar> c(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) c[i] = m(i, j);
  return c;
}

inline bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline std::vector<Scalar> scaled(std::vector<Scalar> v, const Scalar& s) {
  for (auto& x : v)
    if (!x.is_zero()) x *= s;
  return v;
}

inline std::string side_by_side(const std::string& lhs, const std::string& rhs) { return "lhs = " + lhs + "; rhs = " + rhs; }

// ---- braid relation on sparse columns ------------------------------------------

/// Checks s12 s23 s12 = s23 s12 s23 for s acting on V (x) V with dim V = D.
inline bool braid_relation(const Matrix& s, std::size_t D, std::string* witness = nullptr) {
  using Vec = std::map<std::size_t, Scalar>;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(D * D);
  for (std::size_t j = 0; j < D * D; ++j)
    for (std::size_t i = 0; i < D * D; ++i)
      if (!s(i, j).is_zero()) cols[j].push_back({i, s(i, j)});
  auto accumulate = [](Vec& out, std::size_t k, const Scalar& c) {
    auto [it, fresh] = out.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  auto s12 = [&](const Vec& v) {
    Vec out;
    for (const auto& [idx, c] : v)
      for (const auto& [r, x] : cols[idx / D]) accumulate(out, r * D + idx % D, c * x);
    return out;
  };
  auto s23 = [&](const Vec& v) {
    Vec out;
    for (const auto& [idx, c] : v)
      for (const auto& [r, x] : cols[idx % (D * D)]) accumulate(out, (idx / (D * D)) * D * D + r, c * x);
    return out;
  };
  for (std::size_t e = 0; e < D * D * D; ++e) {
    const Vec basis{{e, Scalar(1)}};
    if (s12(s23(s12(basis))) != s23(s12(s23(basis)))) {
      if (witness) *witness = "first differing column " + std::to_string(e);
      return false;
    }
  }
  return true;
}

// ---- quantum Lie algebra axioms -------------------------------------------------

inline Matrix bracket_operator(const QuantumLieAlgebra& Q, const std::vector<Scalar>& c, bool right) {
  const std::size_t d = Q.dim();
  Matrix m(d, d);
  for (std::size_t k = 0; k < d; ++k)
    if (!c[k].is_zero()) m = m + c[k] * (right ? Q.right_matrix(k) : Q.ad_matrix(k));
  return m;
}

/// kernel(gamma) is killed by beta.
inline void check_antisymmetry(const QuantumLieAlgebra& Q, Check& c) {
  const auto ker = Q.gamma().kernel();
  for (const auto& t : ker) {
    const auto b = Q.apply_beta(t);
    if (!all_zero(b)) {
      c.detail = "beta(" + format_tensor(Q, t) + ") = " + Q.format(b);
      return;
    }
  }
  c.holds = true;
  c.detail = "dim ker gamma = " + std::to_string(ker.size());
}

/// ad[x_i, x_j] = sum gamma_ij^lm ad x_l ad x_m (right = false), or the
/// balanced form rad[x_i, x_j] = sum gamma_ij^lm rad x_m rad x_l (right = true).
inline void check_jacobi(const QuantumLieAlgebra& Q, bool right, Check& c) {
  const std::size_t d = Q.dim();
  std::vector<Matrix> ops(d), prods(d * d);
  for (std::size_t k = 0; k < d; ++k) ops[k] = right ? Q.right_matrix(k) : Q.ad_matrix(k);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t m = 0; m < d; ++m) prods[l * d + m] = right ? ops[m] * ops[l] : ops[l] * ops[m];
  const Matrix& g = Q.gamma();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix lhs = bracket_operator(Q, Q.beta()[i][j], right);
      Matrix rhs(d, d);
      for (std::size_t lm = 0; lm < d * d; ++lm)
        if (!g(lm, i * d + j).is_zero()) rhs = rhs + g(lm, i * d + j) * prods[lm];
      if (lhs != rhs) {
        // Locate one offending argument x_k.
        for (std::size_t k = 0; k < d; ++k) {
          std::vector<Scalar> l(d), r(d);
          for (std::size_t a = 0; a < d; ++a) {
            l[a] = lhs(a, k);
            r[a] = rhs(a, k);
          }
          if (l != r) {
            c.detail = "(" + Q.names()[i] + "," + Q.names()[j] + ") on " + Q.names()[k] + ": " +
                       side_by_side(Q.format(l), Q.format(r));
            break;
          }
        }
        return;
      }
    }
  c.holds = true;
  c.detail = std::to_string(d * d) + " pairs";
}

/// x_i x_j - sum sigma_ij^kl x_k x_l = C [x_i, x_j] in U.
inline void check_product_identity(const QuantumLieAlgebra& Q, Check& c) {
  const Algebra& A = Q.algebra();
  const std::size_t d = Q.dim();
  const Matrix& s = Q.sigma();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Element lhs = Q.product(i, j);
      for (std::size_t kl = 0; kl < d * d; ++kl)
        if (!s(kl, i * d + j).is_zero()) lhs.add_scaled(Q.product(kl / d, kl % d), -s(kl, i * d + j));
      const Element rhs = A.multiply(Q.C(), Q.combination(Q.beta()[i][j]));
      if (lhs != rhs) {
        c.detail = "(" + Q.names()[i] + "," + Q.names()[j] + "): " + side_by_side(A.str(lhs), A.str(rhs));
        return;
      }
    }
  c.holds = true;
  c.detail = std::to_string(d * d) + " pairs";
}

/// ad C acts on L as (q^2 - 1 + q^-2) id.
inline void check_ad_casimir(const QuantumLieAlgebra& Q, Check& c) {
  const Algebra& A = Q.algebra();
  const Scalar ev = casimir_eigenvalue();
  for (std::size_t k = 0; k < Q.dim(); ++k) {
    const Element lhs = A.ad(Q.C(), Q.basis()[k]);
    if (lhs != Q.basis()[k] * ev) {
      const auto co = Q.coordinates(lhs);
      c.detail = "ad C(" + Q.names()[k] + ") = " + (co ? Q.format(*co) : A.str(lhs));
      return;
    }
  }
  c.holds = true;
  c.detail = "eigenvalue " + ev.to_string();
}

/// beta_ji^k = -bar(beta_ij^k).
inline void check_conjugation(const QuantumLieAlgebra& Q, Check& c) {
  const std::size_t d = Q.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Scalar> want(d);
      for (std::size_t k = 0; k < d; ++k) want[k] = -Q.beta()[i][j][k].bar();
      if (Q.beta()[j][i] != want) {
        c.detail = "[" + Q.names()[j] + "," + Q.names()[i] + "] = " + Q.format(Q.beta()[j][i]) +
                   " but -[" + Q.names()[i] + "," + Q.names()[j] + "]^bar = " + Q.format(want);
        return;
      }
    }
  c.holds = true;
}

/// beta at v = 1 is antisymmetric.
inline void check_classical_limit(const QuantumLieAlgebra& Q, Check& c) {
  const std::size_t d = Q.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto a = Q.beta()[i][j][k].eval_at_one(), b = Q.beta()[j][i][k].eval_at_one();
        if (a + b != 0) {
          c.detail = "(" + Q.names()[i] + "," + Q.names()[j] + ") component " + Q.names()[k] + ": " + a.get_str() +
                     " vs " + b.get_str();
          return;
        }
      }
  c.holds = true;
}

inline void check_braid(const Matrix& s, std::size_t D, Check& c) {
  std::string w;
  c.holds = braid_relation(s, D, &w);
  c.detail = c.holds ? "dimension " + std::to_string(D) + "^3" : w;
}

/// The axiom checks. Balancedness is asserted for sl(2) only; the braid
/// relation of sigma itself is always reported.
inline Report axioms(const QuantumLieAlgebra& Q) {
  const int n = Q.algebra().n();
  Report r("axioms sl(" + std::to_string(n) + ")");
  r.run("antisymmetry: ker gamma in ker beta", true, [&](Check& c) { check_antisymmetry(Q, c); });
  r.run("quantum Jacobi identity", true, [&](Check& c) { check_jacobi(Q, false, c); });
  r.run("right quantum Jacobi identity (balanced)", n == 2, [&](Check& c) { check_jacobi(Q, true, c); });
  r.run("x y - m sigma(x (x) y) = C [x,y]", true, [&](Check& c) { check_product_identity(Q, c); });
  r.run("ad C = (q^2-1+q^-2) id", true, [&](Check& c) { check_ad_casimir(Q, c); });
  if (n <= 3)
    r.run("sigma-bar braid relation", true, [&](Check& c) { check_braid(Q.sigma_bar(), Q.dim() + 1, c); });
  r.run("sigma braid relation", false, [&](Check& c) { check_braid(Q.sigma(), Q.dim(), c); });
  r.run("q-conjugation antisymmetry", n <= 3, [&](Check& c) { check_conjugation(Q, c); });
  r.run("classical limit antisymmetric", true, [&](Check& c) { check_classical_limit(Q, c); });
  return r;
}

// ---- bracket tables ---------------------------------------------------------------

template <std::size_t D>
void check_table(const QuantumLieAlgebra& Q, const std::array<std::array<std::string_view, D>, D>& table, Check& c) {
  if (Q.dim() != D) throw std::logic_error("table dimension mismatch");
  std::size_t good = 0;
  std::string bad;
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) {
      const auto want = parse_cell(Q, table[i][j]);
      if (Q.beta()[i][j] == want) {
        ++good;
      } else if (bad.empty()) {
        bad = "; [" + Q.names()[i] + "," + Q.names()[j] + "] = " + Q.format(Q.beta()[i][j]) + ", expected " +
              Q.format(want);
      }
    }
  c.holds = good == D * D;
  c.detail = std::to_string(good) + "/" + std::to_string(D * D) + " entries" + bad;
}

// ---- rewriting systems presented in the text --------------------------------------

/// Relations (Y) on Y- < Y0 < Y+. With corrupt = true the coefficient -q of
/// Y+ in the first rule becomes -1.
inline rw::RuleSet y_rules(bool corrupt = false) {
  rw::RuleSet rs({{"Y-", 1, rw::Side::plain, {}}, {"Y0", 1, rw::Side::plain, {}}, {"Y+", 1, rw::Side::plain, {}}});
  auto w = [&](const char* s) { return rs.parse_word(s); };
  const Scalar q = Scalar::q_pow(1), q2 = Scalar::q_pow(2);
  Element r1 = Element(w("Y0 Y+"), q2) - Element(w("Y+"), corrupt ? Scalar(1) : q);
  Element r2 = Element(w("Y- Y0"), q2) - Element(w("Y-"), q);
  Element r3 = Element(w("Y- Y+")) - Element(w("Y0 Y0"), q2 - Scalar::q_pow(-2)) + Element(w("Y0"), q_number(2));
  rs.add_rule(w("Y+ Y0"), r1);
  rs.add_rule(w("Y0 Y-"), r2);
  rs.add_rule(w("Y+ Y-"), r3);
  return rs;
}

/// Relations (XC) with C central, on C < X- < X0 < X+.
inline rw::RuleSet xc_rules() {
  rw::RuleSet rs({{"C", 1, rw::Side::plain, {}},
                  {"X-", 1, rw::Side::plain, {}},
                  {"X0", 1, rw::Side::plain, {}},
                  {"X+", 1, rw::Side::plain, {}}});
  auto w = [&](const char* s) { return rs.parse_word(s); };
  const Scalar q = Scalar::q_pow(1), q2 = Scalar::q_pow(2);
  rs.add_rule(w("X+ X0"), Element(w("X0 X+"), q2) - Element(w("C X+"), q));
  rs.add_rule(w("X0 X-"), Element(w("X- X0"), q2) - Element(w("C X-"), q));
  rs.add_rule(w("X+ X-"),
              Element(w("X- X+")) - Element(w("X0 X0"), q2 - Scalar::q_pow(-2)) + Element(w("C X0"), q_number(2)));
  for (const char* x : {"X-", "X0", "X+"}) rs.add_rule(w((std::string(x) + " C").c_str()), Element(w((std::string("C ") + x).c_str())));
  return rs;
}

inline void check_confluent(const rw::RuleSet& rs, bool expect, bool parallel, Check& c) {
  const auto rep = rw::check_confluence(rs, parallel);
  c.holds = rep.confluent() == expect;
  c.detail = std::to_string(rep.ambiguities) + " ambiguities, " + std::to_string(rep.failures()) + " unresolved";
  if (!rep.confluent())
    for (const auto& v : rep.verdicts)
      if (!v.resolved) {
        c.detail += "; first at " + v.word + ": " + (v.error.empty() ? v.difference : v.error);
        break;
      }
}

/// A copy of the sl(3) rules with one right-hand-side coefficient multiplied by q.
inline rw::RuleSet mutated_rules(const rw::RuleSet& rs) {
  rw::RuleSet m = rs;
  for (std::size_t i = 0; i < m.rules().size(); ++i) {
    const auto& r = m.rules()[i];
    if (r.rhs.size() < 2) continue;
    Element rhs = r.rhs;
    const auto first = *rhs.begin();
    rhs.add(first.first, first.second * (Scalar::q_pow(1) - Scalar(1)));
    m.replace_rhs(i, rhs);
    return m;
  }
  throw std::logic_error("no rule with two terms to mutate");
}

inline Report confluence_suite(bool parallel = false) {
  Report r("confluence");
  r.run("rules (Y) confluent", true, [&](Check& c) { check_confluent(y_rules(), true, parallel, c); });
  r.run("corrupted rules (Y) not confluent", true, [&](Check& c) { check_confluent(y_rules(true), false, parallel, c); });
  r.run("rules (XC) confluent", true, [&](Check& c) { check_confluent(xc_rules(), true, parallel, c); });
  const std::array<std::size_t, 3> golden{18, 240, 1264};
  for (int n = 2; n <= 4; ++n) {
    r.run("U_q(sl" + std::to_string(n) + ") rules confluent", true, [&](Check& c) {
      const Algebra A(n, false);
      check_confluent(A.rules(), true, parallel, c);
      const auto count = rw::enumerate_overlaps(A.rules()).size();
      if (count != golden[static_cast<std::size_t>(n - 2)]) {
        c.holds = false;
        c.detail += "; ambiguity count changed";
      }
    });
  }
  r.run("mutated U_q(sl3) coefficient not confluent", true, [&](Check& c) {
    const Algebra A(3, false);
    check_confluent(mutated_rules(A.rules()), false, parallel, c);
  });
  return r;
}

// ---- sl(2) --------------------------------------------------------------------------

inline Report sl2_suite(const QuantumLieAlgebra& Q) {
  const Algebra& A = Q.algebra();
  if (A.n() != 2 || Q.dim() != 3) throw std::invalid_argument("sl2 suite needs sl(2)_q at w_1");
  Report r("sl2");
  const Element &Xp = Q.x("X+"), &Xm = Q.x("X-"), &X0 = Q.x("X0"), &C = Q.C();
  const Scalar q = Scalar::q_pow(1), qi = Scalar::q_pow(-1), q2 = Scalar::q_pow(2), qi2 = Scalar::q_pow(-2);
  const Element E = A.E(1), F = A.F(1), Km = A.KH(1, -1);
  auto mul = [&](std::initializer_list<Element> xs) { return A.multiply(xs); };
  auto same = [&](Check& c, const Element& lhs, const Element& rhs) {
    c.holds = lhs == rhs;
    if (!c.holds) c.detail = side_by_side(A.str(lhs), A.str(rhs));
  };

  r.run("bracket table", true, [&](Check& c) { check_table(Q, tables::sl2_brackets, c); });
  r.run("X+ = q^-H E", true, [&](Check& c) { same(c, Xp, mul({Km, E})); });
  r.run("X- = q^-H F", true, [&](Check& c) { same(c, Xm, mul({Km, F})); });
  r.run("X0 = (q E F - q^-1 F E)/(q+q^-1)", true,
        [&](Check& c) { same(c, X0, (mul({E, F}) * q - mul({F, E}) * qi) * q_number(2).inverse()); });
  r.run("C = q^-2H + ((q-q^-1)/(q+q^-1))(q E F - q^-1 F E)", true, [&](Check& c) {
    same(c, C, A.KH(1, -2) + (mul({E, F}) * q - mul({F, E}) * qi) * (q_diff() / q_number(2)));
  });
  r.run("(XC) q^2 X0 X+ - X+ X0 = q C X+", true,
        [&](Check& c) { same(c, mul({X0, Xp}) * q2 - mul({Xp, X0}), mul({C, Xp}) * q); });
  r.run("(XC) q^-2 X0 X- - X- X0 = -q^-1 C X-", true,
        [&](Check& c) { same(c, mul({X0, Xm}) * qi2 - mul({Xm, X0}), mul({C, Xm}) * (-qi)); });
  r.run("(XC) X+ X- - X- X+ + (q^2-q^-2) X0^2 = (q+q^-1) C X0", true, [&](Check& c) {
    same(c, mul({Xp, Xm}) - mul({Xm, Xp}) + mul({X0, X0}) * (q2 - qi2), mul({C, X0}) * q_number(2));
  });
  r.run("(XC) C X = X C", true, [&](Check& c) {
    for (const Element* x : {&Xp, &Xm, &X0})
      if (mul({C, *x}) != mul({*x, C})) {
        c.detail = "fails for " + A.str(*x);
        return;
      }
    c.holds = true;
  });
  r.run("Casimir relation", true, [&](Check& c) {
    const Element inner = mul({X0, X0}) + (mul({Xm, Xp}) * q + mul({Xp, Xm}) * qi) * q_number(2).inverse();
    same(c, mul({C, C}), inner * (q_diff() * q_diff()) + A.one());
  });
  const Element C2 = mul({X0, X0}) * q_number(2) + mul({Xm, Xp}) * q + mul({Xp, Xm}) * qi;
  r.run("C2 commutes with X+, X-, X0 in U", true, [&](Check& c) {
    for (const Element* x : {&Xp, &Xm, &X0})
      if (A.commutator(C2, *x) != Element{}) {
        c.detail = "fails for " + A.str(*x);
        return;
      }
    c.holds = true;
  });
  r.run("C2 commutes with X+, X-, X0 modulo (XC)", true, [&](Check& c) {
    const rw::RuleSet B = xc_rules();
    auto w = [&](const char* s) { return Element(B.parse_word(s)); };
    const Element c2 = w("X0 X0") * q_number(2) + w("X- X+") * q + w("X+ X-") * qi;
    auto times = [](const Element& a, const Element& b) {
      Element out;
      for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
          rw::Word x = u;
          x.insert(x.end(), v.begin(), v.end());
          out.add(std::move(x), cu * cv);
        }
      return out;
    };
    for (const char* x : {"X+", "X-", "X0"}) {
      const Element diff = B.normal_form(times(c2, w(x)) - times(w(x), c2));
      if (!diff.is_zero()) {
        c.detail = std::string("fails for ") + x + ": " + B.element_string(diff);
        return;
      }
    }
    c.holds = true;
  });
  r.run("rules (Y) confluent", true, [&](Check& c) { check_confluent(y_rules(), true, false, c); });
  r.run("corrupted rules (Y) not confluent", true, [&](Check& c) { check_confluent(y_rules(true), false, false, c); });

  const std::size_t d = Q.dim();
  const Matrix gp = casimir_eigenvalue() * Q.gamma();
  for (const auto& line : tables::sl2_gamma_prime) {
    r.run("gamma' on " + std::string(line.label), true, [&](Check& c) {
      const auto got = column(gp, pair_index(Q, line.input));
      const auto want = parse_tensor(Q, line.output);
      c.holds = got == want;
      if (!c.holds) c.detail = side_by_side(format_tensor(Q, got), format_tensor(Q, want));
    });
  }
  r.run("duplicate gamma' line read as gamma'(X0 (x) X0)", false, [&](Check& c) {
    const auto want = parse_tensor(Q, tables::sl2_gamma_prime_duplicate);
    c.holds = column(gp, pair_index(Q, "X0*X0")) == want;
    const bool as_printed = column(gp, pair_index(Q, "X+*X0")) == want;
    c.detail = std::string("matches gamma'(X+ (x) X0): ") + (as_printed ? "yes" : "no") +
               "; gamma'(X0 (x) X0) = " + format_tensor(Q, column(gp, pair_index(Q, "X0*X0")));
  });
  r.run("gamma^2 = ((q^2+q^-2)/(q^2-1+q^-2)) gamma", true, [&](Check& c) {
    const Matrix& g = Q.gamma();
    const Scalar k = (q2 + qi2) / casimir_eigenvalue();
    c.holds = g * g == k * g;
    if (!c.holds) c.detail = "gamma^2 differs from the multiple of gamma";
  });
  r.run("balanced (right quantum Jacobi identity)", true, [&](Check& c) { check_jacobi(Q, true, c); });
  r.run("ordered monomials of degree <= 5 independent", true, [&](Check& c) {
    std::vector<Element> pm{A.one()}, p0{A.one()}, pp{A.one()};
    for (int k = 1; k <= 5; ++k) {
      pm.push_back(A.multiply(pm.back(), Xm));
      p0.push_back(A.multiply(p0.back(), X0));
      pp.push_back(A.multiply(pp.back(), Xp));
    }
    Span span;
    std::size_t count = 0;
    for (int withC = 0; withC < 2; ++withC)
      for (int l = 0; l <= 5; ++l)
        for (int m = 0; l + m <= 5; ++m)
          for (int n = 0; l + m + n <= 5; ++n) {
            Element mono = A.multiply({pm[static_cast<std::size_t>(l)], p0[static_cast<std::size_t>(m)],
                                       pp[static_cast<std::size_t>(n)]});
            if (withC) mono = A.multiply(C, mono);
            span.insert(mono);
            ++count;
          }
    c.holds = count == 112 && span.rank() == count;
    c.detail = "rank " + std::to_string(span.rank()) + " of " + std::to_string(count);
  });
  (void)d;
  return r;
}

// ---- sl(3) --------------------------------------------------------------------------

/// Root coordinates (multiples of H_1, H_2) of the sl(3) basis names.
inline std::map<std::string, std::array<int, 2>> sl3_roots() {
  return {{"X1", {1, 0}}, {"X-1", {-1, 0}}, {"X2", {0, 1}}, {"X-2", {0, -1}}, {"X12", {1, 1}}, {"X-12", {-1, -1}}};
}

/// Operator (ad (x) ad) Delta(E_i) on flattened L (x) L coordinates.
inline Matrix diagonal_raising(const QuantumLieAlgebra& Q, int i) {
  const Algebra& A = Q.algebra();
  const std::size_t d = Q.dim();
  Matrix raise(d, d), kp(d, d), km(d, d);
  for (std::size_t b = 0; b < d; ++b) {
    const auto e = Q.require_coordinates(A.ad_E(i, Q.basis()[b]), "ad E");
    const auto p = Q.require_coordinates(A.ad_K(simple_root(A.rank(), i), Q.basis()[b]), "ad K");
    const auto m = Q.require_coordinates(A.ad_K(-simple_root(A.rank(), i), Q.basis()[b]), "ad K");
    for (std::size_t a = 0; a < d; ++a) {
      raise(a, b) = e[a];
      kp(a, b) = p[a];
      km(a, b) = m[a];
    }
  }
  return kron(raise, km) + kron(kp, raise);
}

/// sum t_kl ad x_k ad x_l as a matrix on L.
inline Matrix ad_of_tensor(const QuantumLieAlgebra& Q, const std::vector<Scalar>& t) {
  const std::size_t d = Q.dim();
  Matrix m(d, d);
  for (std::size_t kl = 0; kl < d * d; ++kl)
    if (!t[kl].is_zero()) m = m + t[kl] * (Q.ad_matrix(kl / d) * Q.ad_matrix(kl % d));
  return m;
}

inline Report sl3_suite(const QuantumLieAlgebra& Q) {
  const Algebra& A = Q.algebra();
  if (A.n() != 3 || Q.dim() != 8) throw std::invalid_argument("sl3 suite needs sl(3)_q at w_1");
  Report r("sl3");
  const std::size_t d = Q.dim();

  r.run("bracket table", true, [&](Check& c) { check_table(Q, tables::sl3_brackets, c); });
  r.run("bracket table with X-2 = -ad E1(X-12)", false, [&](Check& c) {
    // Flip the sign of X-2 and count the entries that still agree.
    const std::size_t m2 = Q.index("X-2");
    std::size_t good = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        auto b = Q.beta()[i][j];
        const int s = (i == m2 ? -1 : 1) * (j == m2 ? -1 : 1);
        for (std::size_t k = 0; k < d; ++k)
          if (s * (k == m2 ? -1 : 1) < 0) b[k] = -b[k];
        good += b == parse_cell(Q, tables::sl3_brackets[i][j]) ? 1 : 0;
      }
    c.holds = good == d * d;
    c.detail = std::to_string(good) + "/64 entries agree";
  });

  const auto roots = sl3_roots();
  auto name_of_root = [&](std::array<int, 2> a) -> std::string {
    for (const auto& [nm, rt] : roots)
      if (rt == a) return nm;
    return {};
  };
  r.run("ad E_i, ad F_i on X_alpha", true, [&](Check& c) {
    for (int i = 1; i <= 2; ++i)
      for (const auto& [nm, a] : roots)
        for (int sgn : {1, -1}) {
          std::array<int, 2> b = a;
          b[static_cast<std::size_t>(i - 1)] += sgn;
          std::vector<Scalar> want(d);
          const std::string t = name_of_root(b);
          if (!t.empty()) want[Q.index(t)] = Scalar(1);
          else if (b == std::array<int, 2>{0, 0}) want[Q.index("T" + std::to_string(i))] = Scalar(1);
          const Element img = sgn > 0 ? A.ad_E(i, Q.x(nm)) : A.ad_F(i, Q.x(nm));
          const auto got = Q.require_coordinates(img, "ad image");
          if (got != want) {
            c.detail = std::string(sgn > 0 ? "ad E" : "ad F") + std::to_string(i) + "(" + nm + ") = " + Q.format(got) +
                       ", expected " + Q.format(want);
            return;
          }
        }
    c.holds = true;
  });
  r.run("ad E_i(T_i) = (q+q^-1) X_i, ad F_i(T_i) = (q+q^-1) X_-i", true, [&](Check& c) {
    for (int i = 1; i <= 2; ++i) {
      const std::string t = "T" + std::to_string(i), xp = "X" + std::to_string(i), xm = "X-" + std::to_string(i);
      if (A.ad_E(i, Q.x(t)) != Q.x(xp) * q_number(2) || A.ad_F(i, Q.x(t)) != Q.x(xm) * q_number(2)) {
        c.detail = "fails for i = " + std::to_string(i);
        return;
      }
    }
    c.holds = true;
  });
  r.run("ad E_i(T_j), ad F_i(T_j) proportional to X_i, X_-i for i != j", true, [&](Check& c) {
    std::string found;
    for (int i = 1; i <= 2; ++i) {
      const int j = 3 - i;
      const std::string t = "T" + std::to_string(j);
      for (int sgn : {1, -1}) {
        const std::string target = (sgn > 0 ? "X" : "X-") + std::to_string(i);
        const auto got = Q.require_coordinates(sgn > 0 ? A.ad_E(i, Q.x(t)) : A.ad_F(i, Q.x(t)), "ad image");
        std::vector<Scalar> only(d);
        only[Q.index(target)] = got[Q.index(target)];
        if (got != only || only[Q.index(target)].is_zero()) {
          c.detail = std::string(sgn > 0 ? "ad E" : "ad F") + std::to_string(i) + "(" + t + ") = " + Q.format(got);
          return;
        }
        found += std::string(found.empty() ? "" : "; ") + (sgn > 0 ? "ad E" : "ad F") + std::to_string(i) + "(" + t +
                 ") = " + Q.format(got);
      }
    }
    c.holds = true;
    c.detail = found;
  });
  r.run("ad q^H_i on the basis", true, [&](Check& c) {
    for (int i = 1; i <= 2; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        const std::string& nm = Q.names()[k];
        Scalar want(1);
        if (nm[0] == 'X') {
          const auto a = roots.at(nm);
          const int pair = 2 * a[static_cast<std::size_t>(i - 1)] - a[static_cast<std::size_t>(2 - i)];
          want = Scalar::v_pow(pair);
        }
        if (A.ad_K(simple_root(2, i), Q.basis()[k]) != Q.basis()[k] * want) {
          c.detail = "ad q^H" + std::to_string(i) + "(" + nm + ")";
          return;
        }
      }
    c.holds = true;
  });

  const std::array<Matrix, 2> raise{diagonal_raising(Q, 1), diagonal_raising(Q, 2)};
  std::map<std::string, std::vector<Scalar>> W;
  for (const auto& hw : tables::sl3_highest_weights) W[std::string(hw.name)] = parse_tensor(Q, hw.tensor);
  for (const auto& hw : tables::sl3_highest_weights) {
    const std::string nm(hw.name);
    r.run(nm + " is a highest-weight vector", true, [&](Check& c) {
      const auto& t = W.at(nm);
      for (std::size_t kl = 0; kl < d * d; ++kl) {
        if (t[kl].is_zero()) continue;
        const auto wk = A.weight_of(Q.basis()[kl / d]), wl = A.weight_of(Q.basis()[kl % d]);
        const Weight wt = *wk + *wl;
        if (wt[0] != hw.weight[0] || wt[1] != hw.weight[1]) {
          c.detail = "term " + Q.names()[kl / d] + " (x) " + Q.names()[kl % d] + " has weight " + wt.to_string(2);
          return;
        }
      }
      for (int i = 0; i < 2; ++i) {
        const auto img = raise[static_cast<std::size_t>(i)].apply(t);
        if (!all_zero(img)) {
          c.detail = "Delta(E" + std::to_string(i + 1) + ") gives " + format_tensor(Q, img);
          return;
        }
      }
      c.holds = true;
    });
  }
  const Scalar ev = casimir_eigenvalue();
  for (const auto& hw : tables::sl3_highest_weights) {
    const std::string nm(hw.name);
    r.run("gamma " + nm + " = (" + std::string(hw.gamma) + ")/(q^2-1+q^-2) " + nm, true, [&](Check& c) {
      const auto& t = W.at(nm);
      const auto got = Q.gamma().apply(t);
      const auto want = scaled(t, Scalar::parse(hw.gamma) / ev);
      c.holds = got == want;
      if (!c.holds) c.detail = side_by_side(format_tensor(Q, got), format_tensor(Q, want));
    });
  }
  r.run("beta(W1) = 0 and m (ad (x) ad)(W1) != 0", true, [&](Check& c) {
    const auto& t = W.at("W1");
    const bool killed = all_zero(Q.apply_beta(t));
    const bool nonzero = !ad_of_tensor(Q, t).is_zero();
    c.holds = killed && nonzero;
    c.detail = std::string("beta(W1) ") + (killed ? "= 0" : "!= 0") + ", m (ad (x) ad)(W1) " + (nonzero ? "!= 0" : "= 0");
  });
  r.run("right quantum Jacobi identity (balanced)", false, [&](Check& c) { check_jacobi(Q, true, c); });

  // The conjugate octet L* inside ad U(q^{-4 w_2}).
  const QuantumLieAlgebra Qs(A, fundamental(2));
  const Element Y12 = Q.multiply_out(W.at("W8s"));
  const Element CX12 = A.multiply(Q.C(), Q.x("X12"));
  const Element Z = CX12 * (Scalar::v_pow(1) * q_number(2)) + Y12 * (Scalar::q_pow(1) * q_diff());
  const Element Xs12 = A.ad_E(1, A.ad_E(2, Qs.seed()) * q_diff().inverse());
  auto on_line = [&](const Element& z, Scalar& kappa) {
    if (z.is_zero() || !Qs.coordinates(z) || !A.ad_E(1, z).is_zero() || !A.ad_E(2, z).is_zero()) return false;
    const auto& [w0, c0] = *Xs12.begin();
    kappa = z.coeff(w0) / c0;
    return z == Xs12 * kappa;
  };
  r.run("X12* lies in the span of C X12 and Y12", true, [&](Check& c) {
    Span sp;
    sp.insert(CX12);
    sp.insert(Y12);
    const auto co = sp.coordinates(Xs12);
    c.holds = co.has_value();
    if (!c.holds) {
      c.detail = "X12* is outside span(C X12, Y12)";
      return;
    }
    c.detail = "X12* = (" + (*co)[0].to_string() + ") C X12 + (" + (*co)[1].to_string() + ") Y12; ratio of Y12 to C X12 " +
               ((*co)[1] / (*co)[0]).to_string();
  });
  r.run("q^{1/2}(q+q^-1) C X12 + q(q-q^-1) Y12 on the highest-weight line of L*", false, [&](Check& c) {
    Scalar kappa;
    c.holds = on_line(Z, kappa);
    c.detail = c.holds ? "ratio to X12* is " + kappa.to_string() : "not proportional to X12*";
  });
  r.run("ratio to X12* equals (q^{1/2}+q^{-1/2})(q^2+1+q^-2)", false, [&](Check& c) {
    Scalar kappa;
    const Scalar want = (Scalar::v_pow(1) + Scalar::v_pow(-1)) * (Scalar::q_pow(2) + Scalar(1) + Scalar::q_pow(-2));
    c.holds = on_line(Z, kappa) && kappa == want;
    c.detail = c.holds ? "equal" : "expected " + want.to_string();
  });
  return r;
}

// ---- central element and K-relations ------------------------------------------------

inline Report centrality(const Algebra& A) {
  Report r("centrality sl(" + std::to_string(A.n()) + ")");
  const Element C = A.central_element(fundamental(1));
  const auto gens = A.generators();
  r.run("C commutes with E_i, F_i, q^w_j", true, [&](Check& c) {
    for (const auto& g : gens) {
      const Element comm = A.commutator(C, g);
      if (!comm.is_zero()) {
        c.detail = "[C, " + A.str(g) + "] = " + A.str(comm);
        return;
      }
    }
    c.holds = true;
    c.detail = std::to_string(gens.size()) + " generators";
  });
  r.run("ad q^w_j(C) = C", true, [&](Check& c) {
    for (int j = 1; j <= A.rank(); ++j)
      if (A.ad_K(fundamental(j), C) != C) {
        c.detail = "fails for j = " + std::to_string(j);
        return;
      }
    c.holds = true;
  });
  r.run("ad E_i(C) = ad F_i(C) = 0", true, [&](Check& c) {
    for (int i = 1; i <= A.rank(); ++i)
      if (!A.ad_E(i, C).is_zero() || !A.ad_F(i, C).is_zero()) {
        c.detail = "fails for i = " + std::to_string(i);
        return;
      }
    c.holds = true;
  });
  return r;
}

inline Report k_relations(const Algebra& A) {
  const int n = A.n();
  Report r("k-relations sl(" + std::to_string(n) + ")");
  const Weight lam = fundamental(1);
  std::vector<Element> K;
  for (int i = 0; i < n; ++i) K.push_back(A.K_element(i, lam));
  auto Ki = [&](int i) -> const Element& { return K[static_cast<std::size_t>(i)]; };
  for (int j = 1; j < n; ++j) {
    const std::string js = std::to_string(j);
    for (int i = 0; i < n; ++i) {
      if (i >= j - 1 && i <= j + 1) continue;
      r.run("ad E" + js + "(K" + std::to_string(i) + ") = 0", true, [&](Check& c) {
        const Element x = A.ad_E(j, Ki(i));
        c.holds = x.is_zero();
        if (!c.holds) c.detail = A.str(x);
      });
    }
    if (j + 1 < n)
      r.run("ad E" + js + "(K" + std::to_string(j + 1) + ") = ad E" + js + "(K" + std::to_string(j - 1) + ")", true,
            [&](Check& c) {
              const Element a = A.ad_E(j, Ki(j + 1)), b = A.ad_E(j, Ki(j - 1));
              c.holds = a == b;
              if (!c.holds) c.detail = side_by_side(A.str(a), A.str(b));
            });
    r.run("ad E" + js + "(K" + js + ") = [2] ad E" + js + "(K" + std::to_string(j - 1) + ")", true, [&](Check& c) {
      const Element a = A.ad_E(j, Ki(j)), b = A.ad_E(j, Ki(j - 1)) * q_number(2);
      c.holds = a == b;
      if (!c.holds) c.detail = side_by_side(A.str(a), A.str(b));
    });
  }
  const Element X1 = A.ad_E(1, Ki(0));
  r.run("ad E_r(X1) = 0 unless r = 2", true, [&](Check& c) {
    for (int s = 1; s < n; ++s) {
      const bool zero = A.ad_E(s, X1).is_zero();
      if (zero == (s == 2)) {
        c.detail = "r = " + std::to_string(s);
        return;
      }
    }
    c.holds = true;
  });
  r.run("ad F_r(X1) = 0 unless r = 1, ad F1(X1) = K1", true, [&](Check& c) {
    for (int s = 2; s < n; ++s)
      if (!A.ad_F(s, X1).is_zero()) {
        c.detail = "r = " + std::to_string(s);
        return;
      }
    c.holds = A.ad_F(1, X1) == Ki(1);
    if (!c.holds) c.detail = "ad F1(X1) = " + A.str(A.ad_F(1, X1));
  });
  const Scalar q = Scalar::q_pow(1);
  const std::array<Scalar, 3> eig{Scalar::q_pow(-2), -q * (Scalar::q_pow(2) - Scalar::q_pow(-2)), -(Scalar::q_pow(2) - Scalar(1))};
  for (int s = 0; s < n; ++s) {
    const Scalar want = s < 3 ? eig[static_cast<std::size_t>(s)] : Scalar(0);
    r.run("ad K" + std::to_string(s) + "(X1) = (" + want.to_string() + ") X1", true, [&](Check& c) {
      const Element got = A.ad(Ki(s), X1);
      c.holds = got == X1 * want;
      if (!c.holds) c.detail = A.str(got);
    });
  }
  return r;
}

// ---- dimensions -----------------------------------------------------------------------

inline Report dimensions(const QuantumLieAlgebra& Q) {
  const int n = Q.algebra().n();
  Report r("dimensions sl(" + std::to_string(n) + ")");
  const std::size_t N = static_cast<std::size_t>(n);
  r.assert_that("dim Lbar = " + std::to_string(N * N), Q.dim_lbar() == N * N, "got " + std::to_string(Q.dim_lbar()));
  r.assert_that("dim L = " + std::to_string(N * N - 1), Q.dim() == N * N - 1, "got " + std::to_string(Q.dim()));
  return r;
}

// ---- Hopf structure and adjoint action -------------------------------------------------

/// Random small elements of U with a fixed seed.
class Sampler {
 public:
  Sampler(const Algebra& A, unsigned seed) : A_(A), rng_(seed) {
    for (int i = 1; i <= A.rank(); ++i) {
      pieces_.push_back(A.E(i));
      pieces_.push_back(A.F(i));
      pieces_.push_back(A.K(fundamental(i)));
      pieces_.push_back(A.K(-fundamental(i)));
    }
    for (const auto& rt : A.roots())
      if (rt.height() > 1) {
        pieces_.push_back(A.E_root(rt.a, rt.b));
        pieces_.push_back(A.F_root(rt.a, rt.b));
      }
    coeffs_ = {Scalar(1), Scalar(-1), Scalar(2), Scalar::q_pow(1), Scalar::q_pow(-1), Scalar::v_pow(1),
               q_number(2), q_diff(), Scalar::q_pow(1) / (Scalar::q_pow(1) + Scalar(1))};
  }

  Element monomial(int max_len) {
    const int len = pick(max_len + 1);
    Element x = A_.scalar(coeffs_[static_cast<std::size_t>(pick(static_cast<int>(coeffs_.size())))]);
    for (int k = 0; k < len; ++k) x = A_.multiply(x, pieces_[static_cast<std::size_t>(pick(static_cast<int>(pieces_.size())))]);
    return x;
  }

  Element element(int max_len = 2, int max_terms = 2) {
    Element x;
    const int terms = 1 + pick(max_terms);
    for (int t = 0; t < terms; ++t) x += monomial(max_len);
    return x;
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  const Algebra& A_;
  std::mt19937 rng_;
  std::vector<Element> pieces_;
  std::vector<Scalar> coeffs_;
};

struct TripleOrder {
  bool operator()(const std::array<Word, 3>& a, const std::array<Word, 3>& b) const {
    rw::TermOrder t;
    for (std::size_t i = 0; i < 3; ++i) {
      if (t(a[i], b[i])) return true;
      if (t(b[i], a[i])) return false;
    }
    return false;
  }
};
using TripleTensor = LinComb<std::array<Word, 3>, TripleOrder>;

inline Report hopf_suite(const Algebra& A, std::size_t samples = 100, unsigned seed = 20240601u) {
  Report r("hopf sl(" + std::to_string(A.n()) + ")");
  Sampler S(A, seed);
  auto law = [&](const std::string& name, bool asserted, int arity, const std::function<bool(const std::vector<Element>&, std::string&)>& f) {
    r.run(name, asserted, [&](Check& c) {
      std::size_t good = 0;
      for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Element> xs;
        for (int k = 0; k < arity; ++k) xs.push_back(S.element());
        std::string w;
        if (f(xs, w)) {
          ++good;
        } else if (c.detail.empty()) {
          c.detail = "sample " + std::to_string(s) + ": " + w;
          if (asserted) break;
        }
      }
      c.holds = good == samples;
      c.detail = std::to_string(good) + "/" + std::to_string(samples) + " samples" + (c.detail.empty() ? "" : "; " + c.detail);
    });
  };
  auto witness = [&](std::string& w, const Element& a, const Element& b) {
    if (a == b) return true;
    w = side_by_side(A.str(a), A.str(b));
    return false;
  };

  law("block product = product by reduction", true, 2,
      [&](const auto& x, std::string& w) { return witness(w, A.multiply(x[0], x[1]), A.multiply_by_reduction(x[0], x[1])); });
  law("coassociativity", true, 1, [&](const auto& x, std::string& w) {
    TripleTensor left, right;
    for (const auto& [p, c] : A.coproduct(x[0])) {
      for (const auto& [a, ca] : A.coproduct(p.first)) left.add({a.first, a.second, p.second}, c * ca);
      for (const auto& [b, cb] : A.coproduct(p.second)) right.add({p.first, b.first, b.second}, c * cb);
    }
    if (left == right) return true;
    w = "Delta(" + A.str(x[0]) + ")";
    return false;
  });
  law("coproduct is multiplicative", true, 2, [&](const auto& x, std::string& w) {
    if (A.coproduct(A.multiply(x[0], x[1])) == A.multiply(A.coproduct(x[0]), A.coproduct(x[1]))) return true;
    w = A.str(x[0]) + " ; " + A.str(x[1]);
    return false;
  });
  law("counit law", true, 1, [&](const auto& x, std::string& w) {
    Element l, rr;
    for (const auto& [p, c] : A.coproduct(x[0])) {
      l.add_scaled(Element(p.second), A.counit(Element(p.first)) * c);
      rr.add_scaled(Element(p.first), A.counit(Element(p.second)) * c);
    }
    return witness(w, l, x[0]) && witness(w, rr, x[0]);
  });
  law("antipode law", true, 1, [&](const auto& x, std::string& w) {
    Element l, rr;
    for (const auto& [p, c] : A.coproduct(x[0])) {
      l.add_scaled(A.multiply(A.antipode(Element(p.first)), Element(p.second)), c);
      rr.add_scaled(A.multiply(Element(p.first), A.antipode(Element(p.second))), c);
    }
    const Element e = A.scalar(A.counit(x[0]));
    return witness(w, l, e) && witness(w, rr, e);
  });
  law("antipode is an anti-homomorphism", true, 2, [&](const auto& x, std::string& w) {
    return witness(w, A.antipode(A.multiply(x[0], x[1])), A.multiply(A.antipode(x[1]), A.antipode(x[0])));
  });
  law("closed-form ad = sum x1 y S(x2)", true, 2,
      [&](const auto& x, std::string& w) { return witness(w, A.ad(x[0], x[1]), A.ad_hopf(x[0], x[1])); });
  law("ad(x y) = ad x o ad y", true, 3, [&](const auto& x, std::string& w) {
    return witness(w, A.ad(A.multiply(x[0], x[1]), x[2]), A.ad(x[0], A.ad(x[1], x[2])));
  });
  law("derivation law ad x(y z) = sum ad x1(y) ad x2(z)", true, 3, [&](const auto& x, std::string& w) {
    Element rhs;
    for (const auto& [p, c] : A.coproduct(x[0])) rhs.add_scaled(A.multiply(A.ad(p.first, x[1]), A.ad(p.second, x[2])), c);
    return witness(w, A.ad(x[0], A.multiply(x[1], x[2])), rhs);
  });
  law("[x,[y,z]] = sum [[x1,y],[x2,z]]", true, 3, [&](const auto& x, std::string& w) {
    Element rhs;
    for (const auto& [p, c] : A.coproduct(x[0])) rhs.add_scaled(A.ad(A.ad(p.first, x[1]), A.ad(p.second, x[2])), c);
    return witness(w, A.ad(x[0], A.ad(x[1], x[2])), rhs);
  });
  law("[[x,y],z] = sum [x1,[y,[S(x2),z]]]", true, 3, [&](const auto& x, std::string& w) {
    Element rhs;
    for (const auto& [p, c] : A.coproduct(x[0]))
      rhs.add_scaled(A.ad(p.first, A.ad(x[1], A.ad(A.antipode(Element(p.second)), x[2]))), c);
    return witness(w, A.ad(A.ad(x[0], x[1]), x[2]), rhs);
  });
  law("[[x,y],z] = sum [x1,[y,[x2,z]]] without the antipode", false, 3, [&](const auto& x, std::string& w) {
    Element rhs;
    for (const auto& [p, c] : A.coproduct(x[0])) rhs.add_scaled(A.ad(p.first, A.ad(x[1], A.ad(p.second, x[2]))), c);
    return witness(w, A.ad(A.ad(x[0], x[1]), x[2]), rhs);
  });

  r.run("defining relations", true, [&](Check& c) {
    const int rk = A.rank();
    for (int i = 1; i <= rk; ++i)
      for (int j = 1; j <= rk; ++j) {
        Element want;
        if (i == j) want = (A.KH(i, 2) - A.KH(i, -2)) * q_diff().inverse();
        const Element got = A.commutator(A.E(i), A.F(j));
        if (got != want) {
          c.detail = "[E" + std::to_string(i) + ",F" + std::to_string(j) + "] = " + A.str(got);
          return;
        }
        if (i == j) continue;
        for (bool upper : {true, false}) {
          const Element a = upper ? A.E(i) : A.F(i), b = upper ? A.E(j) : A.F(j);
          Element serre;
          if (std::abs(i - j) == 1) {
            serre = A.multiply({a, a, b}) - A.multiply({a, b, a}) * q_number(2) + A.multiply({b, a, a});
          } else {
            serre = A.commutator(a, b);
          }
          if (!serre.is_zero()) {
            c.detail = std::string("Serre relation ") + (upper ? "E" : "F") + std::to_string(i) + std::to_string(j) +
                       ": " + A.str(serre);
            return;
          }
        }
      }
    c.holds = true;
  });
  return r;
}

}  // namespace qlie::suites
