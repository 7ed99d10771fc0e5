#pragma once

// Dense univariate integer polynomials in v, stored as coefficient vectors
// (index i multiplies v^i). Only what the rational-function field needs:
// ring ops, exact division, content and a primitive-PRS gcd.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qlie {

using Integer = mpz_class;
using Rational = mpq_class;

namespace poly {

using Coeffs = std::vector<Integer>;

inline void trim(Coeffs& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

inline int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

inline bool is_one(const Coeffs& a) { return a.size() == 1 && a[0] == 1; }

/// Number of trailing (low-order) zero coefficients; a must be nonzero.
inline std::size_t low_order(const Coeffs& a) {
  std::size_t k = 0;
  while (k < a.size() && sgn(a[k]) == 0) ++k;
  return k;
}

inline Coeffs shift_down(const Coeffs& a, std::size_t k) {
  return Coeffs(a.begin() + static_cast<std::ptrdiff_t>(k), a.end());
}

inline Coeffs shift_up(const Coeffs& a, std::size_t k) {
  if (a.empty()) return {};
  Coeffs r(k, Integer(0));
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

inline Coeffs add(const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] = a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

inline Coeffs sub(const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] = a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

inline Coeffs neg(Coeffs a) {
  for (auto& x : a) x = -x;
  return a;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1 && a[0] == 1) return b;
  if (b.size() == 1 && b[0] == 1) return a;
  Coeffs r(a.size() + b.size() - 1, Integer(0));
  Integer t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

inline Coeffs mul_scalar(Coeffs a, const Integer& s) {
  if (sgn(s) == 0) return {};
  for (auto& x : a) x *= s;
  return a;
}

inline Coeffs divexact_scalar(Coeffs a, const Integer& s) {
  for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
  return a;
}

inline Integer content(const Coeffs& a) {
  Integer g = 0;
  for (const auto& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline Coeffs primitive_part(const Coeffs& a) {
  if (a.empty()) return {};
  Integer c = content(a);
  if (sgn(a.back()) < 0) c = -c;
  if (c == 1) return a;
  return divexact_scalar(a, c);
}

/// Pseudo-remainder of a by b (b nonzero).
inline Coeffs pseudo_rem(Coeffs a, const Coeffs& b) {
  const int db = degree(b);
  const Integer& lb = b.back();
  while (!a.empty() && degree(a) >= db) {
    const Integer la = a.back();
    const int shift = degree(a) - db;
    for (auto& x : a) x *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + shift)] -= la * b[static_cast<std::size_t>(j)];
    trim(a);
  }
  return a;
}

/// Greatest common divisor in Z[v], normalised to a positive leading
/// coefficient. gcd(0, 0) = 0.
inline Coeffs gcd(const Coeffs& a, const Coeffs& b) {
  if (a.empty()) return (b.empty() || sgn(b.back()) > 0) ? b : neg(b);
  if (b.empty()) return sgn(a.back()) > 0 ? a : neg(a);
  Integer g;
  mpz_gcd(g.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
  if (a.size() == 1 || b.size() == 1) return {g};
  Coeffs x = primitive_part(a);
  Coeffs y = primitive_part(b);
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    if (degree(y) == 0) {
      x = {Integer(1)};
      break;
    }
    Coeffs r = pseudo_rem(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return mul_scalar(primitive_part(x), g);
}

/// Exact division a / b in Z[v]; throws if b does not divide a.
inline Coeffs divexact(const Coeffs& a, const Coeffs& b) {
  if (b.empty()) throw std::domain_error("zero denominator");
  if (is_one(b)) return a;
  if (a.empty()) return {};
  const int db = degree(b);
  if (degree(a) < db) throw std::logic_error("inexact polynomial division");
  Coeffs rem = a;
  Coeffs q(static_cast<std::size_t>(degree(a) - db + 1), Integer(0));
  const Integer& lb = b.back();
  Integer t;
  for (int i = degree(a) - db; i >= 0; --i) {
    Integer& top = rem[static_cast<std::size_t>(i + db)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw std::logic_error("inexact polynomial division");
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(i)] = t;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(i + j)].get_mpz_t(), t.get_mpz_t(), b[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  trim(rem);
  if (!rem.empty()) throw std::logic_error("inexact polynomial division");
  trim(q);
  return q;
}

inline Coeffs reversed(Coeffs a) {
  std::reverse(a.begin(), a.end());
  return a;
}

inline Integer eval_at_one(const Coeffs& a) {
  Integer s = 0;
  for (const auto& x : a) s += x;
  return s;
}

}  // namespace poly
}  // namespace qlie
