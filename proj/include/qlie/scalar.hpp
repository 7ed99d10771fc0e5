#pragma once

/**
 * @file scalar.hpp
 * @brief Exact arithmetic in the rational function field Q(v), v = q^{1/2}.
 *
 * A Scalar is v^shift * N(v) / D(v) with N, D in Z[v]. The representation
 * is canonical:
 *  - N(0) != 0 and D(0) != 0 (all powers of v live in the shift),
 *  - gcd(N, D) = 1 in Z[v] (integer content included),
 *  - D has positive leading coefficient,
 *  - zero is N = 0, D = 1, shift = 0.
 * Two Scalars are equal iff their fields are identical.
 */

#include "qlie/poly.hpp"

#include <cctype>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace qlie {

/// Printing convention: powers of q (half-integers allowed) or powers of v.
enum class ScalarForm { q, v };

class Scalar {
 public:
  Scalar() : den_{Integer(1)} {}
  Scalar(long n) : den_{Integer(1)} {  // NOLINT(google-explicit-constructor)
    if (n != 0) num_ = {Integer(n)};
  }
  explicit Scalar(const Integer& n) : den_{Integer(1)} {
    if (sgn(n) != 0) num_ = {n};
  }
  explicit Scalar(const Rational& r) : Scalar(normalize(0, {r.get_num()}, {r.get_den()})) {}

  /// v^e.
  static Scalar v_pow(int e) {
    Scalar s(1);
    s.shift_ = e;
    return s;
  }
  /// q^k = v^{2k}.
  static Scalar q_pow(int k) { return v_pow(2 * k); }

  /// Canonical representative of v^shift * num / den. Throws on den = 0.
  static Scalar normalize(int shift, poly::Coeffs num, poly::Coeffs den) {
    poly::trim(num);
    poly::trim(den);
    if (den.empty()) throw std::domain_error("zero denominator");
    Scalar s;
    if (num.empty()) return s;
    std::size_t k = poly::low_order(num);
    if (k) num = poly::shift_down(num, k);
    shift += static_cast<int>(k);
    k = poly::low_order(den);
    if (k) den = poly::shift_down(den, k);
    shift -= static_cast<int>(k);
    if (!poly::is_one(den)) {
      poly::Coeffs g = poly::gcd(num, den);
      if (!poly::is_one(g)) {
        num = poly::divexact(num, g);
        den = poly::divexact(den, g);
      }
      if (sgn(den.back()) < 0) {
        num = poly::neg(std::move(num));
        den = poly::neg(std::move(den));
      }
    }
    s.shift_ = shift;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    return s;
  }

  bool is_zero() const { return num_.empty(); }
  bool is_one() const { return shift_ == 0 && poly::is_one(num_) && poly::is_one(den_); }
  /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
  bool is_laurent() const { return poly::is_one(den_); }
  /// True for c * v^e with integer c.
  bool is_monomial() const { return num_.size() == 1 && poly::is_one(den_); }

  /// Leading (highest-power) numerator coefficient is negative.
  bool leading_negative() const { return !num_.empty() && sgn(num_.back()) < 0; }
  /// Number of nonzero numerator terms.
  std::size_t term_count() const {
    std::size_t k = 0;
    for (const auto& c : num_) k += sgn(c) != 0;
    return k;
  }

  int shift() const { return shift_; }
  const poly::Coeffs& numerator() const { return num_; }
  const poly::Coeffs& denominator() const { return den_; }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int s = std::min(a.shift_, b.shift_);
    const auto ua = static_cast<std::size_t>(a.shift_ - s);
    const auto ub = static_cast<std::size_t>(b.shift_ - s);
    if (a.is_laurent() && b.is_laurent()) {
      poly::Coeffs n = poly::add(ua ? poly::shift_up(a.num_, ua) : a.num_, ub ? poly::shift_up(b.num_, ub) : b.num_);
      return from_laurent(s, std::move(n));
    }
    if (a.den_ == b.den_) {
      poly::Coeffs n = poly::add(ua ? poly::shift_up(a.num_, ua) : a.num_, ub ? poly::shift_up(b.num_, ub) : b.num_);
      return normalize(s, std::move(n), a.den_);
    }
    poly::Coeffs g = poly::gcd(a.den_, b.den_);
    poly::Coeffs da = poly::divexact(a.den_, g);
    poly::Coeffs db = poly::divexact(b.den_, g);
    poly::Coeffs n = poly::add(poly::mul(ua ? poly::shift_up(a.num_, ua) : a.num_, db),
                               poly::mul(ub ? poly::shift_up(b.num_, ub) : b.num_, da));
    return normalize(s, std::move(n), poly::mul(a.den_, db));
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    Scalar r;
    r.shift_ = a.shift_ + b.shift_;
    if (a.is_laurent() && b.is_laurent()) {
      r.num_ = poly::mul(a.num_, b.num_);
      return r;
    }
    poly::Coeffs na = a.num_, nb = b.num_, da = a.den_, db = b.den_;
    if (!poly::is_one(db)) {
      poly::Coeffs g = poly::gcd(na, db);
      if (!poly::is_one(g)) {
        na = poly::divexact(na, g);
        db = poly::divexact(db, g);
      }
    }
    if (!poly::is_one(da)) {
      poly::Coeffs g = poly::gcd(nb, da);
      if (!poly::is_one(g)) {
        nb = poly::divexact(nb, g);
        da = poly::divexact(da, g);
      }
    }
    r.num_ = poly::mul(na, nb);
    r.den_ = poly::mul(da, db);
    if (sgn(r.den_.back()) < 0) {
      r.num_ = poly::neg(std::move(r.num_));
      r.den_ = poly::neg(std::move(r.den_));
    }
    return r;
  }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("zero denominator");
    Scalar r;
    r.shift_ = -shift_;
    r.num_ = den_;
    r.den_ = num_;
    if (sgn(r.den_.back()) < 0) {
      r.num_ = poly::neg(std::move(r.num_));
      r.den_ = poly::neg(std::move(r.den_));
    }
    return r;
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Coefficient involution v -> v^{-1} (equivalently q -> q^{-1}).
  Scalar bar() const {
    if (is_zero()) return *this;
    const int shift = -shift_ - poly::degree(num_) + poly::degree(den_);
    Scalar r;
    r.shift_ = shift;
    r.num_ = poly::reversed(num_);
    r.den_ = poly::reversed(den_);
    if (sgn(r.den_.back()) < 0) {
      r.num_ = poly::neg(std::move(r.num_));
      r.den_ = poly::neg(std::move(r.den_));
    }
    return r;
  }

  /// Value at v = 1 (the classical limit q = 1).
  Rational eval_at_one() const {
    Integer d = poly::eval_at_one(den_);
    if (sgn(d) == 0) throw std::domain_error("classical-limit pole");
    Rational r(poly::eval_at_one(num_), d);
    r.canonicalize();
    return r;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>()(shift_);
    auto mix = [&h](const Integer& x) {
      h ^= std::hash<long>()(mpz_get_si(x.get_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (const auto& c : num_) mix(c);
    for (const auto& c : den_) mix(c);
    return h;
  }

  std::string to_string(ScalarForm form = ScalarForm::q) const;
  static Scalar parse(std::string_view text);

 private:
  static Scalar from_laurent(int shift, poly::Coeffs n) {
    Scalar r;
    if (n.empty()) return r;
    std::size_t k = poly::low_order(n);
    if (k) n = poly::shift_down(n, k);
    r.shift_ = shift + static_cast<int>(k);
    r.num_ = std::move(n);
    return r;
  }

  int shift_ = 0;
  poly::Coeffs num_;
  poly::Coeffs den_;
};

inline Scalar q_pow(int k) { return Scalar::q_pow(k); }
inline Scalar v_pow(int e) { return Scalar::v_pow(e); }

/// The q-number [k]_q = (q^k - q^{-k}) / (q - q^{-1}), as a Laurent polynomial.
inline Scalar q_number(int k) {
  if (k == 0) return Scalar();
  if (k < 0) return -q_number(-k);
  // q^{k-1} + q^{k-3} + ... + q^{1-k}: even powers of v from -2(k-1) to 2(k-1).
  poly::Coeffs c(static_cast<std::size_t>(4 * (k - 1) + 1), Integer(0));
  for (int j = 0; j < k; ++j) c[static_cast<std::size_t>(4 * j)] = 1;
  return Scalar::normalize(-2 * (k - 1), std::move(c), {Integer(1)});
}

inline Scalar q_conjugate(const Scalar& s) { return s.bar(); }
inline Rational evaluate_at_one(const Scalar& s) { return s.eval_at_one(); }

namespace detail {

inline std::string monomial_string(int e, ScalarForm form) {
  if (e == 0) return "";
  if (form == ScalarForm::v) {
    if (e == 1) return "v";
    return "v^" + std::to_string(e);
  }
  if (e % 2 == 0) {
    const int k = e / 2;
    if (k == 1) return "q";
    return "q^" + std::to_string(k);
  }
  return "q^{" + std::to_string(e) + "/2}";
}

/// Terms of v^shift * c(v), highest power first. Returns the term count.
inline std::size_t laurent_string(int shift, const poly::Coeffs& c, ScalarForm form, std::string& out) {
  std::size_t terms = 0;
  for (int i = poly::degree(c); i >= 0; --i) {
    const Integer& a = c[static_cast<std::size_t>(i)];
    if (sgn(a) == 0) continue;
    std::string mono = monomial_string(shift + i, form);
    std::string t;
    if (mono.empty()) {
      t = a.get_str();
    } else if (a == 1) {
      t = mono;
    } else if (a == -1) {
      t = "-" + mono;
    } else {
      t = a.get_str() + mono;
    }
    if (terms > 0 && t[0] != '-') out += '+';
    out += t;
    ++terms;
  }
  if (terms == 0) out += '0';
  return terms;
}

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  Scalar run() {
    Scalar r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse scalar '" + std::string(s_) + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool starts_factor() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'v' || c == '(';
  }
  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  Integer big_integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }
  long signed_integer() {
    bool minus = false;
    while (true) {
      if (accept('-')) minus = !minus;
      else if (!accept('+')) break;
    }
    const long k = integer();
    return minus ? -k : k;
  }
  // Exponent as a rational numerator/denominator pair.
  std::pair<long, long> exponent() {
    if (accept('{')) {
      const long a = signed_integer();
      long b = 1;
      if (accept('/')) b = integer();
      if (!accept('}')) fail("expected '}'");
      if (b == 0) fail("zero exponent denominator");
      return {a, b};
    }
    return {signed_integer(), 1};
  }
  Scalar pow_int(Scalar base, long k) {
    if (k < 0) {
      base = base.inverse();
      k = -k;
    }
    Scalar r(1);
    while (k) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }
  Scalar atom(char& kind) {
    kind = peek();
    if (accept('(')) {
      Scalar r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (accept('q')) return Scalar::v_pow(2);
    if (accept('v')) return Scalar::v_pow(1);
    if (std::isdigit(static_cast<unsigned char>(kind))) return Scalar(big_integer());
    fail("unexpected character");
  }
  Scalar power() {
    char kind = 0;
    Scalar base = atom(kind);
    if (!accept('^')) return base;
    auto [a, b] = exponent();
    if (kind == 'q') {
      if ((2 * a) % b != 0) fail("exponent of q must be a multiple of 1/2");
      return Scalar::v_pow(static_cast<int>(2 * a / b));
    }
    if (b != 1) fail("fractional exponent");
    if (kind == 'v') return Scalar::v_pow(static_cast<int>(a));
    return pow_int(base, a);
  }
  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  Scalar term() {
    Scalar r = unary();
    while (true) {
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        r /= unary();
      } else if (starts_factor()) {
        r *= power();
      } else {
        break;
      }
    }
    return r;
  }
  Scalar expr() {
    Scalar r = term();
    while (true) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        break;
      }
    }
    return r;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::string Scalar::to_string(ScalarForm form) const {
  std::string num;
  const std::size_t nterms = detail::laurent_string(shift_, num_, form, num);
  if (poly::is_one(den_)) return num;
  std::string den;
  const std::size_t dterms = detail::laurent_string(0, den_, form, den);
  std::string out = nterms > 1 ? "(" + num + ")" : num;
  out += '/';
  out += dterms > 1 ? "(" + den + ")" : den;
  return out;
}

inline Scalar Scalar::parse(std::string_view text) { return detail::ScalarParser(text).run(); }

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace qlie

template <>
struct std::hash<qlie::Scalar> {
  std::size_t operator()(const qlie::Scalar& s) const noexcept { return s.hash(); }
};
