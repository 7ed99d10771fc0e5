#pragma once

/**
 * @file lincomb.hpp
 * @brief Finite linear combinations of ordered keys with Scalar coefficients.
 *
 * Zero coefficients are never stored, so structural equality of the maps is
 * equality of the combinations.
 */

#include "qlie/scalar.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace qlie {

/// Appends "c body" as a term of a signed sum; body empty means the unit.
inline void append_term(std::string& out, const Scalar& c, const std::string& body, bool first) {
  const bool neg = c.leading_negative();
  const Scalar a = neg ? -c : c;
  if (!first) out += neg ? " - " : " + ";
  else if (neg) out += "-";
  const std::string cs = a.to_string();
  const bool bare = a.is_monomial();
  if (body.empty()) {
    out += bare || first ? cs : "(" + cs + ")";
  } else if (a.is_one()) {
    out += body;
  } else {
    out += (bare ? cs : "(" + cs + ")") + " " + body;
  }
}

template <class Key, class Compare = std::less<Key>>
class LinComb {
 public:
  using map_type = std::map<Key, Scalar, Compare>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  LinComb(const Key& k, Scalar c = Scalar(1)) { add(k, std::move(c)); }  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(Key&& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(k), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void erase(const Key& k) { terms_.erase(k); }

  /// this += c * other
  void add_scaled(const LinComb& other, const Scalar& c) {
    if (c.is_zero()) return;
    const bool one = c.is_one();
    for (const auto& [k, v] : other.terms_) add(k, one ? v : v * c);
  }

  LinComb& operator+=(const LinComb& o) {
    add_scaled(o, Scalar(1));
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add_scaled(o, Scalar(-1));
    return *this;
  }
  LinComb& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
    } else if (!c.is_one()) {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Scalar& c) { return a *= c; }
  friend LinComb operator*(const Scalar& c, LinComb a) { return a *= c; }
  LinComb operator-() const { return *this * Scalar(-1); }

  /// Applies f to every coefficient (used for q-conjugation and v = 1 probes).
  template <class F>
  LinComb map_coeffs(F&& f) const {
    LinComb r;
    for (const auto& [k, v] : terms_) r.add(k, f(v));
    return r;
  }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

 private:
  map_type terms_;
};

}  // namespace qlie
