#pragma once

/**
 * @file linalg.hpp
 * @brief Exact linear algebra over Q(v) on sparse coordinate vectors.
 *
 * Vectors are LinComb<Key, Compare>. Bases are kept in reduced row-echelon
 * form: each row has a pivot key (its smallest key), the pivot entry is 1
 * and no other row has a nonzero entry at that key.
 */

#include "qlie/lincomb.hpp"
#include "qlie/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qlie::linalg {

/// Echelon basis of a span, tracking how each row combines the inserted vectors.
template <class Key, class Compare = std::less<Key>>
class SpanSolver {
 public:
  using Vec = LinComb<Key, Compare>;

  /// Inserts v; returns true when v is independent of the vectors seen so far.
  /// Dependent inputs leave a kernel relation (see relations()).
  bool insert(const Vec& v) {
    const std::size_t j = inputs_++;
    Vec r = v;
    std::map<std::size_t, Scalar> combo{{j, Scalar(1)}};
    for (std::size_t i = 0; i < rows_.size() && !r.is_zero(); ++i) {
      const Scalar c = r.coeff(pivots_[i]);
      if (c.is_zero()) continue;
      r.add_scaled(rows_[i], -c);
      add_combo(combo, combos_[i], -c);
    }
    if (r.is_zero()) {
      relations_.push_back(std::move(combo));
      return false;
    }
    const Key p = r.begin()->first;
    const Scalar inv = r.begin()->second.inverse();
    r *= inv;
    for (auto& [k, c] : combo) c *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar c = rows_[i].coeff(p);
      if (c.is_zero()) continue;
      rows_[i].add_scaled(r, -c);
      add_combo(combos_[i], combo, -c);
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    combos_.push_back(std::move(combo));
    independent_.push_back(j);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t inputs() const { return inputs_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<Key>& pivots() const { return pivots_; }
  /// Indices of inputs that were independent when inserted.
  const std::vector<std::size_t>& independent() const { return independent_; }

  /// x minus its projection on the span (zero iff x lies in the span).
  Vec residual(const Vec& x) const {
    Vec r = x;
    for (std::size_t i = 0; i < rows_.size() && !r.is_zero(); ++i) {
      const Scalar c = x.coeff(pivots_[i]);
      if (!c.is_zero()) r.add_scaled(rows_[i], -c);
    }
    return r;
  }

  bool contains(const Vec& x) const { return residual(x).is_zero(); }

  /// Coefficients of x in terms of the inserted vectors, or nullopt when x
  /// is outside the span. Dependent inputs get coefficient 0.
  std::optional<std::vector<Scalar>> coordinates(const Vec& x) const {
    std::vector<Scalar> out(inputs_);
    Vec r = x;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar c = x.coeff(pivots_[i]);
      if (c.is_zero()) continue;
      r.add_scaled(rows_[i], -c);
      for (const auto& [j, d] : combos_[i]) out[j] += c * d;
    }
    if (!r.is_zero()) return std::nullopt;
    return out;
  }

  /// Kernel vectors: for each dependent input, the vanishing combination.
  std::vector<std::vector<Scalar>> relations() const {
    std::vector<std::vector<Scalar>> out;
    for (const auto& rel : relations_) {
      std::vector<Scalar> v(inputs_);
      for (const auto& [j, c] : rel) v[j] = c;
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  static void add_combo(std::map<std::size_t, Scalar>& a, const std::map<std::size_t, Scalar>& b, const Scalar& c) {
    for (const auto& [j, d] : b) {
      auto [it, fresh] = a.try_emplace(j, c * d);
      if (!fresh) {
        it->second += c * d;
        if (it->second.is_zero()) a.erase(it);
      }
    }
  }

  std::size_t inputs_ = 0;
  std::vector<Vec> rows_;
  std::vector<Key> pivots_;
  std::vector<std::map<std::size_t, Scalar>> combos_;
  std::vector<std::map<std::size_t, Scalar>> relations_;
  std::vector<std::size_t> independent_;
};

/// Echelon basis; row_reduce(V) spans the same space as V.
template <class Key, class Compare = std::less<Key>>
SpanSolver<Key, Compare> row_reduce(const std::vector<LinComb<Key, Compare>>& vs) {
  SpanSolver<Key, Compare> s;
  for (const auto& v : vs) s.insert(v);
  return s;
}

/// Null space of the matrix whose columns are `cols`: coefficient vectors a with sum a_j cols_j = 0.
template <class Key, class Compare = std::less<Key>>
std::vector<std::vector<Scalar>> kernel(const std::vector<LinComb<Key, Compare>>& cols) {
  return row_reduce(cols).relations();
}

/// Small dense matrix over Q(v); zero entries are skipped in products.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const Scalar& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.c_; ++j) {
          const Scalar& y = b(k, j);
          if (!y.is_zero()) m(i, j) += x * y;
        }
      }
    return m;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!b.a_[i].is_zero()) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!b.a_[i].is_zero()) a.a_[i] -= b.a_[i];
    return a;
  }
  friend Matrix operator*(const Scalar& s, Matrix a) {
    for (auto& x : a.a_)
      if (!x.is_zero()) x *= s;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Kronecker product.
  friend Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.r_ * b.r_, a.c_ * b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t j = 0; j < a.c_; ++j) {
        const Scalar& x = a(i, j);
        if (x.is_zero()) continue;
        for (std::size_t k = 0; k < b.r_; ++k)
          for (std::size_t l = 0; l < b.c_; ++l)
            if (!b(k, l).is_zero()) m(i * b.r_ + k, j * b.c_ + l) = x * b(k, l);
      }
    return m;
  }

  /// Matrix-vector product.
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
    if (v.size() != c_) throw std::invalid_argument("vector length mismatch");
    std::vector<Scalar> out(r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (!a_[i * c_ + j].is_zero() && !v[j].is_zero()) out[i] += a_[i * c_ + j] * v[j];
    return out;
  }

  /// Rank by fraction-based elimination on a copy.
  std::size_t rank() const {
    std::vector<LinComb<std::size_t>> rowsv;
    for (std::size_t i = 0; i < r_; ++i) {
      LinComb<std::size_t> v;
      for (std::size_t j = 0; j < c_; ++j) v.add(j, a_[i * c_ + j]);
      rowsv.push_back(std::move(v));
    }
    return row_reduce(rowsv).rank();
  }

  /// Null space as column vectors.
  std::vector<std::vector<Scalar>> kernel() const {
    std::vector<LinComb<std::size_t>> colsv;
    for (std::size_t j = 0; j < c_; ++j) {
      LinComb<std::size_t> v;
      for (std::size_t i = 0; i < r_; ++i) v.add(i, a_[i * c_ + j]);
      colsv.push_back(std::move(v));
    }
    return linalg::kernel(colsv);
  }

 private:
  void check_same(const Matrix& b) const {
    if (r_ != b.r_ || c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

}  // namespace qlie::linalg
