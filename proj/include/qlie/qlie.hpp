#pragma once

/**
 * @file qlie.hpp
 * @brief Quantum Lie algebras inside U_q(sl(n)).
 *
 * Starting from the group-like seed q^{-4 lambda}, the span Lbar of its
 * adjoint orbit splits as K C + L where C is the central element and L is
 * the orbit of X_1 = ad E_1(seed). On a basis x_1..x_d of L:
 *
 *   bracket      [x_i, x_j] = ad x_i (x_j) = beta_ij^k x_k
 *   sigma        sigma(x (x) y) = sum ad x_(1)(y) (x) x_(2) - [x, y] (x) C
 *   antisymm.    gamma = (1 - sigma) / (q^2 - 1 + q^-2)
 *
 * Tensor indices are flattened as (i, j) -> i * d + j. Matrices of sigma and
 * gamma act on coordinate columns: column (i, j) holds the image of x_i (x) x_j.
 */

#include "qlie/linalg.hpp"
#include "qlie/uq.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qlie {

using uq::Algebra;
using uq::Element;
using uq::TensorElement;
using uq::Word;
using linalg::Matrix;
using Span = linalg::SpanSolver<Word, rw::TermOrder>;
using Progress = std::function<void(const std::string&)>;

/// q - q^-1
inline Scalar q_diff() { return Scalar::q_pow(1) - Scalar::q_pow(-1); }
/// q^2 - 1 + q^-2, the ad C eigenvalue and the denominator of gamma.
inline Scalar casimir_eigenvalue() { return Scalar::q_pow(2) - Scalar(1) + Scalar::q_pow(-2); }

/// Rank of the span of the ad-orbit of seed under ad E_i, ad F_i (breadth first).
/// Throws when the dimension exceeds cap.
inline std::vector<Element> ad_orbit(const Algebra& A, const Element& seed, std::size_t cap, Span* span_out = nullptr) {
  Span span;
  std::vector<Element> found;
  std::vector<Element> queue{seed};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    if (x.is_zero() || !span.insert(x)) continue;
    found.push_back(x);
    if (found.size() > cap) throw std::runtime_error("ad-orbit exceeds dimension cap " + std::to_string(cap));
    for (int i = 1; i <= A.rank(); ++i) {
      queue.push_back(A.ad_E(i, x));
      queue.push_back(A.ad_F(i, x));
    }
  }
  if (span_out) *span_out = std::move(span);
  return found;
}

struct NamedBasis {
  std::vector<std::string> names;
  std::vector<Element> vectors;
};

/// The bases used for sl(2) and sl(3) at lambda = w_1; other cases get the orbit of X_1.
inline NamedBasis named_basis(const Algebra& A, const Weight& lambda, const Element& C, const std::vector<Element>& orbit_L) {
  const Scalar qd = q_diff(), qdi = q_diff().inverse();
  const Element seed = A.K(-4 * lambda);
  NamedBasis b;
  if (A.n() == 2 && lambda == fundamental(1)) {
    b.names = {"X+", "X-", "X0"};
    b.vectors = {A.ad_E(1, seed) * qdi, A.ad_F(1, seed) * (-qdi), (C - seed) * qdi};
    return b;
  }
  if (A.n() == 3 && lambda == fundamental(1)) {
    const Element T1 = A.ad_F(1, A.ad_E(1, seed)) * qdi;
    const Element T2 = A.ad_F(2, A.ad_E(2, T1));
    const Element X1 = A.ad_E(1, seed) * qdi;
    const Element X12 = A.ad_E(2, X1);
    const Element X2 = A.ad_F(1, X12);
    const Element Xm1 = A.ad_F(1, seed) * qdi;
    const Element Xm12 = A.ad_F(2, Xm1);
    const Element Xm2 = A.ad_E(1, Xm12);
    b.names = {"T1", "T2", "X1", "X-1", "X2", "X-2", "X12", "X-12"};
    b.vectors = {T1, T2, X1, Xm1, X2, Xm2, X12, Xm12};
    return b;
  }
  for (std::size_t k = 0; k < orbit_L.size(); ++k) {
    b.names.push_back("v" + std::to_string(k + 1));
    b.vectors.push_back(orbit_L[k]);
  }
  return b;
}

using Beta = std::vector<std::vector<std::vector<Scalar>>>;  // beta[i][j][k]

class QuantumLieAlgebra {
 public:
  QuantumLieAlgebra(const Algebra& A, const Weight& lambda, const Progress& progress = {})
      : A_(A), lambda_(lambda), progress_(progress) {
    note("building Lbar");
    seed_ = A_.K(-4 * lambda_);
    lbar_orbit_ = ad_orbit(A_, seed_, 64, &lbar_span_);
    note("central element");
    C_ = A_.central_element(lambda_);
    if (!lbar_span_.contains(C_)) throw std::logic_error("central element outside Lbar");
    note("building L");
    Element X1;
    for (int i = 1; i <= A_.rank() && X1.is_zero(); ++i) X1 = A_.ad_E(i, seed_);
    Span lspan;
    orbit_L_ = ad_orbit(A_, X1, 64, &lspan);
    if (orbit_L_.size() + 1 != lbar_orbit_.size())
      throw std::logic_error("dim L = " + std::to_string(orbit_L_.size()) + " but dim Lbar = " + std::to_string(lbar_orbit_.size()));
    if (lspan.contains(C_)) throw std::logic_error("C lies in L");
    if (!lspan.contains(seed_ - C_)) throw std::logic_error("seed - C is not in L");
    NamedBasis nb = named_basis(A_, lambda_, C_, orbit_L_);
    names_ = std::move(nb.names);
    basis_ = std::move(nb.vectors);
    for (const auto& x : basis_) {
      if (!lspan.contains(x)) throw std::logic_error("basis vector outside L");
      if (!span_.insert(x)) throw std::logic_error("named basis is dependent");
    }
    if (span_.rank() != orbit_L_.size()) throw std::logic_error("named basis does not span L");
    for (const auto& x : basis_) lbar_named_.insert(x);
    lbar_named_.insert(C_);
    note("brackets");
    compute_beta();
  }

  const Algebra& algebra() const { return A_; }
  const Weight& lambda() const { return lambda_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t dim_lbar() const { return lbar_orbit_.size(); }
  const Element& seed() const { return seed_; }
  const Element& C() const { return C_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Element>& basis() const { return basis_; }
  const std::vector<Element>& lbar_orbit() const { return lbar_orbit_; }
  const Beta& beta() const { return beta_; }
  std::size_t index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    throw std::out_of_range("no basis vector named " + name);
  }
  const Element& x(const std::string& name) const { return basis_[index(name)]; }

  /// Coordinates in the named basis of L, or nullopt outside L.
  std::optional<std::vector<Scalar>> coordinates(const Element& y) const { return span_.coordinates(y); }
  /// Coordinates in (x_1, ..., x_d, C), or nullopt outside Lbar.
  std::optional<std::vector<Scalar>> lbar_coordinates(const Element& y) const { return lbar_named_.coordinates(y); }

  std::vector<Scalar> require_coordinates(const Element& y, const std::string& what) const {
    auto c = coordinates(y);
    if (!c) throw std::logic_error(what + " is not in L: " + A_.str(y));
    return *c;
  }

  Element combination(const std::vector<Scalar>& c) const {
    Element out;
    for (std::size_t k = 0; k < c.size(); ++k) out.add_scaled(basis_[k], c[k]);
    return out;
  }

  /// Renders sum c_k x_k with basis names.
  std::string format(const std::vector<Scalar>& c) const {
    std::string s;
    bool first = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].is_zero()) continue;
      append_term(s, c[k], names_[k], first);
      first = false;
    }
    return first ? "0" : s;
  }

  /// Replaces one structure constant (negative-control hook).
  void corrupt_beta(std::size_t i, std::size_t j, std::size_t k, const Scalar& delta) {
    beta_.at(i).at(j).at(k) += delta;
    sigma_.reset();
    sigma_bar_.reset();
    gamma_.reset();
  }

  /// Matrix of ad x_k on L: column b is [x_k, x_b].
  Matrix ad_matrix(std::size_t k) const {
    const std::size_t d = dim();
    Matrix m(d, d);
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t a = 0; a < d; ++a) m(a, b) = beta_[k][b][a];
    return m;
  }

  /// Matrix of y -> [y, x_k] on L.
  Matrix right_matrix(std::size_t k) const {
    const std::size_t d = dim();
    Matrix m(d, d);
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t a = 0; a < d; ++a) m(a, b) = beta_[b][k][a];
    return m;
  }

  const Matrix& sigma() const {
    if (!sigma_) sigma_ = compute_sigma(false);
    return *sigma_;
  }

  /// sigma-bar on Lbar with basis (x_1, ..., x_d, C).
  const Matrix& sigma_bar() const {
    if (!sigma_bar_) sigma_bar_ = compute_sigma(true);
    return *sigma_bar_;
  }

  const Matrix& gamma() const {
    if (!gamma_) {
      const std::size_t n2 = dim() * dim();
      gamma_ = casimir_eigenvalue().inverse() * (Matrix::identity(n2) - sigma());
    }
    return *gamma_;
  }

  /// Products x_k x_l in U, cached.
  const Element& product(std::size_t k, std::size_t l) const {
    const std::size_t d = dim();
    if (products_.empty()) products_.resize(d * d);
    auto& p = products_[k * d + l];
    if (!p) p = A_.multiply(basis_[k], basis_[l]);
    return *p;
  }

  /// Applies a flattened L (x) L coordinate vector through the multiplication of U.
  Element multiply_out(const std::vector<Scalar>& t) const {
    const std::size_t d = dim();
    Element out;
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = 0; l < d; ++l)
        if (!t[k * d + l].is_zero()) out.add_scaled(product(k, l), t[k * d + l]);
    return out;
  }

  /// Coordinates of an element of L (x) L given as a tensor in U (x) U.
  std::optional<std::vector<Scalar>> tensor_coordinates(const TensorElement& t) const {
    const std::size_t d = dim();
    std::map<Word, Element, rw::TermOrder> groups;
    for (const auto& [p, c] : t) groups[p.first].add(p.second, c);
    // Second slots first: t = sum_m m (x) s_m, s_m = sum_l a_ml x_l.
    std::vector<Element> firsts(d);
    for (const auto& [m, s] : groups) {
      auto a = coordinates(s);
      if (!a) return std::nullopt;
      for (std::size_t l = 0; l < d; ++l)
        if (!(*a)[l].is_zero()) firsts[l].add(m, (*a)[l]);
    }
    std::vector<Scalar> out(d * d);
    for (std::size_t l = 0; l < d; ++l) {
      if (firsts[l].is_zero()) continue;
      auto a = coordinates(firsts[l]);
      if (!a) return std::nullopt;
      for (std::size_t k = 0; k < d; ++k) out[k * d + l] = (*a)[k];
    }
    return out;
  }

  /// Tensor in U (x) U from flattened L (x) L coordinates.
  TensorElement tensor_from_coordinates(const std::vector<Scalar>& t) const {
    const std::size_t d = dim();
    TensorElement out;
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = 0; l < d; ++l)
        if (!t[k * d + l].is_zero()) out.add_scaled(A_.tensor(basis_[k], basis_[l]), t[k * d + l]);
    return out;
  }

  /// beta applied to a flattened L (x) L vector.
  std::vector<Scalar> apply_beta(const std::vector<Scalar>& t) const {
    const std::size_t d = dim();
    std::vector<Scalar> out(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Scalar& c = t[i * d + j];
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < d; ++k)
          if (!beta_[i][j][k].is_zero()) out[k] += c * beta_[i][j][k];
      }
    return out;
  }

 private:
  void note(const std::string& s) const {
    if (progress_) progress_("sl(" + std::to_string(A_.n()) + ") " + s);
  }

  void compute_beta() {
    const std::size_t d = dim();
    beta_.assign(d, std::vector<std::vector<Scalar>>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        beta_[i][j] = require_coordinates(A_.ad(basis_[i], basis_[j]), "[" + names_[i] + "," + names_[j] + "]");
  }

  /// sigma (bar = false) on L (x) L, or sigma-bar on Lbar (x) Lbar.
  Matrix compute_sigma(bool bar) const {
    note(bar ? "sigma-bar" : "sigma");
    const std::size_t d = dim();
    const std::size_t D = bar ? d + 1 : d;
    std::vector<Element> xs = basis_;
    if (bar) xs.push_back(C_);
    Matrix s(D * D, D * D);
    for (std::size_t i = 0; i < D; ++i) {
      std::map<Word, Element, rw::TermOrder> groups;
      for (const auto& [p, c] : A_.coproduct(xs[i])) groups[p.first].add(p.second, c);
      // u[k] = sum_m a_mk m where the second slot of m is sum_k a_mk x_k (+ a_mC C).
      std::vector<std::vector<std::pair<Word, Scalar>>> u(d + 1);
      for (const auto& [m, sm] : groups) {
        auto a = lbar_coordinates(sm);
        if (!a) throw std::logic_error("coideal property fails for " + (i < d ? names_[i] : std::string("C")) + ": " + A_.str(sm));
        for (std::size_t k = 0; k <= d; ++k)
          if (!(*a)[k].is_zero()) u[k].push_back({m, (*a)[k]});
      }
      if (!bar || i < d) {
        Element uc;
        for (const auto& [m, c] : u[d]) uc.add(m, c);
        if (uc != xs[i]) throw std::logic_error("C-component of Delta(" + names_[i] + ") is " + A_.str(uc));
      }
      for (std::size_t j = 0; j < D; ++j) {
        std::map<Word, Element, rw::TermOrder> admem;
        auto ad_m = [&](const Word& m) -> const Element& {
          auto it = admem.find(m);
          if (it == admem.end()) it = admem.emplace(m, A_.ad(m, xs[j])).first;
          return it->second;
        };
        for (std::size_t k = 0; k < D; ++k) {
          Element y;
          for (const auto& [m, c] : u[k]) y.add_scaled(ad_m(m), c);
          if (y.is_zero()) continue;
          std::vector<Scalar> cy;
          if (bar) {
            auto cc = lbar_coordinates(y);
            if (!cc) throw std::logic_error("sigma-bar image outside Lbar");
            cy = *cc;
          } else {
            cy = require_coordinates(y, "sigma image");
          }
          for (std::size_t l = 0; l < D; ++l)
            if (!cy[l].is_zero()) s(l * D + k, i * D + j) += cy[l];
        }
      }
    }
    return s;
  }

  const Algebra& A_;
  Weight lambda_;
  Progress progress_;
  Element seed_, C_;
  std::vector<Element> lbar_orbit_, orbit_L_;
  Span lbar_span_, span_, lbar_named_;
  std::vector<std::string> names_;
  std::vector<Element> basis_;
  Beta beta_;
  mutable std::optional<Matrix> sigma_, sigma_bar_, gamma_;
  mutable std::vector<std::optional<Element>> products_;
};

}  // namespace qlie
