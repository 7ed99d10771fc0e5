#pragma once

/**
 * @file weight.hpp
 * @brief Integral weights of sl(n), n <= 4, in fundamental-weight coordinates.
 *
 * A Weight with coordinates (l_1, ..., l_r) is sum l_j w_j. The group-like
 * element q^lambda is indexed by such a vector. Root weights of the root
 * vectors are kept in simple-root (H) coordinates instead; since
 * <H_i, w_j> = delta_ij / 2, pairing a root (h_i) with a weight (l_j) gives
 * sum h_i l_i halves of q, i.e. that many powers of v.
 */

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace qlie {

inline constexpr int kMaxRank = 3;

struct Weight {
  std::array<int, kMaxRank> c{};

  constexpr int operator[](std::size_t i) const { return c[i]; }
  constexpr int& operator[](std::size_t i) { return c[i]; }

  constexpr bool is_zero() const {
    for (int x : c)
      if (x != 0) return false;
    return true;
  }

  friend constexpr Weight operator+(Weight a, const Weight& b) {
    for (std::size_t i = 0; i < kMaxRank; ++i) a.c[i] += b.c[i];
    return a;
  }
  friend constexpr Weight operator-(Weight a, const Weight& b) {
    for (std::size_t i = 0; i < kMaxRank; ++i) a.c[i] -= b.c[i];
    return a;
  }
  constexpr Weight operator-() const { return Weight{} - *this; }
  friend constexpr Weight operator*(int k, Weight a) {
    for (auto& x : a.c) x *= k;
    return a;
  }

  friend constexpr bool operator==(const Weight&, const Weight&) = default;
  friend constexpr auto operator<=>(const Weight&, const Weight&) = default;

  /// "(a,b)" over the first `rank` coordinates.
  std::string to_string(int rank) const {
    std::string s = "(";
    for (int i = 0; i < rank; ++i) {
      if (i) s += ',';
      s += std::to_string(c[static_cast<std::size_t>(i)]);
    }
    return s + ")";
  }
};

/// Fundamental weight w_j (1-based).
inline Weight fundamental(int j) {
  if (j < 1 || j > kMaxRank) throw std::out_of_range("fundamental weight index");
  Weight w;
  w[static_cast<std::size_t>(j - 1)] = 1;
  return w;
}

/// Simple root H_i (1-based) of sl(rank+1) in w-coordinates: row i of the Cartan matrix.
inline Weight simple_root(int rank, int i) {
  if (i < 1 || i > rank) throw std::out_of_range("simple root index");
  Weight w;
  const auto k = static_cast<std::size_t>(i - 1);
  w[k] = 2;
  if (i > 1) w[k - 1] = -1;
  if (i < rank) w[k + 1] = -1;
  return w;
}

/// Exponent of v in q^{<root, lambda>} for a root given in H-coordinates.
inline int pairing(const Weight& root_h, const Weight& lambda) {
  int s = 0;
  for (std::size_t i = 0; i < kMaxRank; ++i) s += root_h.c[i] * lambda.c[i];
  return s;
}

/// Converts H-coordinates to w-coordinates.
inline Weight h_to_omega(int rank, const Weight& h) {
  Weight w;
  for (int i = 1; i <= rank; ++i) {
    const int k = h[static_cast<std::size_t>(i - 1)];
    if (k) w = w + k * simple_root(rank, i);
  }
  return w;
}

}  // namespace qlie

template <>
struct std::hash<qlie::Weight> {
  std::size_t operator()(const qlie::Weight& w) const noexcept {
    std::size_t h = 0;
    for (int x : w.c) h = h * 1000003u + static_cast<std::size_t>(x + 512);
    return h;
  }
};
