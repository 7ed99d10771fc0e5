#pragma once

/**
 * @file tables.hpp
 * @brief Published values used as oracles by the verification suites.
 *
 * Bracket cells are written "Name:coefficient[,Name:coefficient...]" or "0".
 * Tensor cells use "Left*Right:coefficient". Coefficients use Scalar::parse syntax.
 */

#include <array>
#include <string_view>

namespace qlie::tables {

/// sl(2) brackets in the basis order (X+, X-, X0); row = left argument.
inline constexpr std::array<std::array<std::string_view, 3>, 3> sl2_brackets{{
    {"0", "X0:q+q^-1", "X+:-q^-1"},
    {"X0:-(q+q^-1)", "0", "X-:q"},
    {"X+:q", "X-:-q^-1", "X0:q-q^-1"},
}};

/// sl(3) brackets in the order (T1, T2, X1, X-1, X2, X-2, X12, X-12).
inline constexpr std::array<std::array<std::string_view, 8>, 8> sl3_brackets{{
    {"T1:-(q^2-q^-2)", "T1:-(q-q^-1)", "X1:-q(q+q^-1)", "X-1:q^-1(q+q^-1)", "X2:q^-2", "X-2:-q^2", "X12:-1",
     "X-12:1"},
    {"T1:-(q-q^-1)", "T1:-(q^2-q^-2),T2:q^3-q^-3", "X1:-q", "X-1:q^-1", "X2:q(q^2+q^-2)", "X-2:-q^-1(q^2+q^-2)",
     "X12:q^3", "X-12:-q^-3"},
    {"X1:q^-1(q+q^-1)", "X1:q^-1", "0", "T1:1", "X12:q^{-3/2}", "0", "0", "X-2:q^{1/2}"},
    {"X-1:-q(q+q^-1)", "X-1:-q", "T1:-1", "0", "0", "X-12:-q^{3/2}", "X2:-q^{-1/2}", "0"},
    {"X2:-q^2", "X2:-q^-1(q^2+q^-2)", "X12:-q^{3/2}", "0", "0", "T1:q^-1(q-q^-1),T2:-q", "0", "X-1:-q^{-5/2}"},
    {"X-2:q^-2", "X-2:q(q^2+q^-2)", "0", "X-12:q^{-3/2}", "T1:q(q-q^-1),T2:q^-1", "0", "X1:q^{5/2}", "0"},
    {"X12:1", "X12:-q^-3", "0", "X2:q^{1/2}", "0", "X1:-q^{-5/2}", "0", "T1:-q^-1,T2:1"},
    {"X-12:-1", "X-12:q^3", "X-2:-q^{-1/2}", "0", "X-1:q^{5/2}", "0", "T1:q,T2:-1", "0"},
}};

struct TensorLine {
  std::string_view label;
  std::string_view input;   ///< "A*B"
  std::string_view output;  ///< tensor cell
};

/// (q^2 - 1 + q^-2) gamma on sl(2), unambiguous lines.
inline constexpr std::array<TensorLine, 8> sl2_gamma_prime{{
    {"X+ (x) X+", "X+*X+", "0"},
    {"X- (x) X-", "X-*X-", "0"},
    {"X+ (x) X0", "X+*X0", "X+*X0:q^-2,X0*X+:-1"},
    {"X- (x) X0", "X-*X0", "X-*X0:q^2,X0*X-:-1"},
    {"X0 (x) X+", "X0*X+", "X0*X+:q^2,X+*X0:-1"},
    {"X0 (x) X-", "X0*X-", "X0*X-:q^-2,X-*X0:-1"},
    {"X+ (x) X-", "X+*X-", "X+*X-:1,X-*X+:-1,X0*X0:q^2-q^-2"},
    {"X- (x) X+", "X-*X+", "X+*X-:-1,X-*X+:1,X0*X0:-(q^2-q^-2)"},
}};

/// The second printed line labelled X+ (x) X0.
inline constexpr std::string_view sl2_gamma_prime_duplicate =
    "X0*X0:(q-q^-1)^2,X+*X-:(q-q^-1)/(q+q^-1),X-*X+:-(q-q^-1)/(q+q^-1)";

struct HighestWeight {
  std::string_view name;
  std::string_view tensor;
  std::array<int, 2> weight;  ///< root coordinates (multiples of H_1, H_2)
  std::string_view gamma;     ///< eigenvalue times (q^2 - 1 + q^-2)
};

/// Highest-weight vectors of the simple summands of sl(3)_q (x) sl(3)_q.
inline constexpr std::array<HighestWeight, 6> sl3_highest_weights{{
    {"W27", "X12*X12:1", {2, 2}, "0"},
    {"W10", "X1*X12:q^{1/2},X12*X1:-q^{-1/2}", {2, 1}, "1+q^-2"},
    {"W10*", "X2*X12:q^{1/2},X12*X2:-q^{-1/2}", {1, 2}, "q^2+1"},
    {"W8s",
     "X1*X2:q^{5/2}(q+q^-1)+q^{-5/2},X2*X1:q^{-5/2}(q+q^-1)+q^{5/2},T1*X12:-q^4,T2*X12:-q^-1,X12*T1:-q^-4,X12*T2:-q",
     {1, 1}, "0"},
    {"W8a", "X1*X2:q^{3/2},X2*X1:-q^{-3/2},T1*X12:-q^2,T2*X12:q,X12*T1:q^-2,X12*T2:-q^-1", {1, 1}, "q^2+q^-2"},
    {"W1",
     "T1*T2:1,T2*T1:1,T1*T1:-(q+q^-1),T2*T2:-(q+q^-1),X1*X-1:(q^2+1+q^-2)q^-1,X-1*X1:(q^2+1+q^-2)q,"
     "X2*X-2:(q^2+1+q^-2)q^-1,X-2*X2:(q^2+1+q^-2)q,X12*X-12:-(q^2+1+q^-2)q^-2,X-12*X12:-(q^2+1+q^-2)q^2",
     {0, 0}, "0"},
}};

}  // namespace qlie::tables
