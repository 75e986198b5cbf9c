#pragma once

// Gaussian (q-)binomial coefficients and the closed forms built on them.

#include <cstddef>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "iex/core.hpp"

namespace iex {

using QInt = BigInt;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt int_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    b *= b;
    exp >>= 1U;
  }
  return result;
}

/// [k]_q = 1 + q + ... + q^{k-1}
inline QInt q_integer(std::uint64_t k, std::uint64_t q) {
  QInt total = 0;
  QInt term = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    total += term;
    term *= q;
  }
  return total;
}

/// binom(n, k)_q = [n]_q ... [n-k+1]_q / ([1]_q ... [k]_q); the division is exact.
inline QInt gauss_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) throw contract_error("gauss_binomial needs 0 <= k <= n");
  if (q < 2) throw contract_error("gauss_binomial needs q >= 2");
  QInt num = 1;
  QInt den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= q_integer(n - i, q);
    den *= q_integer(i + 1, q);
  }
  QInt quot;
  QInt rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) throw error("gauss_binomial: inexact division (arithmetic bug)");
  return quot;
}

/// Checks sum_i q^{i(i-1)/2} binom(k,i)_q t^i == prod_{i<k} (1 + t q^i) exactly.
inline bool cauchy_identity_check(std::uint64_t k, std::uint64_t q, const Rational& t) {
  Rational lhs = 0;
  Rational t_pow = 1;
  for (std::uint64_t i = 0; i <= k; ++i) {
    lhs += Rational(int_pow(q, i * (i - 1) / 2) * gauss_binomial(k, i, q)) * t_pow;
    t_pow *= t;
  }
  Rational rhs = 1;
  for (std::uint64_t i = 0; i < k; ++i) rhs *= 1 + t * Rational(int_pow(q, i));
  return lhs == rhs;
}

/// Number of nonempty subspaces of PG(d, q): sum_{k=0}^{d} binom(d+1, k+1)_q.
inline QInt projective_region_count(std::uint64_t d, std::uint64_t q) {
  QInt total = 0;
  for (std::uint64_t k = 0; k <= d; ++k) total += gauss_binomial(d + 1, k + 1, q);
  return total;
}

/// Coefficient of a k-dimensional subspace in the unique formula: (-1)^k q^{k(k+1)/2}.
inline BigInt projective_coefficient(std::uint64_t k, std::uint64_t q) {
  BigInt c = int_pow(q, k * (k + 1) / 2);
  return k % 2 == 0 ? c : BigInt(-c);
}

/// Closed-form l1-norm: sum_{k=0}^{d} q^{k(k+1)/2} binom(d+1, k+1)_q.
inline QInt projective_expected_l1(std::uint64_t d, std::uint64_t q) {
  QInt total = 0;
  for (std::uint64_t k = 0; k <= d; ++k)
    total += int_pow(q, k * (k + 1) / 2) * gauss_binomial(d + 1, k + 1, q);
  return total;
}

}  // namespace iex
