#pragma once

#include <cstdint>
#include <vector>

#include "permbase/bigint.hpp"

/**
 * @file multinomial.hpp
 * @brief Extended binomial coefficients.
 *
 * The extended binomial coefficient C(a, k)^{(p-1)} is the coefficient of
 * x^k in (1 + x + ... + x^{p-1})^a. Equivalently it counts the a-tuples
 * (l_1, ..., l_a) with 0 <= l_i <= p-1 and l_1 + ... + l_a = k. For p = 2
 * these are the ordinary binomial coefficients.
 *
 * All values are exact. Rows have length a(p-1)+1 and are guarded by a
 * size cap so that a typo on the command line cannot allocate gigabytes.
 */

namespace permbase {

inline constexpr std::uint64_t kDefaultRowCap = 100000;

struct CoefficientRow {
  std::uint64_t a = 0;
  std::uint64_t p = 2;
  std::vector<BigInt> coeffs;

  /// Degree of (1 + x + ... + x^{p-1})^a, i.e. a(p-1).
  std::uint64_t top_degree() const { return a * (p - 1); }
};

/// Full coefficient row of (1 + x + ... + x^{p-1})^a.
CoefficientRow multinomial_row(std::uint64_t a, std::uint64_t p,
                               std::uint64_t row_cap = kDefaultRowCap);

/// Coefficient of x^k; zero for k < 0 or k > a(p-1).
BigInt multinomial_coeff(std::uint64_t a, std::int64_t k, std::uint64_t p,
                         std::uint64_t row_cap = kDefaultRowCap);

/// Sum of the coefficients of x^0 .. x^b. Requires 0 <= b <= a(p-1).
BigInt multinomial_partial_sum(std::uint64_t a, std::int64_t b, std::uint64_t p,
                               std::uint64_t row_cap = kDefaultRowCap);

} // namespace permbase
