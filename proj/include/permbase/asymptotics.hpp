#pragma once

#include <cstdint>
#include <optional>
#include <vector>

/**
 * @file asymptotics.hpp
 * @brief Numeric evaluation of the exponent log_n(mu * b) in the limit.
 *
 * Two regimes:
 *  - p = 2, b = r = lambda * a: the exponent tends to
 *    1 - lambda - lambda log2(lambda) - (1 - lambda) log2(1 - lambda),
 *    maximised at lambda = 1/3 with value log2(3).
 *  - p > 3, b = c a with c = floor(sqrt(p)): the coefficient C(a, ca)^{(p-1)}
 *    is estimated with Li's saddle-point formula, parameterised by
 *    x = 1/d + p(d-1)^2/d^{p+2} + theta p^3/d^{2p}, d = 1 + 1/c, |theta| <= 1.
 *
 * theta is never fixed silently; callers pass it, and tables report the
 * three values theta in {-1, 0, +1}.
 */

namespace permbase {

/// 1 - l - l log2 l - (1 - l) log2(1 - l), extended continuously to [0, 1].
double entropy_exponent(double lambda);

struct EntropyMaximum {
  double lambda = 0.0;
  double value = 0.0;
};

/// Golden-section search on (0, 1), absolute tolerance 1e-12 in lambda.
EntropyMaximum argmax_entropy();

/// log(2^{a-r+1} * sum_{k<=r} C(a,k)) / log(2^{a+1}) from exact integers.
double p2_exponent_exact(std::uint64_t a, std::uint64_t r);

struct LiParams {
  std::uint64_t p = 5;
  std::uint64_t c = 2;
  double d = 1.5;
  double theta = 0.0;
  double x = 0.0;
  double phi = 0.0;
  double first_correction = 0.0;  ///< p (d-1)^2 / d^{p+2}
  double second_correction = 0.0; ///< p^3 / d^{2p}, the coefficient of theta
};

/// Throws InvalidArgument for p <= 3, composite p, |theta| > 1, or when x
/// falls outside (0, 1) or phi is not a finite positive number.
LiParams li_x(std::uint64_t p, double theta);

/// Natural log of phi(x) / sqrt(2 pi a) * ((1 - x^p) / (x - x^2))^a.
double li_log_estimate(std::uint64_t a, std::uint64_t p, double theta);
double li_estimate(std::uint64_t a, std::uint64_t p, double theta);

/// 1 - floor(sqrt(p))/(p-1) + log_p((1 - x^p)/(x - x^2)).
double exponent_lower_bound(std::uint64_t p, double theta);

struct ExponentRow {
  std::uint64_t p = 0;
  /// Bound at theta = -1, 0, +1; empty where li_x rejects that theta.
  std::optional<double> theta_minus;
  std::optional<double> theta_zero;
  std::optional<double> theta_plus;
};

/**
 * Rows sorted by p. p = 2 is routed to the entropy maximum log2(3) (all
 * three columns, theta plays no role there); every other p must be a prime
 * greater than 3. With include_p2_context a p = 2 row is added if missing.
 */
std::vector<ExponentRow> exponent_table(std::vector<std::uint64_t> p_list,
                                        bool include_p2_context = true);

} // namespace permbase
