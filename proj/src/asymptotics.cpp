#include "permbase/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "permbase/bigint.hpp"
#include "permbase/errors.hpp"
#include "permbase/multinomial.hpp"

namespace permbase {

namespace {

void check_li_prime(std::uint64_t p) {
  if (p <= 3)
    throw InvalidArgument("Li's estimate needs p > 3, got " + std::to_string(p));
  if (!is_prime(p))
    throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
}

// log((1 - x^p) / (x - x^2)) for 0 < x < 1.
double log_ratio(double x, std::uint64_t p) {
  const double p_log_x = static_cast<double>(p) * std::log(x);
  const double one_minus_xp = -std::expm1(p_log_x);
  return std::log(one_minus_xp) - std::log(x) - std::log1p(-x);
}

} // namespace

double entropy_exponent(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw InvalidArgument("entropy_exponent: lambda must lie in [0, 1]");
  auto xlog2x = [](double t) { return t > 0.0 ? t * std::log2(t) : 0.0; };
  return 1.0 - lambda - xlog2x(lambda) - xlog2x(1.0 - lambda);
}

EntropyMaximum argmax_entropy() {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = 1.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = entropy_exponent(x1);
  double f2 = entropy_exponent(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = entropy_exponent(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = entropy_exponent(x1);
    }
  }
  const double lambda = (lo + hi) / 2.0;
  return {lambda, entropy_exponent(lambda)};
}

double p2_exponent_exact(std::uint64_t a, std::uint64_t r) {
  if (a == 0)
    throw InvalidArgument("p2_exponent_exact: a must be positive");
  if (r > a)
    throw InvalidArgument("p2_exponent_exact: r must lie in [0, a]");
  const BigInt product =
      big_pow(2, a - r + 1) * multinomial_partial_sum(a, static_cast<std::int64_t>(r), 2);
  return log_big(product) / (static_cast<double>(a + 1) * std::numbers::ln2);
}

LiParams li_x(std::uint64_t p, double theta) {
  check_li_prime(p);
  if (!(theta >= -1.0 && theta <= 1.0))
    throw InvalidArgument("theta must lie in [-1, 1]");

  LiParams li;
  li.p = p;
  li.c = isqrt(p);
  li.theta = theta;
  const double c = static_cast<double>(li.c);
  const double pd = static_cast<double>(p);
  li.d = 1.0 + 1.0 / c;
  const double log_d = std::log1p(1.0 / c);
  li.first_correction = pd / (c * c) * std::exp(-(pd + 2.0) * log_d);
  li.second_correction = std::exp(3.0 * std::log(pd) - 2.0 * pd * log_d);
  li.x = 1.0 / li.d + li.first_correction + theta * li.second_correction;
  if (!std::isfinite(li.x) || !(li.x > 0.0 && li.x < 1.0))
    throw InvalidArgument("li_x: x = " + std::to_string(li.x) + " outside (0, 1) for p = " +
                          std::to_string(p) + ", theta = " + std::to_string(theta));

  const double x = li.x;
  const double p_log_x = pd * std::log(x);
  const double one_minus_xp = -std::expm1(p_log_x);
  const double inner = x / ((1.0 - x) * (1.0 - x)) -
                       pd * pd * std::exp(p_log_x) / (one_minus_xp * one_minus_xp);
  if (!std::isfinite(inner) || !(inner > 0.0))
    throw InvalidArgument("li_x: phi(x) undefined (variance term " + std::to_string(inner) +
                          ") for p = " + std::to_string(p));
  li.phi = 1.0 / std::sqrt(inner);
  return li;
}

double li_log_estimate(std::uint64_t a, std::uint64_t p, double theta) {
  if (a == 0)
    throw InvalidArgument("li_estimate: a must be positive");
  const LiParams li = li_x(p, theta);
  const double ad = static_cast<double>(a);
  return std::log(li.phi) - 0.5 * std::log(2.0 * std::numbers::pi * ad) +
         ad * log_ratio(li.x, p);
}

double li_estimate(std::uint64_t a, std::uint64_t p, double theta) {
  return std::exp(li_log_estimate(a, p, theta));
}

double exponent_lower_bound(std::uint64_t p, double theta) {
  const LiParams li = li_x(p, theta);
  const double pd = static_cast<double>(p);
  const double value =
      1.0 - static_cast<double>(li.c) / (pd - 1.0) + log_ratio(li.x, p) / std::log(pd);
  if (!std::isfinite(value))
    throw InvalidArgument("exponent_lower_bound: non-finite value for p = " +
                          std::to_string(p));
  return value;
}

std::vector<ExponentRow> exponent_table(std::vector<std::uint64_t> p_list,
                                        bool include_p2_context) {
  if (include_p2_context && std::find(p_list.begin(), p_list.end(), 2) == p_list.end())
    p_list.push_back(2);
  std::sort(p_list.begin(), p_list.end());
  p_list.erase(std::unique(p_list.begin(), p_list.end()), p_list.end());

  std::vector<ExponentRow> rows;
  for (const auto p : p_list) {
    ExponentRow row;
    row.p = p;
    if (p == 2) {
      const double value = argmax_entropy().value;
      row.theta_minus = row.theta_zero = row.theta_plus = value;
    } else {
      check_li_prime(p);
      auto at = [p](double theta) -> std::optional<double> {
        try {
          return exponent_lower_bound(p, theta);
        } catch (const InvalidArgument&) {
          return std::nullopt;
        }
      };
      row.theta_minus = at(-1.0);
      row.theta_zero = at(0.0);
      row.theta_plus = at(1.0);
    }
    rows.push_back(row);
  }
  return rows;
}

} // namespace permbase
