#include "permbase/multinomial.hpp"

#include <string>

#include "permbase/errors.hpp"

namespace permbase {

namespace {

void check_inputs(std::uint64_t a, std::uint64_t p, std::uint64_t row_cap) {
  if (!is_prime(p))
    throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (a != 0 && (p - 1) > row_cap / a)
    throw CapExceeded("multinomial row of degree a(p-1) = " + std::to_string(a) + "*" +
                      std::to_string(p - 1) + " exceeds the size cap " +
                      std::to_string(row_cap));
}

} // namespace

CoefficientRow multinomial_row(std::uint64_t a, std::uint64_t p, std::uint64_t row_cap) {
  check_inputs(a, p, row_cap);

  // Multiply by (1 + x + ... + x^{p-1}) a times; each step is a sliding
  // window sum of width p over the previous row.
  std::vector<BigInt> row{1};
  for (std::uint64_t step = 0; step < a; ++step) {
    std::vector<BigInt> next(row.size() + p - 1);
    BigInt window = 0;
    for (std::size_t k = 0; k < next.size(); ++k) {
      if (k < row.size())
        window += row[k];
      if (k >= p)
        window -= row[k - p];
      next[k] = window;
    }
    row = std::move(next);
  }
  return CoefficientRow{a, p, std::move(row)};
}

BigInt multinomial_coeff(std::uint64_t a, std::int64_t k, std::uint64_t p,
                         std::uint64_t row_cap) {
  check_inputs(a, p, row_cap);
  if (k < 0 || static_cast<std::uint64_t>(k) > a * (p - 1))
    return 0;
  return multinomial_row(a, p, row_cap).coeffs[static_cast<std::size_t>(k)];
}

BigInt multinomial_partial_sum(std::uint64_t a, std::int64_t b, std::uint64_t p,
                               std::uint64_t row_cap) {
  check_inputs(a, p, row_cap);
  if (b < 0 || static_cast<std::uint64_t>(b) > a * (p - 1))
    throw InvalidArgument("partial sum bound b = " + std::to_string(b) +
                          " outside [0, a(p-1)] = [0, " + std::to_string(a * (p - 1)) + "]");
  const CoefficientRow row = multinomial_row(a, p, row_cap);
  BigInt sum = 0;
  for (std::int64_t k = 0; k <= b; ++k)
    sum += row.coeffs[static_cast<std::size_t>(k)];
  return sum;
}

} // namespace permbase
