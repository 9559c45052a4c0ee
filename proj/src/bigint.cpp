#include "permbase/bigint.hpp"

#include <cmath>
#include <limits>

#include "permbase/errors.hpp"

namespace permbase {

double log_big(const BigInt& value) {
  if (value <= 0)
    throw InvalidArgument("log_big: argument must be positive");
  const std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 53)
    return std::log(value.convert_to<double>());
  const std::size_t shift = bits - 53;
  const double mantissa = BigInt(value >> shift).convert_to<double>();
  return std::log(mantissa) + static_cast<double>(shift) * std::log(2.0);
}

BigInt big_pow(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

bool fits_u64(const BigInt& value) {
  return value >= 0 && value <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

std::uint64_t to_u64(const BigInt& value, const char* what) {
  if (!fits_u64(value))
    throw CapExceeded(std::string(what) + " does not fit in 64 bits: " + value.str());
  return value.convert_to<std::uint64_t>();
}

std::string to_string(const BigInt& value) { return value.str(); }

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r)
    --r;
  while ((r + 1) <= n / (r + 1))
    ++r;
  return r;
}

} // namespace permbase
