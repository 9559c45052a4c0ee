#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace permbase {

using BigInt = boost::multiprecision::cpp_int;

/// Natural logarithm of a positive big integer, from its top 53 bits and
/// exact bit length. Throws InvalidArgument for non-positive input.
double log_big(const BigInt& value);

BigInt big_pow(std::uint64_t base, std::uint64_t exponent);

/// True when value fits in an unsigned 64-bit integer.
bool fits_u64(const BigInt& value);

/// Narrowing conversion; throws CapExceeded when value does not fit.
std::uint64_t to_u64(const BigInt& value, const char* what);

std::string to_string(const BigInt& value);

bool is_prime(std::uint64_t n);

/// floor(sqrt(n)), exact.
std::uint64_t isqrt(std::uint64_t n);

} // namespace permbase
