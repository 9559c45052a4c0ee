#include <doctest.h>

#include <chrono>

#include "oracles.hpp"
#include "permbase/errors.hpp"
#include "permbase/multinomial.hpp"

using namespace permbase;

TEST_SUITE("multinomial") {

TEST_CASE("row of (1+x+x^2)^4 matches the worked expansion") {
  const CoefficientRow row = multinomial_row(4, 3);
  const std::vector<BigInt> expected{1, 4, 10, 16, 19, 16, 10, 4, 1};
  CHECK(row.coeffs == expected);
  CHECK(row.top_degree() == 8);
}

TEST_CASE("small rows") {
  CHECK(multinomial_row(1, 5).coeffs == std::vector<BigInt>{1, 1, 1, 1, 1});
  CHECK(multinomial_row(2, 2).coeffs == std::vector<BigInt>{1, 2, 1});
  CHECK(multinomial_row(0, 7).coeffs == std::vector<BigInt>{1});
}

TEST_CASE("single coefficients") {
  CHECK(multinomial_coeff(4, 6, 3) == 10);
  CHECK(multinomial_coeff(4, 2, 3) == 10);
  CHECK(multinomial_coeff(4, 4, 3) == 19);
  for (std::uint64_t p : {2, 3, 5, 7})
    for (std::uint64_t a : {0, 1, 4, 9})
      CHECK(multinomial_coeff(a, 0, p) == 1);
}

TEST_CASE("out of range k gives zero") {
  CHECK(multinomial_coeff(4, -1, 3) == 0);
  CHECK(multinomial_coeff(4, 9, 3) == 0);
  CHECK(multinomial_coeff(0, 1, 2) == 0);
}

TEST_CASE("partial sums") {
  CHECK(multinomial_partial_sum(3, 2, 2) == 7);
  CHECK(multinomial_partial_sum(4, 8, 3) == 81);
  CHECK(multinomial_partial_sum(4, 3, 3) == 31);
  CHECK(multinomial_partial_sum(12, 4, 2) == 794);
  CHECK_THROWS_AS(multinomial_partial_sum(4, 9, 3), InvalidArgument);
  CHECK_THROWS_AS(multinomial_partial_sum(4, -1, 3), InvalidArgument);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(multinomial_row(3, 4), InvalidArgument);
  CHECK_THROWS_AS(multinomial_coeff(3, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(multinomial_row(100, 1009, 1000), CapExceeded);
}

TEST_CASE("rows agree with tuple enumeration and are palindromic") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t a = 0; a <= 12; ++a) {
      if (p == 5 && a > 8)
        continue; // 5^a tuples; 5^8 is already 390625
      CAPTURE(p);
      CAPTURE(a);
      const CoefficientRow row = multinomial_row(a, p);
      const std::size_t top = a * (p - 1);
      REQUIRE(row.coeffs.size() == top + 1);
      CHECK(row.coeffs.front() == 1);
      CHECK(row.coeffs.back() == 1);
      BigInt sum = 0;
      for (std::size_t k = 0; k <= top; ++k) {
        CHECK(row.coeffs[k] == row.coeffs[top - k]);
        sum += row.coeffs[k];
      }
      CHECK(sum == big_pow(p, a));
      if (a > 0)
        for (std::size_t k = 0; k <= top; ++k)
          CHECK(row.coeffs[k] ==
                BigInt(oracle::count_tuples_with_sum(a, static_cast<std::int64_t>(k), p)));
    }
  }
}

TEST_CASE("p = 2 gives ordinary binomial coefficients") {
  for (std::uint64_t a = 0; a <= 40; ++a)
    for (std::uint64_t k = 0; k <= a; ++k)
      CHECK(multinomial_coeff(a, static_cast<std::int64_t>(k), 2) ==
            oracle::binomial_by_factorials(a, k));
}

TEST_CASE("large rows stay exact") {
  // 3^60 overflows 64 bits.
  const CoefficientRow row = multinomial_row(60, 3);
  BigInt sum = 0;
  for (const auto& c : row.coeffs)
    sum += c;
  CHECK(sum == big_pow(3, 60));
  CHECK(row.coeffs[60] > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

}
