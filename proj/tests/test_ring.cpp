#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "permbase/errors.hpp"
#include "permbase/ring.hpp"

using namespace permbase;

namespace {

RingElement random_element(std::mt19937& rng, std::uint32_t p, std::uint32_t a) {
  std::vector<std::uint32_t> coeffs(ring_size(p, a));
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  for (auto& c : coeffs)
    c = dist(rng);
  return RingElement(p, a, std::move(coeffs));
}

FpVector random_vector(std::mt19937& rng, std::uint32_t p, std::uint32_t a) {
  std::uniform_int_distribution<std::size_t> dist(0, ring_size(p, a) - 1);
  return FpVector::from_index(p, a, dist(rng));
}

RingElement x(std::uint32_t p, std::uint32_t a, std::uint32_t i) {
  return RingElement::variable(p, a, i);
}

} // namespace

TEST_SUITE("ring") {

TEST_CASE("indexing is little-endian base p") {
  CHECK(tuple_to_index(std::vector<std::uint32_t>{1, 2}, 3) == 7);
  CHECK(index_to_tuple(7, 3, 2) == std::vector<std::uint32_t>{1, 2});
  CHECK(FpVector::unit(3, 2, 1).index() == 3);
}

TEST_CASE("evaluate") {
  const RingElement f = x(2, 2, 0) * x(2, 2, 1);
  CHECK(evaluate(f, FpVector(2, 2, {1, 1})) == 1);
  CHECK(evaluate(f, FpVector(2, 2, {1, 0})) == 0);
  CHECK(evaluate(RingElement(3, 2), FpVector(3, 2, {2, 1})) == 0);
  CHECK_THROWS_AS(evaluate(f, FpVector(3, 2, {1, 1})), InvalidArgument);
  CHECK_THROWS_AS(evaluate(f, FpVector(2, 3, {1, 1, 0})), InvalidArgument);
}

TEST_CASE("to_function") {
  CHECK(to_function(RingElement::constant(2, 3, 1)) == ValueTable(8, 1));
  CHECK(to_function(x(3, 1, 0)) == ValueTable{0, 1, 2});
  // x^2 over F_3 takes values 0, 1, 1.
  const std::vector<std::uint32_t> sq{2};
  CHECK(to_function(RingElement::monomial(3, 1, sq)) == ValueTable{0, 1, 1});
}

TEST_CASE("interpolate") {
  CHECK(interpolate(2, 2, ValueTable(4, 1)) == RingElement::constant(2, 2, 1));
  // delta at the origin is (1 + x1)(1 + x2) over F_2
  const RingElement delta = interpolate(2, 2, ValueTable{1, 0, 0, 0});
  CHECK(delta == RingElement(2, 2, {1, 1, 1, 1}));
  CHECK(to_function(delta) == ValueTable{1, 0, 0, 0});
  CHECK_THROWS_AS(interpolate(2, 2, ValueTable(3, 0)), InvalidArgument);
  CHECK_THROWS_AS(interpolate(2, 2, ValueTable{0, 2, 0, 0}), InvalidArgument);
}

TEST_CASE("interpolate inverts to_function") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[trial % 3];
    const std::uint32_t a = 1 + static_cast<std::uint32_t>(trial % 3);
    const RingElement f = random_element(rng, p, a);
    CHECK(interpolate(p, a, to_function(f)) == f);
  }
}

TEST_CASE("evaluate agrees with to_function") {
  std::mt19937 rng(77);
  const RingElement f = random_element(rng, 5, 2);
  const ValueTable table = to_function(f);
  for (std::size_t w = 0; w < table.size(); ++w)
    CHECK(evaluate(f, FpVector::from_index(5, 2, w)) == table[w]);
}

TEST_CASE("degree") {
  const std::vector<std::uint32_t> e{2, 1};
  CHECK(degree(RingElement::monomial(3, 2, e)) == 3u);
  CHECK(degree(RingElement::constant(3, 2, 2)) == 0u);
  CHECK_FALSE(degree(RingElement(3, 2)).has_value());
  CHECK(degree_at_most(RingElement(3, 2), 0));
  // x^p reduces to x
  CHECK(degree(x(3, 1, 0) * x(3, 1, 0) * x(3, 1, 0)) == 1u);
  CHECK(x(3, 1, 0) * x(3, 1, 0) * x(3, 1, 0) == x(3, 1, 0));
}

TEST_CASE("translate") {
  const FpVector e1 = FpVector::unit(2, 2, 0);
  CHECK(translate(x(2, 2, 0), e1) == x(2, 2, 0) + RingElement::constant(2, 2, 1));
  const RingElement c = RingElement::constant(3, 2, 2);
  CHECK(translate(c, FpVector(3, 2, {1, 2})) == c);
}

TEST_CASE("translate: binomial expansion agrees with shifted value table") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7}[trial % 4];
    const std::uint32_t a = 1 + static_cast<std::uint32_t>(trial % 3);
    const RingElement f = random_element(rng, p, a);
    const FpVector v = random_vector(rng, p, a);
    CHECK(translate(f, v) == oracle::translate_via_table(f, v));
  }
}

TEST_CASE("translate is an action of V") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 5;
    const RingElement f = random_element(rng, p, 2);
    const FpVector u = random_vector(rng, p, 2);
    const FpVector v = random_vector(rng, p, 2);
    CHECK(translate(translate(f, u), v) == translate(f, u + v));
  }
}

TEST_CASE("commutators") {
  const FpVector e1 = FpVector::unit(2, 2, 0);
  CHECK(commutator_translation(x(2, 2, 0), e1) == RingElement::constant(2, 2, 1));
  CHECK(commutator_translation(x(2, 2, 0) * x(2, 2, 1), e1) == x(2, 2, 1));
  CHECK(commutator_translation(RingElement::constant(5, 2, 3), FpVector(5, 2, {4, 1})).is_zero());
  // check the two frozen values on value tables too
  CHECK(to_function(commutator_translation(x(2, 2, 0) * x(2, 2, 1), e1)) ==
        ValueTable{0, 0, 1, 1});
}

TEST_CASE("commutator with a nonzero translation lowers degree") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[trial % 3];
    const std::uint32_t a = 1 + static_cast<std::uint32_t>(trial % 3);
    const RingElement f = random_element(rng, p, a);
    FpVector v = random_vector(rng, p, a);
    if (v.is_zero())
      v = FpVector::unit(p, a, 0);
    const auto d = degree(f);
    if (!d || *d == 0)
      continue;
    const auto dc = degree(commutator_translation(f, v));
    CHECK((!dc || *dc <= *d - 1));
  }
}

TEST_CASE("evaluation is a ring homomorphism at every point") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 2;
    const RingElement f = random_element(rng, p, 3);
    const RingElement g = random_element(rng, p, 3);
    const FpVector v = random_vector(rng, p, 3);
    CHECK(evaluate(f * g, v) == evaluate(f, v) * evaluate(g, v) % p);
    CHECK(evaluate(f + g, v) == (evaluate(f, v) + evaluate(g, v)) % p);
  }
}

TEST_CASE("count_nonzeros") {
  CHECK(count_nonzeros(x(2, 2, 0) * x(2, 2, 1)) == 1);
  CHECK(count_nonzeros(RingElement::constant(3, 2, 1)) == 9);
  CHECK(count_nonzeros(RingElement(3, 2)) == 0);
}

TEST_CASE("min_nonzeros_bruteforce") {
  CHECK(min_nonzeros_bruteforce(3, 2, 2) == 2);
  CHECK(min_nonzeros_bruteforce(2, 3, 3) == 2);
  // witnesses
  CHECK(count_nonzeros(x(2, 3, 0) * x(2, 3, 1)) == 2);
  const RingElement one = RingElement::constant(3, 2, 1);
  const RingElement w = (one - x(3, 2, 0) * x(3, 2, 0)) * (one + x(3, 2, 1));
  CHECK(degree(w) == 3u);
  CHECK(count_nonzeros(w) == 2);
  for (std::uint32_t a = 1; a <= 3; ++a)
    for (std::uint32_t p : {2u, 3u, 5u})
      if (ring_size(p, a) <= 125)
        CHECK(min_nonzeros_bruteforce(a, p, 0) == ring_size(p, a));
  CHECK_THROWS_AS(min_nonzeros_bruteforce(3, 2, 4), InvalidArgument);
  CHECK_THROWS_AS(min_nonzeros_bruteforce(5, 2, 5, 1000), CapExceeded);
}

TEST_CASE("serialized terms are in canonical order") {
  const RingElement f = x(3, 2, 1) + x(3, 2, 0).scaled(2) + RingElement::constant(3, 2, 1);
  const auto terms = f.terms();
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].first == std::vector<std::uint32_t>{0, 0});
  CHECK(terms[1] == std::make_pair(std::vector<std::uint32_t>{1, 0}, 2u));
  CHECK(terms[2].first == std::vector<std::uint32_t>{0, 1});
  CHECK(f.to_string() == "1 + 2*x1 + x2");
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(RingElement(4, 2), InvalidArgument);
  CHECK_THROWS_AS(RingElement(2, 0), InvalidArgument);
  CHECK_THROWS_AS(RingElement(2, 2, {0, 1, 2, 0}), InvalidArgument);
  CHECK_THROWS_AS(RingElement(2, 2, {0, 1}), InvalidArgument);
  CHECK_THROWS_AS(FpVector(3, 2, {0, 3}), InvalidArgument);
  CHECK_THROWS_AS(ring_size(2, 30, 1 << 20), CapExceeded);
}

}
