#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

/**
 * @file ring.hpp
 * @brief The coordinate ring B = F_p[x_1, ..., x_a] / (x_i^p - x_i).
 *
 * Elements of B are exactly the functions V = F_p^a -> F_p. A RingElement is
 * stored densely as its p^a reduced coefficients. Exponent tuples
 * (l_1, ..., l_a) and points (v_1, ..., v_a) share one indexing scheme,
 * little-endian base p:
 *
 *     index = l_1 + l_2 p + ... + l_a p^{a-1}
 *
 * so coefficient vectors, value tables and point encodings of the
 * permutation groups built on top of this all agree.
 */

namespace permbase {

/// Largest p^a the ring code will allocate by default.
inline constexpr std::size_t kDefaultRingCap = std::size_t{1} << 20;

/// p^a, throwing CapExceeded when it exceeds cap.
std::size_t ring_size(std::uint32_t p, std::uint32_t a, std::size_t cap = kDefaultRingCap);

std::vector<std::uint32_t> index_to_tuple(std::size_t index, std::uint32_t p, std::uint32_t a);
std::size_t tuple_to_index(std::span<const std::uint32_t> tuple, std::uint32_t p);

/// An element of V = F_p^a.
class FpVector {
public:
  FpVector(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> entries);

  static FpVector zero(std::uint32_t p, std::uint32_t a);
  /// Canonical basis vector e_i, 0-based i.
  static FpVector unit(std::uint32_t p, std::uint32_t a, std::uint32_t i);
  static FpVector from_index(std::uint32_t p, std::uint32_t a, std::size_t index);

  std::uint32_t p() const { return p_; }
  std::uint32_t a() const { return static_cast<std::uint32_t>(entries_.size()); }
  const std::vector<std::uint32_t>& entries() const { return entries_; }
  std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
  std::size_t index() const { return tuple_to_index(entries_, p_); }
  bool is_zero() const;

  FpVector operator+(const FpVector& other) const;
  bool operator==(const FpVector&) const = default;

private:
  std::uint32_t p_;
  std::vector<std::uint32_t> entries_;
};

class RingElement {
public:
  /// The zero element.
  RingElement(std::uint32_t p, std::uint32_t a);
  RingElement(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> coeffs);

  static RingElement constant(std::uint32_t p, std::uint32_t a, std::uint32_t c);
  static RingElement monomial(std::uint32_t p, std::uint32_t a,
                              std::span<const std::uint32_t> exponents);
  /// The coordinate function x_i, 0-based i.
  static RingElement variable(std::uint32_t p, std::uint32_t a, std::uint32_t i);

  std::uint32_t p() const { return p_; }
  std::uint32_t a() const { return a_; }
  std::size_t size() const { return coeffs_.size(); }
  std::uint32_t coeff(std::size_t index) const { return coeffs_[index]; }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  RingElement operator+(const RingElement& other) const;
  RingElement operator-(const RingElement& other) const;
  RingElement operator*(const RingElement& other) const;
  RingElement scaled(std::uint32_t c) const;
  bool operator==(const RingElement&) const = default;

  /// Nonzero terms as (exponent tuple, coefficient), in canonical index order.
  std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> terms() const;
  /// Human readable form, e.g. "2 + x1*x2^2".
  std::string to_string() const;

private:
  void check_compatible(const RingElement& other) const;

  std::uint32_t p_;
  std::uint32_t a_;
  std::vector<std::uint32_t> coeffs_;
};

/// Values of a function V -> F_p, indexed by point index.
using ValueTable = std::vector<std::uint32_t>;

std::uint32_t evaluate(const RingElement& f, const FpVector& v);
ValueTable to_function(const RingElement& f);
RingElement interpolate(std::uint32_t p, std::uint32_t a, const ValueTable& table);

/// Total degree of the reduced representative; nullopt stands for the
/// degree of the zero element (minus infinity).
std::optional<std::uint32_t> degree(const RingElement& f);

/// True iff f = 0 or deg f <= bound.
bool degree_at_most(const RingElement& f, std::uint32_t bound);

/// f^v, the function w -> f(v + w). Computed by expanding (x_i + v_i)^{l_i}.
RingElement translate(const RingElement& f, const FpVector& v);

/// [f, v] = f^v - f.
RingElement commutator_translation(const RingElement& f, const FpVector& v);

/// Number of points of V where f is nonzero.
std::size_t count_nonzeros(const RingElement& f);

/// All monomials x_l of total degree <= bound, in canonical index order.
std::vector<RingElement> low_degree_monomials(std::uint32_t p, std::uint32_t a,
                                              std::uint32_t bound);

inline constexpr std::uint64_t kDefaultSearchCap = 20'000'000;

/**
 * Minimum of count_nonzeros(f) over all nonzero f with deg f <= b, by
 * enumerating every coefficient vector on the degree <= b monomials.
 * The search visits p^D - 1 polynomials, D = number of such monomials;
 * throws CapExceeded when p^D exceeds search_cap.
 */
std::uint64_t min_nonzeros_bruteforce(std::uint32_t a, std::uint32_t p, std::uint32_t b,
                                      std::uint64_t search_cap = kDefaultSearchCap);

} // namespace permbase
