#pragma once

#include <cstdint>
#include <vector>

#include "permbase/bigint.hpp"
#include "permbase/ring.hpp"

namespace permbase {

/// Validated (p, a, b) with b = r(p-1) + s, 0 <= s < p-1.
struct GroupParams {
  std::uint32_t p = 2;
  std::uint32_t a = 1;
  std::uint32_t b = 0;
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  BigInt n;         ///< p^{a+1}, the permutation degree
  BigInt dimension; ///< number of monomials of degree <= b

  static GroupParams make(std::uint32_t p, std::uint32_t a, std::uint32_t b);

  /// Index d of the filtration term B_d used by G_b, i.e. a(p-1) - b.
  std::uint32_t filtration_index() const { return a * (p - 1) - b; }
  std::uint32_t top_degree() const { return a * (p - 1); }
};

/// A subspace of B in canonical (reduced echelon) form.
struct SubspaceBasis {
  std::uint32_t p = 2;
  std::uint32_t a = 1;
  std::vector<RingElement> elements;

  std::size_t dimension() const { return elements.size(); }
  bool operator==(const SubspaceBasis&) const = default;
};

/// Builds the canonical basis of the span of the given elements.
SubspaceBasis span_of(std::uint32_t p, std::uint32_t a, const std::vector<RingElement>& gens);

/// {f : deg f <= a(p-1) - d}, spanned by monomials. Empty for d = a(p-1)+1.
SubspaceBasis degree_filtration_basis(std::uint32_t p, std::uint32_t a, std::uint32_t d,
                                      std::size_t ring_cap = kDefaultRingCap);

/// B_0 = B, B_i = span{[f, e_j] : f in B_{i-1}, 1 <= j <= a}.
SubspaceBasis commutator_filtration_basis(std::uint32_t p, std::uint32_t a, std::uint32_t d,
                                          std::size_t ring_cap = kDefaultRingCap);

struct FiltrationReport {
  std::uint32_t p = 2;
  std::uint32_t a = 1;
  bool equal = false;
  std::vector<std::size_t> degree_dims;     ///< dim of degree-defined B_d, d = 0..a(p-1)+1
  std::vector<std::size_t> commutator_dims; ///< same for the commutator series
};

inline constexpr std::size_t kDefaultFiltrationCap = 4096;

/// Compares both constructions at every level d = 0 .. a(p-1)+1.
FiltrationReport filtration_equal(std::uint32_t p, std::uint32_t a,
                                  std::size_t ring_cap = kDefaultFiltrationCap);

} // namespace permbase
