#pragma once

#include <cstdint>
#include <vector>

#include "permbase/bigint.hpp"
#include "permbase/filtration.hpp"
#include "permbase/group.hpp"
#include "permbase/ring.hpp"

/**
 * @file constructions.hpp
 * @brief The groups G_b = B_{a(p-1)-b} x| V and the comparison families.
 *
 * G_b acts on F_p x V with the point (x, w) encoded as x + p * index(w), so
 * the fibre coordinate runs fastest. The element (f, v) sends (x, w) to
 * (x + f(w), w + v). Its base part is generated by the monomials of degree
 * at most b, its top part by the translations e_1, ..., e_a.
 */

namespace permbase {

inline constexpr std::size_t kDefaultDegreeCap = kMaxDegree;

std::uint64_t gb_point(const GroupParams& params, std::uint32_t x, std::size_t w_index);

/// The permutation (x, w) -> (x + f(w), w + v) of F_p x V.
Permutation affine_element(const RingElement& f, const FpVector& v);

GeneratedGroup build_Gb(const GroupParams& params, std::size_t degree_cap = kDefaultDegreeCap);

/// (p - s) p^{a - r}
BigInt mu_formula(const GroupParams& params);
/// Number of monomials of degree <= b.
BigInt base_formula(const GroupParams& params);

struct ProductValue {
  BigInt product;
  double exponent = 0.0; ///< log(product) / log(n)
};
ProductValue product_formula(const GroupParams& params);

/// A base of size D made of points (0, w) whose evaluation functionals on
/// the degree <= b space are linearly independent (first-found order).
std::vector<unsigned> structured_base(const GroupParams& params,
                                      std::size_t ring_cap = kDefaultRingCap);

GeneratedGroup symmetric_group(std::size_t k);
GeneratedGroup cyclic_group(std::size_t k);

/// H wr T in its imprimitive action: block j holds points j*k .. j*k+k-1.
struct WreathFactors {
  GeneratedGroup block; ///< H on k points
  GeneratedGroup top;   ///< T on m points
};

GeneratedGroup wreath_product(const WreathFactors& factors, std::size_t degree_cap = kDefaultDegreeCap);

/// p-adic valuation of n!.
std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p);

/**
 * Sylow p-subgroup of Sym(n): write n in base p, and for every digit d_i
 * place d_i disjoint copies of the iterated wreath product
 * C_p wr (C_p wr ... ) on p^i points, largest blocks first.
 */
GeneratedGroup sylow_sym(std::size_t n, std::uint64_t p, std::size_t degree_cap = kDefaultDegreeCap);

/// Sym(k) x Sym(n-k) on {0..k-1} and {k..n-1}.
GeneratedGroup maximal_intransitive(std::size_t n, std::size_t k,
                                    std::size_t degree_cap = kDefaultDegreeCap);

/// product <= n log_base(n).
bool check_nlogn(const InvariantReport& report, double log_base = 2.0);
double nlogn_bound(std::uint64_t n, double log_base = 2.0);

} // namespace permbase
