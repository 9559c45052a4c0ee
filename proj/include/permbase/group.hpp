#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permbase/bigint.hpp"
#include "permbase/permutation.hpp"

/**
 * @file group.hpp
 * @brief Small permutation groups given by generators, and brute-force
 *        oracles for their minimal degree and base size.
 *
 * Nothing here uses stabilizer chains: the element set is enumerated by
 * breadth-first closure and every invariant is read off that set. This is
 * only feasible for groups of order up to a few million, which is the
 * point; the results serve as an independent check on closed formulas.
 */

namespace permbase {

struct EngineLimits {
  std::uint64_t element_cap = 2'000'000;
  std::uint64_t node_cap = 5'000'000; ///< base-search tree nodes
};

/// Sorted, duplicate-free array of packed image arrays.
class ElementSet {
public:
  ElementSet(std::size_t degree, std::vector<Point> packed);

  std::size_t size() const { return degree_ == 0 ? 0 : data_.size() / degree_; }
  std::size_t degree() const { return degree_; }
  std::span<const Point> operator[](std::size_t i) const {
    return {data_.data() + i * degree_, degree_};
  }
  Permutation permutation(std::size_t i) const;
  std::optional<std::size_t> index_of(std::span<const Point> images) const;
  bool contains(const Permutation& g) const { return index_of(g.images()).has_value(); }

private:
  std::size_t degree_;
  std::vector<Point> data_;
};

class GeneratedGroup {
public:
  /// known_order, when given, lets enumeration refuse early and is checked
  /// against the enumerated size.
  GeneratedGroup(std::size_t degree, std::vector<Permutation> generators,
                 std::optional<BigInt> known_order = std::nullopt, std::string label = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::optional<BigInt>& known_order() const { return known_order_; }
  const std::string& label() const { return label_; }

  bool is_enumerated() const { return elements_ != nullptr; }
  /// Enumerated elements; throws std::logic_error before enumeration.
  const ElementSet& elements() const;

private:
  friend const ElementSet& enumerate_elements(GeneratedGroup&, const EngineLimits&);

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::optional<BigInt> known_order_;
  std::string label_;
  std::shared_ptr<const ElementSet> elements_;
};

/// Breadth-first closure; cached in the group. Throws CapExceeded when the
/// (projected or discovered) order passes limits.element_cap.
const ElementSet& enumerate_elements(GeneratedGroup& group, const EngineLimits& limits = {});

/// Known order if available, otherwise the enumerated size.
BigInt group_order(GeneratedGroup& group, const EngineLimits& limits = {});

std::vector<std::vector<unsigned>> orbits(const GeneratedGroup& group);
bool is_transitive(const GeneratedGroup& group);

/// Indices (into elements) of the pointwise stabilizer of points.
std::vector<std::uint32_t> pointwise_stabilizer(const ElementSet& elements,
                                                std::span<const unsigned> points);
bool is_base(const ElementSet& elements, std::span<const unsigned> points);

/// Smallest support of a non-identity element. InvalidArgument on the trivial group.
std::size_t minimal_degree_oracle(GeneratedGroup& group, const EngineLimits& limits = {});

struct BaseSearchResult {
  std::vector<unsigned> base;   ///< a base of minimum size
  std::vector<unsigned> greedy; ///< the greedy upper bound it started from
  std::uint64_t nodes = 0;      ///< search nodes visited
};

/**
 * Exact minimum base by exhaustive search.
 *
 * Starts from a greedy base (repeatedly fix the point moved by the most
 * elements of the current stabilizer, lowest index on ties), then asks for
 * each smaller size whether a base exists. The search branches over one
 * representative per orbit of the current stabilizer and prunes a node when
 * the stabilizer order exceeds the product of the largest remaining orbit
 * lengths.
 */
BaseSearchResult minimum_base(GeneratedGroup& group, const EngineLimits& limits = {});
std::size_t base_size_oracle(GeneratedGroup& group, const EngineLimits& limits = {});

struct InvariantReport {
  std::uint64_t n = 0;
  BigInt order;
  std::uint64_t mu = 0;
  std::uint64_t base_size = 0;
  std::uint64_t product = 0;
  double exponent = 0.0; ///< log(product) / log(n)
  bool transitive = false;
};

/**
 * When every generator moves points of a single orbit, the group is the
 * direct product of its restrictions to those orbits. Returns those
 * restrictions (relabelled to 0..|orbit|-1, orbits without moved points
 * dropped), or an empty vector when there are fewer than two of them or
 * some generator straddles orbits.
 */
std::vector<GeneratedGroup> orbit_factors(const GeneratedGroup& group);

/// Order, mu and base size by brute force. Groups that split by
/// orbit_factors are handled factor by factor, unless already enumerated.
InvariantReport invariant_report(GeneratedGroup& group, const EngineLimits& limits = {});

} // namespace permbase
