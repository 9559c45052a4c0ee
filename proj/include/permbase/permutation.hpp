#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace permbase {

/// Point type for permutations; degrees up to kMaxDegree.
using Point = std::uint8_t;
inline constexpr std::size_t kMaxDegree = 256;

/**
 * A bijection of {0, ..., n-1}. Composition follows right actions:
 * (g * h)(x) = h(g(x)), i.e. apply g first.
 */
class Permutation {
public:
  static Permutation identity(std::size_t degree);
  /// Validates that images is a bijection of {0..n-1}.
  static Permutation from_images(std::span<const unsigned> images);
  /// Product of disjoint or overlapping cycles, applied left to right.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<unsigned>>& cycles);

  std::size_t degree() const { return images_.size(); }
  unsigned operator()(unsigned point) const { return images_[point]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;
  /// Conjugate by a relabelling: returns sigma^{-1} * this * sigma.
  Permutation relabelled(const Permutation& sigma) const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  std::string to_string() const;

private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// Number of points moved by g.
std::size_t support_size(const Permutation& g);

} // namespace permbase
