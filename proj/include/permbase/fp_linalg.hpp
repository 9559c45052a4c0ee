#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Dense linear algebra over the prime field F_p.

namespace permbase {

using FpRow = std::vector<std::uint32_t>;
using FpMatrix = std::vector<FpRow>;

std::uint32_t fp_inverse(std::uint32_t x, std::uint32_t p);
std::uint32_t fp_pow(std::uint32_t x, std::uint64_t e, std::uint32_t p);

/// Inverse of a square matrix over F_p, or nullopt if singular.
std::optional<FpMatrix> fp_matrix_inverse(const FpMatrix& m, std::uint32_t p);

/**
 * Row space kept in reduced row echelon form, pivot = lowest nonzero column.
 *
 * Every stored row has a 1 at its pivot and zeros at every other row's
 * pivot, so two instances span the same space iff canonical_rows() agree.
 */
class EchelonBasis {
public:
  EchelonBasis(std::uint32_t p, std::size_t width) : p_(p), width_(width) {}

  /// Adds row to the span; returns false if it was already in the span.
  bool insert(FpRow row);

  /// Reduces row against the basis in place; returns true if row ends up zero.
  bool reduces_to_zero(FpRow& row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  std::uint32_t characteristic() const { return p_; }

  /// Rows sorted by pivot column.
  FpMatrix canonical_rows() const;

private:
  void reduce(FpRow& row) const;

  std::uint32_t p_;
  std::size_t width_;
  FpMatrix rows_;
  std::vector<std::size_t> pivots_;
};

} // namespace permbase
