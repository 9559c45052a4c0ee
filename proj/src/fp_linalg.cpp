#include "permbase/fp_linalg.hpp"

#include <algorithm>
#include <numeric>

#include "permbase/errors.hpp"

namespace permbase {

std::uint32_t fp_pow(std::uint32_t x, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  std::uint64_t base = x % p;
  while (e > 0) {
    if (e & 1)
      result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t fp_inverse(std::uint32_t x, std::uint32_t p) {
  if (x % p == 0)
    throw InvalidArgument("fp_inverse: zero has no inverse");
  return fp_pow(x, p - 2, p);
}

std::optional<FpMatrix> fp_matrix_inverse(const FpMatrix& m, std::uint32_t p) {
  const std::size_t n = m.size();
  FpMatrix work(n, FpRow(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n)
      throw InvalidArgument("fp_matrix_inverse: matrix is not square");
    std::copy(m[i].begin(), m[i].end(), work[i].begin());
    work[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work[pivot][col] == 0)
      ++pivot;
    if (pivot == n)
      return std::nullopt;
    std::swap(work[col], work[pivot]);
    const std::uint64_t inv = fp_inverse(work[col][col], p);
    for (auto& x : work[col])
      x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work[r][col] == 0)
        continue;
      const std::uint64_t factor = work[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c)
        work[r][c] = static_cast<std::uint32_t>((work[r][c] + (p - factor) * work[col][c]) % p);
    }
  }
  FpMatrix inverse(n);
  for (std::size_t i = 0; i < n; ++i)
    inverse[i].assign(work[i].begin() + static_cast<std::ptrdiff_t>(n), work[i].end());
  return inverse;
}

void EchelonBasis::reduce(FpRow& row) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint64_t factor = row[pivots_[i]];
    if (factor == 0)
      continue;
    const FpRow& basis_row = rows_[i];
    for (std::size_t c = 0; c < width_; ++c)
      if (basis_row[c] != 0)
        row[c] = static_cast<std::uint32_t>((row[c] + (p_ - factor) * basis_row[c]) % p_);
  }
}

bool EchelonBasis::reduces_to_zero(FpRow& row) const {
  if (row.size() != width_)
    throw InvalidArgument("EchelonBasis: row width mismatch");
  reduce(row);
  return std::all_of(row.begin(), row.end(), [](std::uint32_t x) { return x == 0; });
}

bool EchelonBasis::insert(FpRow row) {
  if (reduces_to_zero(row))
    return false;
  const auto pivot = static_cast<std::size_t>(
      std::find_if(row.begin(), row.end(), [](std::uint32_t x) { return x != 0; }) -
      row.begin());
  const std::uint64_t inv = fp_inverse(row[pivot], p_);
  for (auto& x : row)
    x = static_cast<std::uint32_t>(x * inv % p_);
  // Clear the new pivot column from the existing rows.
  for (auto& existing : rows_) {
    const std::uint64_t factor = existing[pivot];
    if (factor == 0)
      continue;
    for (std::size_t c = 0; c < width_; ++c)
      if (row[c] != 0)
        existing[c] = static_cast<std::uint32_t>((existing[c] + (p_ - factor) * row[c]) % p_);
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

FpMatrix EchelonBasis::canonical_rows() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return pivots_[i] < pivots_[j]; });
  FpMatrix out;
  out.reserve(rows_.size());
  for (std::size_t i : order)
    out.push_back(rows_[i]);
  return out;
}

} // namespace permbase
