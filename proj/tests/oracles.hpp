#pragma once

// Independent brute-force routes used only by the tests. Nothing here calls
// the code path it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "permbase/bigint.hpp"
#include "permbase/group.hpp"
#include "permbase/ring.hpp"

namespace permbase::oracle {

/// Number of a-tuples over {0..p-1} with coordinate sum k, by enumeration.
inline std::uint64_t count_tuples_with_sum(std::uint32_t a, std::int64_t k, std::uint32_t p) {
  std::vector<std::uint32_t> digits(a, 0);
  std::uint64_t count = 0;
  while (true) {
    std::int64_t sum = 0;
    for (auto d : digits)
      sum += d;
    count += sum == k;
    std::size_t j = 0;
    while (j < a && ++digits[j] == p)
      digits[j++] = 0;
    if (j == a)
      break;
  }
  return count;
}

inline BigInt factorial(std::uint64_t n) {
  BigInt f = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

inline BigInt binomial_by_factorials(std::uint64_t a, std::uint64_t k) {
  if (k > a)
    return 0;
  return factorial(a) / (factorial(k) * factorial(a - k));
}

/// f^v computed on value tables: table'[w] = table[v + w], then interpolated.
inline RingElement translate_via_table(const RingElement& f, const FpVector& v) {
  const ValueTable table = to_function(f);
  ValueTable shifted(table.size());
  for (std::size_t w = 0; w < table.size(); ++w) {
    const FpVector point = FpVector::from_index(f.p(), f.a(), w);
    shifted[w] = table[(v + point).index()];
  }
  return interpolate(f.p(), f.a(), shifted);
}

/**
 * True iff every set of `size` points is fixed pointwise by some
 * non-identity element. Points that lie in exactly the same fixed-point
 * sets are interchangeable, so subsets are enumerated over those classes.
 * Degree must be at most 64.
 */
inline bool every_set_of_size_has_nontrivial_stabilizer(const ElementSet& elements,
                                                        std::size_t size) {
  const std::size_t n = elements.degree();
  std::vector<std::uint64_t> masks;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto g = elements[i];
    std::uint64_t fixed = 0;
    bool identity = true;
    for (std::size_t pt = 0; pt < n; ++pt) {
      if (g[pt] == pt)
        fixed |= std::uint64_t{1} << pt;
      else
        identity = false;
    }
    if (!identity)
      masks.push_back(fixed);
  }
  if (masks.empty())
    return false;
  if (size == 0)
    return true;
  if (size > n)
    return false;
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  std::map<std::vector<bool>, std::size_t> class_of_signature;
  std::vector<std::uint64_t> class_rep;
  for (std::size_t pt = 0; pt < n; ++pt) {
    std::vector<bool> signature(masks.size());
    for (std::size_t m = 0; m < masks.size(); ++m)
      signature[m] = (masks[m] >> pt) & 1;
    if (class_of_signature.emplace(signature, class_rep.size()).second)
      class_rep.push_back(std::uint64_t{1} << pt);
  }

  auto covered = [&](std::uint64_t reps) {
    return std::any_of(masks.begin(), masks.end(),
                       [&](std::uint64_t m) { return (reps & ~m) == 0; });
  };
  const std::size_t classes = class_rep.size();
  if (classes < size) {
    std::uint64_t all = 0;
    for (auto r : class_rep)
      all |= r;
    return covered(all);
  }
  // All class subsets of exactly `size` classes; containment is downward closed.
  std::vector<std::size_t> pick(size);
  for (std::size_t i = 0; i < size; ++i)
    pick[i] = i;
  while (true) {
    std::uint64_t reps = 0;
    for (auto c : pick)
      reps |= class_rep[c];
    if (!covered(reps))
      return false;
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == classes - size + i - 1)
      --i;
    if (i == 0)
      return true;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j)
      pick[j] = pick[j - 1] + 1;
  }
}

} // namespace permbase::oracle
