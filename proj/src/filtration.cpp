#include "permbase/filtration.hpp"

#include <string>

#include "permbase/errors.hpp"
#include "permbase/fp_linalg.hpp"
#include "permbase/multinomial.hpp"

namespace permbase {

namespace {

void check_level(std::uint32_t p, std::uint32_t a, std::uint32_t d) {
  if (!is_prime(p))
    throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (a == 0)
    throw InvalidArgument("a must be positive");
  if (d > a * (p - 1) + 1)
    throw InvalidArgument("filtration level d = " + std::to_string(d) + " outside [0, " +
                          std::to_string(a * (p - 1) + 1) + "]");
}

// B_0, B_1, ..., B_{last} via iterated commutators with e_1 .. e_a.
std::vector<SubspaceBasis> commutator_series(std::uint32_t p, std::uint32_t a,
                                             std::uint32_t last, std::size_t ring_cap) {
  const std::size_t size = ring_size(p, a, ring_cap);
  std::vector<SubspaceBasis> series;
  series.push_back(degree_filtration_basis(p, a, 0, ring_cap));
  std::vector<FpVector> units;
  for (std::uint32_t i = 0; i < a; ++i)
    units.push_back(FpVector::unit(p, a, i));

  for (std::uint32_t level = 1; level <= last; ++level) {
    EchelonBasis echelon(p, size);
    for (const auto& f : series.back().elements)
      for (const auto& e : units)
        echelon.insert(commutator_translation(f, e).coeffs());
    SubspaceBasis next{p, a, {}};
    for (auto& row : echelon.canonical_rows())
      next.elements.emplace_back(p, a, std::move(row));
    series.push_back(std::move(next));
  }
  return series;
}

} // namespace

GroupParams GroupParams::make(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  if (!is_prime(p))
    throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (a == 0)
    throw InvalidArgument("a must be positive");
  if (b > a * (p - 1))
    throw InvalidArgument("b = " + std::to_string(b) + " outside [0, a(p-1)] = [0, " +
                          std::to_string(a * (p - 1)) + "]");
  GroupParams params;
  params.p = p;
  params.a = a;
  params.b = b;
  params.r = b / (p - 1);
  params.s = b % (p - 1);
  params.n = big_pow(p, a + 1);
  params.dimension = multinomial_partial_sum(a, b, p);
  return params;
}

SubspaceBasis span_of(std::uint32_t p, std::uint32_t a, const std::vector<RingElement>& gens) {
  EchelonBasis echelon(p, ring_size(p, a));
  for (const auto& g : gens) {
    if (g.p() != p || g.a() != a)
      throw InvalidArgument("span_of: element from a different ring");
    echelon.insert(g.coeffs());
  }
  SubspaceBasis out{p, a, {}};
  for (auto& row : echelon.canonical_rows())
    out.elements.emplace_back(p, a, std::move(row));
  return out;
}

SubspaceBasis degree_filtration_basis(std::uint32_t p, std::uint32_t a, std::uint32_t d,
                                      std::size_t ring_cap) {
  check_level(p, a, d);
  ring_size(p, a, ring_cap);
  SubspaceBasis out{p, a, {}};
  if (d == a * (p - 1) + 1)
    return out;
  // Unit vectors in increasing index order are already reduced echelon.
  out.elements = low_degree_monomials(p, a, a * (p - 1) - d);
  return out;
}

SubspaceBasis commutator_filtration_basis(std::uint32_t p, std::uint32_t a, std::uint32_t d,
                                          std::size_t ring_cap) {
  check_level(p, a, d);
  return commutator_series(p, a, d, ring_cap).back();
}

FiltrationReport filtration_equal(std::uint32_t p, std::uint32_t a, std::size_t ring_cap) {
  check_level(p, a, 0);
  const std::uint32_t last = a * (p - 1) + 1;
  const auto series = commutator_series(p, a, last, ring_cap);
  FiltrationReport report{p, a, true, {}, {}};
  for (std::uint32_t d = 0; d <= last; ++d) {
    const SubspaceBasis by_degree = degree_filtration_basis(p, a, d, ring_cap);
    report.degree_dims.push_back(by_degree.dimension());
    report.commutator_dims.push_back(series[d].dimension());
    if (!(by_degree == series[d]))
      report.equal = false;
  }
  return report;
}

} // namespace permbase
