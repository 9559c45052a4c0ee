#include "permbase/constructions.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "permbase/errors.hpp"
#include "permbase/fp_linalg.hpp"

namespace permbase {

namespace {

void check_degree(std::uint64_t n, std::size_t degree_cap) {
  const std::size_t cap = std::min(degree_cap, kMaxDegree);
  if (n == 0 || n > cap)
    throw CapExceeded("degree " + std::to_string(n) + " exceeds degree cap " +
                      std::to_string(cap));
}

BigInt factorial(std::size_t k) {
  BigInt out = 1;
  for (std::size_t i = 2; i <= k; ++i)
    out *= i;
  return out;
}

std::vector<unsigned> identity_images(std::size_t n) {
  std::vector<unsigned> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = static_cast<unsigned>(i);
  return images;
}

// Copies g (of degree g.degree()) onto points offset .. offset+deg-1 of a
// permutation of degree n.
Permutation embed(const Permutation& g, std::size_t n, std::size_t offset) {
  auto images = identity_images(n);
  for (std::size_t i = 0; i < g.degree(); ++i)
    images[offset + i] = static_cast<unsigned>(offset + g(static_cast<unsigned>(i)));
  return Permutation::from_images(images);
}

GeneratedGroup trivial_group(std::size_t n) {
  return GeneratedGroup(n, {}, BigInt(1), "Trivial(" + std::to_string(n) + ")");
}

} // namespace

std::uint64_t gb_point(const GroupParams& params, std::uint32_t x, std::size_t w_index) {
  return x + static_cast<std::uint64_t>(params.p) * w_index;
}

Permutation affine_element(const RingElement& f, const FpVector& v) {
  if (f.p() != v.p() || f.a() != v.a())
    throw InvalidArgument("affine_element: dimension or characteristic mismatch");
  const std::uint32_t p = f.p();
  const ValueTable values = to_function(f);
  const std::size_t points = values.size();
  const std::size_t n = points * p;
  if (n > kMaxDegree)
    throw CapExceeded("affine_element: degree " + std::to_string(n) + " exceeds " +
                      std::to_string(kMaxDegree));
  std::vector<unsigned> images(n);
  for (std::size_t w = 0; w < points; ++w) {
    const std::size_t target = (FpVector::from_index(p, f.a(), w) + v).index();
    for (std::uint32_t x = 0; x < p; ++x)
      images[x + p * w] = static_cast<unsigned>((x + values[w]) % p + p * target);
  }
  return Permutation::from_images(images);
}

GeneratedGroup build_Gb(const GroupParams& params, std::size_t degree_cap) {
  check_degree(to_u64(params.n, "degree p^(a+1)") , degree_cap);
  const std::uint32_t p = params.p;
  const std::uint32_t a = params.a;
  std::vector<Permutation> generators;
  const FpVector origin = FpVector::zero(p, a);
  for (const auto& m : low_degree_monomials(p, a, params.b))
    generators.push_back(affine_element(m, origin));
  const RingElement zero(p, a);
  for (std::uint32_t i = 0; i < a; ++i)
    generators.push_back(affine_element(zero, FpVector::unit(p, a, i)));
  const std::size_t n = to_u64(params.n, "degree");
  const std::uint64_t log_order =
      to_u64(params.dimension, "filtration dimension") + static_cast<std::uint64_t>(a);
  return GeneratedGroup(n, std::move(generators), big_pow(p, log_order),
                        "G_b(p=" + std::to_string(p) + ",a=" + std::to_string(a) +
                            ",b=" + std::to_string(params.b) + ")");
}

BigInt mu_formula(const GroupParams& params) {
  return BigInt(params.p - params.s) * big_pow(params.p, params.a - params.r);
}

BigInt base_formula(const GroupParams& params) { return params.dimension; }

ProductValue product_formula(const GroupParams& params) {
  ProductValue out;
  out.product = mu_formula(params) * base_formula(params);
  out.exponent = log_big(out.product) / log_big(params.n);
  return out;
}

std::vector<unsigned> structured_base(const GroupParams& params, std::size_t ring_cap) {
  const std::uint32_t p = params.p;
  const std::uint32_t a = params.a;
  const std::size_t size = ring_size(p, a, ring_cap);
  std::vector<ValueTable> tables;
  for (const auto& m : low_degree_monomials(p, a, params.b))
    tables.push_back(to_function(m));

  EchelonBasis functionals(p, tables.size());
  std::vector<unsigned> base;
  for (std::size_t w = 0; w < size && functionals.rank() < tables.size(); ++w) {
    FpRow row(tables.size());
    for (std::size_t j = 0; j < tables.size(); ++j)
      row[j] = tables[j][w];
    if (functionals.insert(std::move(row)))
      base.push_back(static_cast<unsigned>(gb_point(params, 0, w)));
  }
  if (functionals.rank() != tables.size())
    throw VerificationFailure("structured_base: evaluation map is not injective");
  return base;
}

GeneratedGroup symmetric_group(std::size_t k) {
  // (0 1) and (0 1 ... k-1); two generators keep closure cheap.
  std::vector<Permutation> gens;
  if (k >= 2)
    gens.push_back(Permutation::from_cycles(k, {{0, 1}}));
  if (k >= 3) {
    std::vector<unsigned> cycle(k);
    std::iota(cycle.begin(), cycle.end(), 0u);
    gens.push_back(Permutation::from_cycles(k, {cycle}));
  }
  return GeneratedGroup(k, std::move(gens), factorial(k), "S" + std::to_string(k));
}

GeneratedGroup cyclic_group(std::size_t k) {
  std::vector<Permutation> gens;
  if (k > 1) {
    std::vector<unsigned> cycle(k);
    for (std::size_t i = 0; i < k; ++i)
      cycle[i] = static_cast<unsigned>(i);
    gens.push_back(Permutation::from_cycles(k, {cycle}));
  }
  return GeneratedGroup(k, std::move(gens), BigInt(k), "C" + std::to_string(k));
}

GeneratedGroup wreath_product(const WreathFactors& factors, std::size_t degree_cap) {
  const std::size_t k = factors.block.degree();
  const std::size_t m = factors.top.degree();
  check_degree(static_cast<std::uint64_t>(k) * m, degree_cap);
  const std::size_t n = k * m;

  // H in one block per orbit of T; conjugation by T fills in the others.
  std::vector<Permutation> gens;
  for (const auto& orbit : orbits(factors.top))
    for (const auto& h : factors.block.generators())
      gens.push_back(embed(h, n, orbit.front() * k));
  for (const auto& t : factors.top.generators()) {
    std::vector<unsigned> images(n);
    for (std::size_t block = 0; block < m; ++block)
      for (std::size_t i = 0; i < k; ++i)
        images[block * k + i] = static_cast<unsigned>(t(static_cast<unsigned>(block)) * k + i);
    gens.push_back(Permutation::from_images(images));
  }

  std::optional<BigInt> order;
  if (factors.block.known_order() && factors.top.known_order())
    order = boost::multiprecision::pow(*factors.block.known_order(), static_cast<unsigned>(m)) *
            *factors.top.known_order();
  return GeneratedGroup(n, std::move(gens), order,
                        factors.block.label() + " wr " + factors.top.label());
}

std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::uint64_t q = n / p; q > 0; q /= p)
    v += q;
  return v;
}

GeneratedGroup sylow_sym(std::size_t n, std::uint64_t p, std::size_t degree_cap) {
  if (!is_prime(p))
    throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  check_degree(n, degree_cap);

  // Transitive Sylow subgroup of Sym(p^i) for every needed i.
  std::vector<std::size_t> digits;
  for (std::size_t rest = n; rest > 0; rest /= p)
    digits.push_back(rest % p);
  std::vector<GeneratedGroup> levels{trivial_group(1)};
  for (std::size_t i = 1; i < digits.size(); ++i)
    levels.push_back(wreath_product({cyclic_group(p), levels.back()}));

  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    for (std::size_t copy = 0; copy < digits[i]; ++copy) {
      for (const auto& g : levels[i].generators())
        gens.push_back(embed(g, n, offset));
      offset += levels[i].degree();
    }
  }
  return GeneratedGroup(n, std::move(gens), big_pow(p, legendre_valuation(n, p)),
                        "Sylow_" + std::to_string(p) + "(Sym(" + std::to_string(n) + "))");
}

GeneratedGroup maximal_intransitive(std::size_t n, std::size_t k, std::size_t degree_cap) {
  check_degree(n, degree_cap);
  if (k < 1 || k >= n)
    throw InvalidArgument("maximal_intransitive: k must lie in [1, n-1]");
  const GeneratedGroup left = symmetric_group(k);
  const GeneratedGroup right = symmetric_group(n - k);
  std::vector<Permutation> gens;
  for (const auto& g : left.generators())
    gens.push_back(embed(g, n, 0));
  for (const auto& g : right.generators())
    gens.push_back(embed(g, n, k));
  return GeneratedGroup(n, std::move(gens), factorial(k) * factorial(n - k),
                        "S" + std::to_string(k) + "xS" + std::to_string(n - k));
}

double nlogn_bound(std::uint64_t n, double log_base) {
  if (n < 2)
    throw InvalidArgument("n log n bound needs n >= 2");
  if (!(log_base > 1.0))
    throw InvalidArgument("logarithm base must exceed 1");
  const double nd = static_cast<double>(n);
  const double log_n = log_base == 2.0 ? std::log2(nd) : std::log(nd) / std::log(log_base);
  return nd * log_n;
}

bool check_nlogn(const InvariantReport& report, double log_base) {
  const double bound = nlogn_bound(report.n, log_base);
  // Relative slack only absorbs rounding at exact equality (e.g. 8 <= 4*log2(4)).
  return static_cast<double>(report.product) <= bound * (1.0 + 1e-12);
}

} // namespace permbase
