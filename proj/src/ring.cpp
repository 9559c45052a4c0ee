#include "permbase/ring.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "permbase/bigint.hpp"
#include "permbase/errors.hpp"
#include "permbase/fp_linalg.hpp"

namespace permbase {

namespace {

void check_field(std::uint32_t p, std::uint32_t a) {
  if (!is_prime(p))
    throw InvalidArgument("characteristic p = " + std::to_string(p) + " is not prime");
  if (a == 0)
    throw InvalidArgument("number of variables a must be positive");
}

// Applies the p x p matrix m along one tensor axis of a length p^a vector:
// out[.., k, ..] = sum_l m[k][l] * in[.., l, ..].
std::vector<std::uint32_t> apply_axis(const std::vector<std::uint32_t>& in, std::uint32_t p,
                                      std::uint32_t axis, const FpMatrix& m) {
  std::size_t stride = 1;
  for (std::uint32_t i = 0; i < axis; ++i)
    stride *= p;
  const std::size_t block = stride * p;
  std::vector<std::uint32_t> out(in.size(), 0);
  for (std::size_t base = 0; base < in.size(); base += block) {
    for (std::size_t offset = 0; offset < stride; ++offset) {
      const std::size_t start = base + offset;
      for (std::uint32_t k = 0; k < p; ++k) {
        std::uint64_t acc = 0;
        for (std::uint32_t l = 0; l < p; ++l)
          acc += static_cast<std::uint64_t>(m[k][l]) * in[start + l * stride];
        out[start + k * stride] = static_cast<std::uint32_t>(acc % p);
      }
    }
  }
  return out;
}

// E[v][l] = v^l with 0^0 = 1: maps coefficients of one variable to values.
FpMatrix evaluation_matrix(std::uint32_t p) {
  FpMatrix e(p, FpRow(p, 0));
  for (std::uint32_t v = 0; v < p; ++v)
    for (std::uint32_t l = 0; l < p; ++l)
      e[v][l] = fp_pow(v, l, p);
  return e;
}

// Binomial coefficients mod p for 0 <= k <= n < p.
FpMatrix binomials_mod(std::uint32_t p) {
  FpMatrix c(p, FpRow(p, 0));
  for (std::uint32_t n = 0; n < p; ++n) {
    c[n][0] = 1;
    for (std::uint32_t k = 1; k <= n; ++k)
      c[n][k] = (c[n - 1][k - 1] + c[n - 1][k]) % p;
  }
  return c;
}

} // namespace

std::size_t ring_size(std::uint32_t p, std::uint32_t a, std::size_t cap) {
  std::size_t size = 1;
  for (std::uint32_t i = 0; i < a; ++i) {
    if (size > cap / p)
      throw CapExceeded("ring size p^a = " + std::to_string(p) + "^" + std::to_string(a) +
                        " exceeds cap " + std::to_string(cap));
    size *= p;
  }
  return size;
}

std::vector<std::uint32_t> index_to_tuple(std::size_t index, std::uint32_t p, std::uint32_t a) {
  std::vector<std::uint32_t> tuple(a);
  for (auto& digit : tuple) {
    digit = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return tuple;
}

std::size_t tuple_to_index(std::span<const std::uint32_t> tuple, std::uint32_t p) {
  std::size_t index = 0;
  for (auto it = tuple.rbegin(); it != tuple.rend(); ++it)
    index = index * p + *it;
  return index;
}

// ---------------------------------------------------------------- FpVector

FpVector::FpVector(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> entries)
    : p_(p), entries_(std::move(entries)) {
  check_field(p, a);
  if (entries_.size() != a)
    throw InvalidArgument("FpVector: expected " + std::to_string(a) + " entries");
  for (auto e : entries_)
    if (e >= p)
      throw InvalidArgument("FpVector: entry " + std::to_string(e) + " not reduced mod p");
}

FpVector FpVector::zero(std::uint32_t p, std::uint32_t a) {
  return FpVector(p, a, std::vector<std::uint32_t>(a, 0));
}

FpVector FpVector::unit(std::uint32_t p, std::uint32_t a, std::uint32_t i) {
  if (i >= a)
    throw InvalidArgument("FpVector::unit: index out of range");
  std::vector<std::uint32_t> entries(a, 0);
  entries[i] = 1 % p;
  return FpVector(p, a, std::move(entries));
}

FpVector FpVector::from_index(std::uint32_t p, std::uint32_t a, std::size_t index) {
  if (index >= ring_size(p, a, std::numeric_limits<std::size_t>::max()))
    throw InvalidArgument("FpVector::from_index: index out of range");
  return FpVector(p, a, index_to_tuple(index, p, a));
}

bool FpVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

FpVector FpVector::operator+(const FpVector& other) const {
  if (other.p_ != p_ || other.entries_.size() != entries_.size())
    throw InvalidArgument("FpVector: dimension or characteristic mismatch");
  std::vector<std::uint32_t> sum(entries_.size());
  for (std::size_t i = 0; i < sum.size(); ++i)
    sum[i] = (entries_[i] + other.entries_[i]) % p_;
  return FpVector(p_, a(), std::move(sum));
}

// ------------------------------------------------------------- RingElement

RingElement::RingElement(std::uint32_t p, std::uint32_t a) : p_(p), a_(a) {
  check_field(p, a);
  coeffs_.assign(ring_size(p, a), 0);
}

RingElement::RingElement(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> coeffs)
    : p_(p), a_(a), coeffs_(std::move(coeffs)) {
  check_field(p, a);
  if (coeffs_.size() != ring_size(p, a))
    throw InvalidArgument("RingElement: expected p^a = " + std::to_string(ring_size(p, a)) +
                          " coefficients, got " + std::to_string(coeffs_.size()));
  for (auto c : coeffs_)
    if (c >= p)
      throw InvalidArgument("RingElement: coefficient " + std::to_string(c) +
                            " not reduced mod p");
}

RingElement RingElement::constant(std::uint32_t p, std::uint32_t a, std::uint32_t c) {
  RingElement f(p, a);
  f.coeffs_[0] = c % p;
  return f;
}

RingElement RingElement::monomial(std::uint32_t p, std::uint32_t a,
                                  std::span<const std::uint32_t> exponents) {
  RingElement f(p, a);
  if (exponents.size() != a)
    throw InvalidArgument("RingElement::monomial: expected " + std::to_string(a) + " exponents");
  for (auto e : exponents)
    if (e >= p)
      throw InvalidArgument("RingElement::monomial: exponent must be < p (reduced form)");
  f.coeffs_[tuple_to_index(exponents, p)] = 1;
  return f;
}

RingElement RingElement::variable(std::uint32_t p, std::uint32_t a, std::uint32_t i) {
  if (i >= a)
    throw InvalidArgument("RingElement::variable: index out of range");
  std::vector<std::uint32_t> exponents(a, 0);
  exponents[i] = 1;
  return monomial(p, a, exponents);
}

bool RingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

void RingElement::check_compatible(const RingElement& other) const {
  if (other.p_ != p_ || other.a_ != a_)
    throw InvalidArgument("RingElement: dimension or characteristic mismatch");
}

RingElement RingElement::operator+(const RingElement& other) const {
  check_compatible(other);
  RingElement out(*this);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out.coeffs_[i] = (coeffs_[i] + other.coeffs_[i]) % p_;
  return out;
}

RingElement RingElement::operator-(const RingElement& other) const {
  check_compatible(other);
  RingElement out(*this);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out.coeffs_[i] = (coeffs_[i] + p_ - other.coeffs_[i]) % p_;
  return out;
}

RingElement RingElement::operator*(const RingElement& other) const {
  check_compatible(other);
  RingElement out(p_, a_);
  std::vector<std::uint32_t> exps(a_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    const auto left = index_to_tuple(i, p_, a_);
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (other.coeffs_[j] == 0)
        continue;
      const auto right = index_to_tuple(j, p_, a_);
      for (std::uint32_t k = 0; k < a_; ++k) {
        std::uint32_t e = left[k] + right[k];
        // x^p = x, so any exponent >= p drops by p - 1.
        if (e >= p_)
          e -= p_ - 1;
        exps[k] = e;
      }
      auto& slot = out.coeffs_[tuple_to_index(exps, p_)];
      slot = static_cast<std::uint32_t>(
          (slot + static_cast<std::uint64_t>(coeffs_[i]) * other.coeffs_[j]) % p_);
    }
  }
  return out;
}

RingElement RingElement::scaled(std::uint32_t c) const {
  RingElement out(*this);
  for (auto& x : out.coeffs_)
    x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * (c % p_) % p_);
  return out;
}

std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> RingElement::terms() const {
  std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      out.emplace_back(index_to_tuple(i, p_, a_), coeffs_[i]);
  return out;
}

std::string RingElement::to_string() const {
  const auto nonzero = terms();
  if (nonzero.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, c] : nonzero) {
    if (!first)
      os << " + ";
    first = false;
    const bool is_const = std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
    if (is_const) {
      os << c;
      continue;
    }
    if (c != 1)
      os << c << "*";
    bool first_factor = true;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (exps[k] == 0)
        continue;
      if (!first_factor)
        os << "*";
      first_factor = false;
      os << "x" << (k + 1);
      if (exps[k] > 1)
        os << "^" << exps[k];
    }
  }
  return os.str();
}

// -------------------------------------------------------------- operations

std::uint32_t evaluate(const RingElement& f, const FpVector& v) {
  if (f.p() != v.p() || f.a() != v.a())
    throw InvalidArgument("evaluate: dimension or characteristic mismatch");
  const std::uint32_t p = f.p();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.coeff(i) == 0)
      continue;
    std::uint64_t term = f.coeff(i);
    const auto exps = index_to_tuple(i, p, f.a());
    for (std::uint32_t k = 0; k < f.a(); ++k)
      term = term * fp_pow(v[k], exps[k], p) % p;
    acc = (acc + term) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

ValueTable to_function(const RingElement& f) {
  const FpMatrix e = evaluation_matrix(f.p());
  ValueTable table = f.coeffs();
  for (std::uint32_t axis = 0; axis < f.a(); ++axis)
    table = apply_axis(table, f.p(), axis, e);
  return table;
}

RingElement interpolate(std::uint32_t p, std::uint32_t a, const ValueTable& table) {
  check_field(p, a);
  if (table.size() != ring_size(p, a))
    throw InvalidArgument("interpolate: value table must have p^a = " +
                          std::to_string(ring_size(p, a)) + " entries");
  const auto inverse = fp_matrix_inverse(evaluation_matrix(p), p);
  if (!inverse)
    throw VerificationFailure("interpolate: one-variable evaluation matrix is singular");
  std::vector<std::uint32_t> coeffs(table.begin(), table.end());
  for (auto& c : coeffs)
    if (c >= p)
      throw InvalidArgument("interpolate: table value not reduced mod p");
  for (std::uint32_t axis = 0; axis < a; ++axis)
    coeffs = apply_axis(coeffs, p, axis, *inverse);
  return RingElement(p, a, std::move(coeffs));
}

std::optional<std::uint32_t> degree(const RingElement& f) {
  std::optional<std::uint32_t> best;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.coeff(i) == 0)
      continue;
    std::uint32_t total = 0;
    for (auto e : index_to_tuple(i, f.p(), f.a()))
      total += e;
    if (!best || total > *best)
      best = total;
  }
  return best;
}

bool degree_at_most(const RingElement& f, std::uint32_t bound) {
  const auto d = degree(f);
  return !d || *d <= bound;
}

RingElement translate(const RingElement& f, const FpVector& v) {
  if (f.p() != v.p() || f.a() != v.a())
    throw InvalidArgument("translate: dimension or characteristic mismatch");
  const std::uint32_t p = f.p();
  const FpMatrix binom = binomials_mod(p);
  std::vector<std::uint32_t> coeffs = f.coeffs();
  for (std::uint32_t axis = 0; axis < f.a(); ++axis) {
    const std::uint32_t shift = v[axis];
    if (shift == 0)
      continue;
    // (x + t)^l = sum_k C(l, k) t^{l-k} x^k; l < p so no reduction is needed.
    FpMatrix m(p, FpRow(p, 0));
    for (std::uint32_t l = 0; l < p; ++l)
      for (std::uint32_t k = 0; k <= l; ++k)
        m[k][l] = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(binom[l][k]) * fp_pow(shift, l - k, p) % p);
    coeffs = apply_axis(coeffs, p, axis, m);
  }
  return RingElement(p, f.a(), std::move(coeffs));
}

RingElement commutator_translation(const RingElement& f, const FpVector& v) {
  return translate(f, v) - f;
}

std::size_t count_nonzeros(const RingElement& f) {
  const ValueTable table = to_function(f);
  return static_cast<std::size_t>(
      std::count_if(table.begin(), table.end(), [](auto x) { return x != 0; }));
}

std::vector<RingElement> low_degree_monomials(std::uint32_t p, std::uint32_t a,
                                              std::uint32_t bound) {
  check_field(p, a);
  std::vector<RingElement> out;
  const std::size_t size = ring_size(p, a);
  for (std::size_t i = 0; i < size; ++i) {
    const auto exps = index_to_tuple(i, p, a);
    std::uint32_t total = 0;
    for (auto e : exps)
      total += e;
    if (total <= bound)
      out.push_back(RingElement::monomial(p, a, exps));
  }
  return out;
}

std::uint64_t min_nonzeros_bruteforce(std::uint32_t a, std::uint32_t p, std::uint32_t b,
                                      std::uint64_t search_cap) {
  check_field(p, a);
  if (b > a * (p - 1))
    throw InvalidArgument("min_nonzeros_bruteforce: b = " + std::to_string(b) +
                          " outside [0, a(p-1)]");
  const auto basis = low_degree_monomials(p, a, b);
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (space > search_cap / p)
      throw CapExceeded("min_nonzeros_bruteforce: search space p^D with D = " +
                        std::to_string(basis.size()) + " exceeds cap " +
                        std::to_string(search_cap));
    space *= p;
  }

  std::vector<ValueTable> tables;
  tables.reserve(basis.size());
  for (const auto& m : basis)
    tables.push_back(to_function(m));

  // Odometer over coefficient vectors. Bumping digit j by one (with or
  // without wrap-around) always adds the table of monomial j once.
  const std::size_t points = tables.front().size();
  ValueTable current(points, 0);
  std::vector<std::uint32_t> digits(basis.size(), 0);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t step = 1; step < space; ++step) {
    std::size_t j = 0;
    while (true) {
      const ValueTable& t = tables[j];
      for (std::size_t w = 0; w < points; ++w)
        current[w] = (current[w] + t[w]) % p;
      digits[j] = (digits[j] + 1) % p;
      if (digits[j] != 0)
        break;
      ++j;
    }
    const auto nonzeros = static_cast<std::uint64_t>(
        std::count_if(current.begin(), current.end(), [](auto x) { return x != 0; }));
    best = std::min(best, nonzeros);
  }
  return best;
}

} // namespace permbase
