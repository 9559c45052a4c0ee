// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "permbase/asymptotics.hpp"
#include "permbase/constructions.hpp"
#include "permbase/errors.hpp"
#include "permbase/filtration.hpp"
#include "permbase/multinomial.hpp"
#include "permbase/ring.hpp"

using namespace permbase;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> body;
};

// Every G_b with p^{a+1} <= 32 whose order p^{D+a} fits the default element cap.
std::vector<GroupParams> small_gb_instances() {
  const EngineLimits limits;
  std::vector<GroupParams> out;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u})
    for (std::uint32_t a = 1; big_pow(p, a + 1) <= 32; ++a)
      for (std::uint32_t b = 0; b <= a * (p - 1); ++b) {
        const GroupParams params = GroupParams::make(p, a, b);
        if (big_pow(p, static_cast<std::uint64_t>(params.dimension) + a) <= limits.element_cap)
          out.push_back(params);
      }
  return out;
}

std::string tag(const GroupParams& g) {
  return "(" + std::to_string(g.p) + "," + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
}

Outcome criterion_multinomial_row() {
  const std::vector<BigInt> expected{1, 4, 10, 16, 19, 16, 10, 4, 1};
  Outcome o;
  o.pass = multinomial_row(4, 3).coeffs == expected && multinomial_coeff(4, 6, 3) == 10 &&
           multinomial_coeff(4, 4, 3) == 19;
  o.detail = "row(4,3), coeff(4,6,3), coeff(4,4,3)";
  return o;
}

Outcome criterion_oracle_equivalence() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& params : small_gb_instances()) {
    GeneratedGroup group = build_Gb(params);
    const std::size_t mu = minimal_degree_oracle(group);
    const std::size_t base = base_size_oracle(group);
    const bool ok = BigInt(mu) == mu_formula(params) && BigInt(base) == base_formula(params);
    if (!ok) {
      o.pass = false;
      o.detail += " mismatch at " + tag(params) + ": mu " + std::to_string(mu) + " vs " +
                  to_string(mu_formula(params)) + ", base " + std::to_string(base) + " vs " +
                  to_string(base_formula(params)) + ";";
    }
    ++checked;
  }
  o.detail = std::to_string(checked) + " instances" + o.detail;
  return o;
}

Outcome criterion_filtration() {
  Outcome o;
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> cases{
      {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}};
  for (const auto& [p, a] : cases) {
    const FiltrationReport report = filtration_equal(p, a);
    bool ok = report.equal;
    const std::uint32_t top = a * (p - 1);
    for (std::uint32_t d = 0; d <= top; ++d)
      ok = ok && BigInt(report.commutator_dims[d]) == multinomial_partial_sum(a, top - d, p);
    ok = ok && report.commutator_dims[top + 1] == 0;
    if (!ok) {
      o.pass = false;
      o.detail += " failed at (" + std::to_string(p) + "," + std::to_string(a) + ");";
    }
  }
  o.detail = std::to_string(cases.size()) + " (p,a) pairs" + o.detail;
  return o;
}

Outcome criterion_min_nonzeros() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& params : small_gb_instances()) {
    const std::uint64_t found = min_nonzeros_bruteforce(params.a, params.p, params.b);
    const BigInt expected = mu_formula(params) / params.p;
    if (BigInt(found) != expected) {
      o.pass = false;
      o.detail += " mismatch at " + tag(params) + ": " + std::to_string(found) + " vs " +
                  to_string(expected) + ";";
    }
    ++checked;
  }
  o.detail = std::to_string(checked) + " instances" + o.detail;
  return o;
}

Outcome criterion_entropy() {
  const EntropyMaximum m = argmax_entropy();
  Outcome o;
  o.pass = std::abs(m.lambda - 1.0 / 3.0) < 1e-6 &&
           std::abs(m.value - 1.5849625007211562) < 1e-9;
  char buf[128];
  std::snprintf(buf, sizeof buf, "lambda* = %.15g, value = %.17g", m.lambda, m.value);
  o.detail = buf;
  return o;
}

Outcome criterion_exponent_trend() {
  Outcome o;
  std::ostringstream detail;
  for (std::uint64_t p : {5, 11, 101, 1009, 10007}) {
    detail << " p=" << p << ":";
    for (double theta : {-1.0, 0.0, 1.0}) {
      double value = std::nan("");
      try {
        value = exponent_lower_bound(p, theta);
      } catch (const InvalidArgument&) {
      }
      char buf[48];
      std::snprintf(buf, sizeof buf, " %.6g", value);
      detail << buf;
      if (!std::isfinite(value) || value > 2.0)
        o.pass = false;
      if (p == 10007 && !(value > 1.9))
        o.pass = false;
    }
  }
  o.detail = "bounds at theta=-1,0,+1;" + detail.str();
  return o;
}

Outcome criterion_li_consistency() {
  Outcome o;
  std::ostringstream detail;
  std::vector<double> ratios;
  for (std::uint64_t a : {20, 40, 80}) {
    const BigInt exact = multinomial_coeff(a, static_cast<std::int64_t>(2 * a), 5);
    double ratio = std::nan("");
    try {
      ratio = std::exp(log_big(exact) - li_log_estimate(a, 5, 0.0));
    } catch (const InvalidArgument&) {
    }
    ratios.push_back(ratio);
    char buf[64];
    std::snprintf(buf, sizeof buf, " a=%llu ratio=%.6g", static_cast<unsigned long long>(a), ratio);
    detail << buf;
  }
  o.pass = ratios[0] >= 0.5 && ratios[0] <= 2.0;
  for (std::size_t i = 1; i < ratios.size(); ++i)
    o.pass = o.pass && std::abs(ratios[i] - 1.0) < std::abs(ratios[i - 1] - 1.0);
  o.detail = "exact/estimate at p=5, theta=0;" + detail.str();
  return o;
}

Outcome criterion_universal_inequality() {
  Outcome o;
  const EngineLimits limits{10'000'000, 20'000'000};
  std::size_t transitive = 0, bounded = 0, intransitive_max = 0;
  std::vector<std::string> excluded;
  auto fail = [&](const std::string& what) {
    o.pass = false;
    o.detail += " " + what + ";";
  };
  auto lower = [&](const InvariantReport& r, const std::string& label) {
    if (!r.transitive)
      return;
    ++transitive;
    if (r.product < r.n)
      fail(label + " has mu*b < n");
  };
  auto upper = [&](const InvariantReport& r, const std::string& label) {
    ++bounded;
    if (!check_nlogn(r, 2.0))
      fail(label + " has mu*b > n log2 n");
  };

  for (const auto& params : small_gb_instances()) {
    GeneratedGroup g = build_Gb(params);
    lower(invariant_report(g, limits), "G_b" + tag(params));
  }

  const std::vector<std::string> names{"S2", "S3", "S4", "C3", "C5"};
  auto small = [](const std::string& name) {
    const std::size_t k = std::stoul(name.substr(1));
    return name[0] == 'S' ? symmetric_group(k) : cyclic_group(k);
  };
  for (const auto& inner : names)
    for (const auto& outer : names) {
      GeneratedGroup g = wreath_product({small(inner), small(outer)});
      if (g.degree() > 30)
        continue;
      InvariantReport r;
      try {
        r = invariant_report(g, limits);
      } catch (const CapExceeded&) {
        excluded.push_back(g.label());
        continue;
      }
      lower(r, g.label());
      upper(r, g.label());
    }

  for (std::uint64_t p : {2, 3, 5})
    for (std::size_t n = p; n <= 30; ++n) {
      GeneratedGroup g = sylow_sym(n, p);
      InvariantReport r;
      try {
        r = invariant_report(g, limits);
      } catch (const CapExceeded&) {
        excluded.push_back(g.label());
        continue;
      }
      lower(r, g.label());
      upper(r, g.label());
    }

  for (std::size_t n = 4; n <= 12; ++n)
    for (std::size_t k = 2; k + 2 <= n; ++k) {
      GeneratedGroup g = maximal_intransitive(n, k);
      const InvariantReport r = invariant_report(g, limits);
      ++intransitive_max;
      if (r.product != 2 * (n - 2))
        fail(g.label() + " product " + std::to_string(r.product));
    }

  const std::string failures = o.detail;
  o.detail = std::to_string(transitive) + " transitive, " + std::to_string(bounded) +
             " wreath/Sylow, " + std::to_string(intransitive_max) + " intransitive maximal, " +
             std::to_string(excluded.size()) + " over the element cap of " +
             std::to_string(limits.element_cap) + " (";
  for (std::size_t i = 0; i < excluded.size(); ++i)
    o.detail += (i ? ", " : "") + excluded[i];
  o.detail += ")" + failures;
  return o;
}

Outcome criterion_p2_approach() {
  Outcome o;
  std::ostringstream detail;
  double previous = INFINITY;
  for (std::uint64_t a : {6, 12, 24, 48}) {
    const double gap = std::abs(p2_exponent_exact(a, a / 3) - std::log2(3.0));
    char buf[48];
    std::snprintf(buf, sizeof buf, " a=%llu gap=%.6g", static_cast<unsigned long long>(a), gap);
    detail << buf;
    o.pass = o.pass && gap < previous;
    previous = gap;
  }
  o.detail = "|exact - log2 3|:" + detail.str();
  return o;
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "multinomial golden row", 1e-3, criterion_multinomial_row},
      {2, "brute-force minimal degree and base size equal the closed forms", 300.0,
       criterion_oracle_equivalence},
      {3, "commutator filtration equals degree filtration", 30.0, criterion_filtration},
      {4, "minimum nonzero count of low-degree polynomials", 300.0, criterion_min_nonzeros},
      {5, "entropy maximum at lambda = 1/3", 1e-3, criterion_entropy},
      {6, "exponent lower bound tends to 2", 1.0, criterion_exponent_trend},
      {7, "saddle-point estimate matches exact coefficients", 10.0, criterion_li_consistency},
      {8, "n <= mu*b <= n log2 n on the comparison families", 120.0,
       criterion_universal_inequality},
      {9, "p = 2 exponent approaches log2 3", 1.0, criterion_p2_approach},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      o.pass = false;
      o.detail += " (over time budget)";
    }
    failures += !o.pass;
    std::printf("[%s] criterion %d: %s [%.3f s] %s\n", o.pass ? "PASS" : "FAIL", c.number,
                c.title.c_str(), seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
