#include "cli.hpp"

#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "permbase/asymptotics.hpp"
#include "permbase/bigint.hpp"
#include "permbase/constructions.hpp"
#include "permbase/errors.hpp"
#include "permbase/filtration.hpp"
#include "permbase/group.hpp"
#include "permbase/ring.hpp"
#include "permbase/serialize.hpp"

namespace permbase::cli {

namespace {

EngineLimits limits_of(const RunConfig& config) {
  return EngineLimits{config.element_cap, config.node_cap};
}

void add_common_options(CLI::App* app, RunConfig& config) {
  app->add_option("--element-cap", config.element_cap, "maximum group order to enumerate")
      ->check(CLI::PositiveNumber);
  app->add_option("--node-cap", config.node_cap, "maximum base-search nodes")
      ->check(CLI::PositiveNumber);
  app->add_option("--degree-cap", config.degree_cap, "maximum permutation degree")
      ->check(CLI::Range(std::size_t{1}, kMaxDegree));
  app->add_option("--format", config.format, "output format: json or csv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::Json}, {"csv", Format::Csv}},
          CLI::ignore_case));
  app->add_option("--output", config.output_path, "write output to this file");
}

Json descriptor_gb(std::uint32_t p, std::uint32_t a, std::optional<std::uint32_t> b) {
  Json d;
  d["kind"] = "G_b";
  d["p"] = p;
  d["a"] = a;
  if (b)
    d["b"] = *b;
  return d;
}

std::string csv_big(const BigInt& value) { return value.str(); }

// ------------------------------------------------------------ invariants

struct InvariantsArgs {
  std::uint32_t p = 2;
  std::uint32_t a = 1;
  std::uint32_t b = 0;
  bool oracle = false;
};

int cmd_invariants(const InvariantsArgs& args, const RunConfig& config, std::ostream& out,
                   std::ostream& err) {
  const GroupParams params = GroupParams::make(args.p, args.a, args.b);
  const BigInt mu = mu_formula(params);
  const ProductValue product = product_formula(params);

  Json j;
  j["descriptor"] = descriptor_gb(args.p, args.a, args.b);
  j["n"] = big_to_json(params.n);
  j["r"] = params.r;
  j["s"] = params.s;
  j["formula"] = Json{{"mu", big_to_json(mu)},
                      {"base_size", big_to_json(params.dimension)},
                      {"product", big_to_json(product.product)},
                      {"exponent", round12(product.exponent)}};

  std::optional<InvariantReport> report;
  bool match = true;
  if (args.oracle) {
    GeneratedGroup group = build_Gb(params, config.degree_cap);
    report = invariant_report(group, limits_of(config));
    const bool mu_ok = BigInt(report->mu) == mu;
    const bool base_ok = BigInt(report->base_size) == params.dimension;
    match = mu_ok && base_ok;
    j["oracle"] = to_json(*report);
    j["verdict"] = Json{{"mu", mu_ok ? "MATCH" : "MISMATCH"},
                        {"base_size", base_ok ? "MATCH" : "MISMATCH"}};
    if (!match)
      err << "MISMATCH for " << group.label() << ": formula mu=" << mu
          << " base=" << params.dimension << ", oracle mu=" << report->mu
          << " base=" << report->base_size << "\n";
  }

  if (config.format == Format::Json) {
    out << j.dump(2) << "\n";
  } else {
    out << "p,a,b,n,r,s,mu,base_size,product,exponent";
    if (report)
      out << ",order,oracle_mu,oracle_base_size,transitive,verdict";
    out << "\n";
    out << args.p << "," << args.a << "," << args.b << "," << csv_big(params.n) << ","
        << params.r << "," << params.s << "," << csv_big(mu) << ","
        << csv_big(params.dimension) << "," << csv_big(product.product) << ","
        << format12(product.exponent);
    if (report)
      out << "," << csv_big(report->order) << "," << report->mu << "," << report->base_size
          << "," << (report->transitive ? "true" : "false") << ","
          << (match ? "MATCH" : "MISMATCH");
    out << "\n";
  }
  return match ? kSuccess : kVerificationFailed;
}

// ----------------------------------------------------------------- sweep

int cmd_sweep(std::uint32_t p, std::uint32_t a, const RunConfig& config, std::ostream& out) {
  GroupParams::make(p, a, 0);
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "b,r,s,mu,base_size,product,exponent\n";
  for (std::uint32_t b = 0; b <= a * (p - 1); ++b) {
    const GroupParams params = GroupParams::make(p, a, b);
    const BigInt mu = mu_formula(params);
    const ProductValue product = product_formula(params);
    rows.push_back(Json{{"b", b},
                        {"r", params.r},
                        {"s", params.s},
                        {"mu", big_to_json(mu)},
                        {"base_size", big_to_json(params.dimension)},
                        {"product", big_to_json(product.product)},
                        {"exponent", round12(product.exponent)}});
    csv << b << "," << params.r << "," << params.s << "," << csv_big(mu) << ","
        << csv_big(params.dimension) << "," << csv_big(product.product) << ","
        << format12(product.exponent) << "\n";
  }
  if (config.format == Format::Json) {
    Json j;
    j["descriptor"] = descriptor_gb(p, a, std::nullopt);
    j["n"] = big_to_json(big_pow(p, a + 1));
    j["rows"] = std::move(rows);
    out << j.dump(2) << "\n";
  } else {
    out << csv.str();
  }
  return kSuccess;
}

// ---------------------------------------------------------------- verify

struct CheckResult {
  std::string check;
  std::string instance;
  std::string expected;
  std::string actual;
  std::string status; // PASS, FAIL or SKIP
};

class Verifier {
public:
  Verifier(const RunConfig& config, bool inject_fault)
      : config_(config), inject_fault_(inject_fault) {}

  void expect_equal(const std::string& check, const std::string& instance,
                    const BigInt& expected, const BigInt& actual) {
    record(check, instance, expected.str(), actual.str(), expected == actual);
  }

  void expect_true(const std::string& check, const std::string& instance,
                   const std::string& expected, const std::string& actual, bool ok) {
    record(check, instance, expected, actual, ok);
  }

  void skip(const std::string& check, const std::string& instance, const std::string& why) {
    results_.push_back({check, instance, "", why, "SKIP"});
  }

  // Runs body; a cap hit turns into a SKIP entry instead of an error.
  void guarded(const std::string& check, const std::string& instance,
               const std::function<void()>& body) {
    try {
      body();
    } catch (const CapExceeded& e) {
      skip(check, instance, e.what());
    }
  }

  const std::vector<CheckResult>& results() const { return results_; }
  bool inject_fault() const { return inject_fault_; }
  const RunConfig& config() const { return config_; }

private:
  void record(const std::string& check, const std::string& instance, std::string expected,
              std::string actual, bool ok) {
    results_.push_back(
        {check, instance, std::move(expected), std::move(actual), ok ? "PASS" : "FAIL"});
  }

  const RunConfig& config_;
  bool inject_fault_;
  std::vector<CheckResult> results_;
};

std::string gb_name(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
  return "G_b(p=" + std::to_string(p) + ",a=" + std::to_string(a) + ",b=" + std::to_string(b) +
         ")";
}

void verify_gb_family(Verifier& v, std::uint64_t max_degree, std::size_t& instances) {
  const EngineLimits limits = limits_of(v.config());
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= max_degree; ++p) {
    if (!is_prime(p))
      continue;
    for (std::uint32_t a = 1; big_pow(p, a + 1) <= max_degree; ++a) {
      const std::string ring = "(p=" + std::to_string(p) + ",a=" + std::to_string(a) + ")";
      v.guarded("filtration_equal", ring, [&] {
        const FiltrationReport report = filtration_equal(p, a);
        std::ostringstream dims;
        for (std::size_t i = 0; i < report.commutator_dims.size(); ++i)
          dims << (i ? " " : "") << report.commutator_dims[i];
        v.expect_true("filtration_equal", ring, "equal", dims.str(), report.equal);
      });
      for (std::uint32_t b = 0; b <= a * (p - 1); ++b) {
        const std::string name = gb_name(p, a, b);
        const GroupParams params = GroupParams::make(p, a, b);
        BigInt mu_expected = mu_formula(params);
        if (v.inject_fault())
          mu_expected += 1;
        ++instances;

        v.guarded("min_nonzeros", name, [&] {
          // (p - s) p^{a-r-1}, written to stay integral when r = a.
          const BigInt expected = mu_expected / p;
          v.expect_equal("min_nonzeros", name, expected,
                         BigInt(min_nonzeros_bruteforce(a, p, b)));
        });
        v.guarded("oracle", name, [&] {
          GeneratedGroup group = build_Gb(params, v.config().degree_cap);
          const InvariantReport report = invariant_report(group, limits);
          v.expect_equal("mu_formula", name, mu_expected, BigInt(report.mu));
          v.expect_equal("base_formula", name, params.dimension, BigInt(report.base_size));
          v.expect_true("transitive", name, "true", report.transitive ? "true" : "false",
                        report.transitive);
          v.expect_true("mu_b_at_least_n", name, ">= " + std::to_string(report.n),
                        std::to_string(report.product), report.product >= report.n);
        });
      }
    }
  }
}

void verify_bound_families(Verifier& v, std::uint64_t max_degree) {
  const EngineLimits limits = limits_of(v.config());
  auto bound_check = [&](const std::string& family, GeneratedGroup group, bool transitive) {
    const std::string name = group.label();
    v.guarded(family, name, [&] {
      const InvariantReport report = invariant_report(group, limits);
      std::ostringstream bound;
      bound << "<= " << format12(nlogn_bound(report.n));
      v.expect_true(family + ":nlogn", name, bound.str(), std::to_string(report.product),
                    check_nlogn(report));
      if (transitive)
        v.expect_true(family + ":mu_b_at_least_n", name, ">= " + std::to_string(report.n),
                      std::to_string(report.product), report.product >= report.n);
    });
  };

  const std::vector<std::function<GeneratedGroup()>> pieces = {
      [] { return symmetric_group(2); }, [] { return symmetric_group(3); },
      [] { return symmetric_group(4); }, [] { return cyclic_group(3); },
      [] { return cyclic_group(5); }};
  for (const auto& inner : pieces)
    for (const auto& outer : pieces) {
      const GeneratedGroup h = inner();
      const GeneratedGroup t = outer();
      if (h.degree() * t.degree() > max_degree)
        continue;
      bound_check("wreath", wreath_product({h, t}, v.config().degree_cap), true);
    }

  for (std::uint64_t p : {2u, 3u, 5u})
    for (std::size_t n = p; n <= max_degree; ++n)
      bound_check("sylow", sylow_sym(n, p, v.config().degree_cap), false);

  // Sym(k) x Sym(n-k) grows factorially; beyond degree 12 nothing fits a cap.
  for (std::size_t n = 4; n <= std::min<std::uint64_t>(max_degree, 12); ++n)
    for (std::size_t k = 2; k + 2 <= n; ++k) {
      GeneratedGroup group = maximal_intransitive(n, k, v.config().degree_cap);
      const std::string name = group.label();
      v.guarded("maxintrans", name, [&] {
        const InvariantReport report = invariant_report(group, limits);
        v.expect_equal("maxintrans:product_2(n-2)", name, BigInt(2 * (n - 2)),
                       BigInt(report.product));
        v.expect_true("maxintrans:nlogn", name, "<= " + format12(nlogn_bound(report.n)),
                      std::to_string(report.product), check_nlogn(report));
      });
    }
}

int cmd_verify(std::uint64_t max_degree, bool inject_fault, const RunConfig& config,
               std::ostream& out, std::ostream& err) {
  if (max_degree < 4)
    throw InvalidArgument("--max-degree must be at least 4");
  Verifier v(config, inject_fault);
  std::size_t instances = 0;
  verify_gb_family(v, max_degree, instances);
  verify_bound_families(v, max_degree);

  std::size_t failures = 0;
  std::size_t skipped = 0;
  for (const auto& r : v.results()) {
    if (r.status == "FAIL") {
      ++failures;
      err << "FAIL " << r.check << " " << r.instance << ": expected " << r.expected << ", got "
          << r.actual << "\n";
    }
    skipped += r.status == "SKIP";
  }
  const bool pass = failures == 0;

  if (config.format == Format::Json) {
    Json j;
    j["max_degree"] = max_degree;
    j["status"] = pass ? "PASS" : "FAIL";
    j["instances"] = instances;
    j["checks"] = v.results().size();
    j["failures"] = failures;
    j["skipped"] = skipped;
    Json rows = Json::array();
    for (const auto& r : v.results())
      rows.push_back(Json{{"check", r.check},
                          {"instance", r.instance},
                          {"expected", r.expected},
                          {"actual", r.actual},
                          {"status", r.status}});
    j["results"] = std::move(rows);
    out << j.dump(2) << "\n";
  } else {
    out << "check,instance,expected,actual,status\n";
    for (const auto& r : v.results())
      out << r.check << ",\"" << r.instance << "\",\"" << r.expected << "\",\"" << r.actual
          << "\"," << r.status << "\n";
  }
  return pass ? kSuccess : kVerificationFailed;
}

// ------------------------------------------------------------------ asym

std::string csv_cell(const std::optional<double>& v) { return v ? format12(*v) : "nan"; }

Json json_cell(const std::optional<double>& v) { return v ? Json(round12(*v)) : Json(nullptr); }

int cmd_asym(const std::vector<std::uint64_t>& p_list, std::optional<double> lambda,
             const RunConfig& config, std::ostream& out) {
  for (auto p : p_list) {
    if (!is_prime(p))
      throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
    if (p == 3)
      throw InvalidArgument("p = 3 is not covered: use p = 2 or a prime p > 3");
  }
  std::vector<std::uint64_t> primes = p_list;
  if (primes.empty() && !lambda)
    primes = {5, 11, 101, 1009, 10007};
  std::vector<ExponentRow> table;
  if (!primes.empty())
    table = exponent_table(primes, false);
  std::optional<double> entropy;
  if (lambda)
    entropy = entropy_exponent(*lambda);

  if (config.format == Format::Json) {
    Json j;
    if (lambda) {
      j["lambda"] = round12(*lambda);
      j["entropy_exponent"] = round12(*entropy);
    }
    if (!table.empty()) {
      Json rows = Json::array();
      for (const auto& row : table)
        rows.push_back(Json{{"p", row.p},
                            {"theta_minus", json_cell(row.theta_minus)},
                            {"theta_zero", json_cell(row.theta_zero)},
                            {"theta_plus", json_cell(row.theta_plus)}});
      j["table"] = std::move(rows);
    }
    out << j.dump(2) << "\n";
  } else {
    if (lambda) {
      out << "lambda,entropy_exponent\n" << format12(*lambda) << "," << format12(*entropy) << "\n";
      if (!table.empty())
        out << "\n";
    }
    if (!table.empty()) {
      out << "p,theta_minus,theta_zero,theta_plus\n";
      for (const auto& row : table)
        out << row.p << "," << csv_cell(row.theta_minus) << "," << csv_cell(row.theta_zero)
            << "," << csv_cell(row.theta_plus) << "\n";
    }
  }
  return kSuccess;
}

// ------------------------------------------------------------- construct

GeneratedGroup parse_small_group(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'S' && name[0] != 'C'))
    throw InvalidArgument("group '" + name + "' must look like S<k> or C<k>");
  std::size_t k = 0;
  try {
    std::size_t used = 0;
    k = std::stoul(name.substr(1), &used);
    if (used != name.size() - 1)
      throw std::invalid_argument(name);
  } catch (const std::exception&) {
    throw InvalidArgument("group '" + name + "' must look like S<k> or C<k>");
  }
  if (k == 0 || k > kMaxDegree)
    throw InvalidArgument("group '" + name + "' has unsupported degree");
  return name[0] == 'S' ? symmetric_group(k) : cyclic_group(k);
}

int emit_construction(GeneratedGroup& group, Json descriptor, double log_base,
                      const RunConfig& config, std::ostream& out) {
  const InvariantReport report = invariant_report(group, limits_of(config));
  const double bound = nlogn_bound(report.n, log_base);
  const bool holds = check_nlogn(report, log_base);
  descriptor["label"] = group.label();
  if (config.format == Format::Json) {
    Json j;
    j["descriptor"] = std::move(descriptor);
    j["report"] = to_json(report);
    Json orbit_sizes = Json::array();
    for (const auto& orbit : orbits(group))
      orbit_sizes.push_back(orbit.size());
    j["orbit_sizes"] = std::move(orbit_sizes);
    j["nlogn"] = Json{{"log_base", round12(log_base)}, {"bound", round12(bound)}, {"holds", holds}};
    out << j.dump(2) << "\n";
  } else {
    out << "label,n,order,mu,base_size,product,exponent,transitive,nlogn_bound,nlogn_holds\n";
    out << group.label() << "," << report.n << "," << csv_big(report.order) << "," << report.mu
        << "," << report.base_size << "," << report.product << "," << format12(report.exponent)
        << "," << (report.transitive ? "true" : "false") << "," << format12(bound) << ","
        << (holds ? "true" : "false") << "\n";
  }
  return kSuccess;
}

class OutputSink {
public:
  OutputSink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_)
        throw InvalidArgument("cannot open output file " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }

private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal degree and base size of the transitive p-groups G_b"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  RunConfig config;

  InvariantsArgs inv;
  auto* invariants = app.add_subcommand("invariants", "mu, base size and product for G_b");
  invariants->add_option("--p", inv.p, "prime p")->required();
  invariants->add_option("--a", inv.a, "dimension a of V")->required();
  invariants->add_option("--b", inv.b, "degree bound b in [0, a(p-1)]")->required();
  invariants->add_flag("--oracle", inv.oracle, "also run the brute-force oracles");
  add_common_options(invariants, config);

  std::uint32_t sweep_p = 2;
  std::uint32_t sweep_a = 1;
  auto* sweep = app.add_subcommand("sweep", "closed-form invariants for every b");
  sweep->add_option("--p", sweep_p, "prime p")->required();
  sweep->add_option("--a", sweep_a, "dimension a of V")->required();
  add_common_options(sweep, config);

  std::uint64_t max_degree = 32;
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "oracle-vs-formula suite up to a degree");
  verify->add_option("--max-degree", max_degree, "largest degree p^(a+1) to check");
  verify->add_flag("--inject-fault", inject_fault, "perturb the mu formula (harness self-test)")
      ->group("");
  add_common_options(verify, config);

  std::vector<std::uint64_t> p_list;
  std::optional<double> lambda;
  auto* asym = app.add_subcommand("asym", "asymptotic exponent tables");
  asym->add_option("--p-list", p_list, "comma separated primes (2 or > 3)")->delimiter(',');
  asym->add_option("--lambda", lambda, "evaluate the p = 2 entropy exponent at lambda");
  add_common_options(asym, config);

  double log_base = 2.0;
  auto* construct = app.add_subcommand("construct", "build a comparison family member");
  construct->require_subcommand(1);
  std::string inner = "S2";
  std::string outer = "S2";
  auto* wreath = construct->add_subcommand("wreath", "H wr T in imprimitive action");
  wreath->add_option("--inner", inner, "block group, S<k> or C<k>");
  wreath->add_option("--outer", outer, "top group, S<m> or C<m>");
  std::size_t sylow_n = 0;
  std::uint64_t sylow_p = 2;
  auto* sylow = construct->add_subcommand("sylow", "Sylow p-subgroup of Sym(n)");
  sylow->add_option("--n", sylow_n, "degree")->required();
  sylow->add_option("--p", sylow_p, "prime")->required();
  std::size_t mi_n = 0;
  std::size_t mi_k = 0;
  auto* maxintrans = construct->add_subcommand("maxintrans", "Sym(k) x Sym(n-k)");
  maxintrans->add_option("--n", mi_n, "degree")->required();
  maxintrans->add_option("--k", mi_k, "size of the first part, 1 <= k < n")->required();
  for (auto* sub : {wreath, sylow, maxintrans}) {
    sub->add_option("--log-base", log_base, "base of log in the n log n bound");
    add_common_options(sub, config);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    OutputSink sink(config.output_path, out);
    std::ostream& os = sink.stream();
    if (*invariants) {
      config.command = "invariants";
      return cmd_invariants(inv, config, os, err);
    }
    if (*sweep) {
      config.command = "sweep";
      return cmd_sweep(sweep_p, sweep_a, config, os);
    }
    if (*verify) {
      config.command = "verify";
      return cmd_verify(max_degree, inject_fault, config, os, err);
    }
    if (*asym) {
      config.command = "asym";
      return cmd_asym(p_list, lambda, config, os);
    }
    config.command = "construct";
    if (*wreath) {
      GeneratedGroup group =
          wreath_product({parse_small_group(inner), parse_small_group(outer)}, config.degree_cap);
      return emit_construction(group, Json{{"kind", "wreath"}, {"inner", inner}, {"outer", outer}},
                               log_base, config, os);
    }
    if (*sylow) {
      GeneratedGroup group = sylow_sym(sylow_n, sylow_p, config.degree_cap);
      return emit_construction(group, Json{{"kind", "sylow"}, {"n", sylow_n}, {"p", sylow_p}},
                               log_base, config, os);
    }
    GeneratedGroup group = maximal_intransitive(mi_n, mi_k, config.degree_cap);
    return emit_construction(group, Json{{"kind", "maxintrans"}, {"n", mi_n}, {"k", mi_k}},
                             log_base, config, os);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const CapExceeded& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

} // namespace permbase::cli
