#include "permbase/serialize.hpp"

#include <cstdio>
#include <cstdlib>

namespace permbase {

double round12(double value) { return std::strtod(format12(value).c_str(), nullptr); }

std::string format12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Json big_to_json(const BigInt& value) {
  if (fits_u64(value))
    return value.convert_to<std::uint64_t>();
  return value.str();
}

Json to_json(const InvariantReport& report) {
  Json j;
  j["n"] = report.n;
  j["order"] = big_to_json(report.order);
  j["mu"] = report.mu;
  j["base_size"] = report.base_size;
  j["product"] = report.product;
  j["exponent"] = round12(report.exponent);
  j["transitive"] = report.transitive;
  return j;
}

Json to_json(const RingElement& f) {
  Json terms = Json::array();
  for (const auto& [exps, c] : f.terms())
    terms.push_back(Json{{"exponents", exps}, {"coeff", c}});
  return terms;
}

Json to_json(const FiltrationReport& report) {
  Json j;
  j["p"] = report.p;
  j["a"] = report.a;
  j["equal"] = report.equal;
  j["degree_dims"] = report.degree_dims;
  j["commutator_dims"] = report.commutator_dims;
  return j;
}

} // namespace permbase
