#pragma once

#include <string>

#include <json.hpp>

#include "permbase/bigint.hpp"
#include "permbase/filtration.hpp"
#include "permbase/group.hpp"
#include "permbase/ring.hpp"

// JSON forms shared by the CLI. Field order is fixed (ordered_json) and
// doubles are rounded to 12 significant digits so output is byte-stable.

namespace permbase {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits.
double round12(double value);
/// printf("%.12g") form used in CSV output.
std::string format12(double value);

/// Number when it fits in 64 bits, decimal string otherwise.
Json big_to_json(const BigInt& value);

/// {"n", "order", "mu", "base_size", "product", "exponent", "transitive"}
Json to_json(const InvariantReport& report);

/// [{"exponents": [...], "coeff": c}, ...] in canonical index order.
Json to_json(const RingElement& f);

Json to_json(const FiltrationReport& report);

} // namespace permbase
