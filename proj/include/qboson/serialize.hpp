#pragma once

#include <json.hpp>

#include "qboson/hall_littlewood.hpp"
#include "qboson/lattice_function.hpp"
#include "qboson/laurent.hpp"
#include "qboson/params.hpp"
#include "qboson/partition.hpp"

namespace qboson {

/// JSON with deterministic (insertion-ordered) keys; every report path
/// uses this type so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);                     // "p/q" or "p"
Rational rational_from_json(const Json& j);

Json to_json(const LaurentPoly& p);                  // [{exponents, coeff}...], lex order
LaurentPoly laurent_from_json(const Json& j, int nvars);

Json to_json(const Partition& lambda);               // [l1, l2, ...]
Partition partition_from_json(const Json& j);

Json to_json(const ShiftPair& pair);                 // {plus, minus}
ShiftPair shift_pair_from_json(const Json& j);

Json to_json(const LatticeFunction& f);              // [{partition, value}...]
LatticeFunction lattice_function_from_json(const Json& j, int n);

Json to_json(const ParamSet& params);                // {t, t0, t1, t2, t3}

Json to_json(const PieriReport& report);

} // namespace qboson
