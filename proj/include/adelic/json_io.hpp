#pragma once

// JSON forms of the core objects. Readers throw ParseError on malformed
// input; writers produce ordered objects so output is byte-stable.
//
//   series      {"val": -2, "coeffs": ["L0:[3]", "L0:[1]"], "prec": 2}
//               or text such as "z^-2*(3 + 1*z)"
//   idele       {"p": 3, "default": "1", "points": {"0": "z", "1": "z^2*(1 + 1*z)"}}
//   vector      {"0": 1, "1": 2}
//   local aut   {"kind": "ram", "a": 1} or {"kind": "unram", "sigma": [2, 3, 1]}
//   global aut  {"default_sigma": [2, 3, 1], "exceptions": {"0": {"kind": "ram", "a": 1}}}
//   function    {"constant": "L0:[1]", "factors": [{"root": "L0:[0]", "exp": 1}]}

#include "json.hpp"

#include "adelic/galois.hpp"
#include "adelic/harrison.hpp"
#include "adelic/p1.hpp"

namespace adelic::json_io {

using Json = nlohmann::ordered_json;

FieldElem field_from_json(const FieldCtx& ctx, const Json& j);
Json to_json(const FieldElem& a);

LaurentSeries series_from_json(const FieldCtx& ctx, const Json& j, std::size_t prec);
Json to_json(const LaurentSeries& s);

/// Checks "p" against `p` when present.
Idele idele_from_json(const FieldCtx& ctx, const Json& j, std::uint32_t p, std::size_t prec);
Json to_json(const Idele& t);

ValuationVector vector_from_json(std::uint32_t p, const Json& j);
Json to_json(const ValuationVector& v);

LocalAutomorphism local_aut_from_json(std::uint32_t p, const Json& j);
Json to_json(const LocalAutomorphism& g);

GlobalAutomorphism global_aut_from_json(std::uint32_t p, const Json& j);
Json to_json(const GlobalAutomorphism& g);

RationalFunction function_from_json(const FieldCtx& ctx, const Json& j);

Json to_json(const RamTuple& r);
Json to_json(const std::set<Point>& pts);

}  // namespace adelic::json_io
