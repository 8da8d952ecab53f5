#pragma once

// JSON encoding of exact values. Cyclotomic values are written as
// "a0 + a1*z^1 + ..." strings at a stated conductor, together with a decimal
// rendering that is never read back.

#include <json.hpp>

#include "verlinde/frobenius.hpp"

namespace verlinde {

using Json = nlohmann::ordered_json;

std::string rational_decimal(const Rational& q, int digits);

Json to_json(const Rational& q, int digits);
Json to_json(const CycScalar& x, int digits);
Json to_json(const RatSeries& s, int digits);
Json to_json(const CycSeries& s, int digits);
Json to_json(const FrobeniusData<CycSeries>& data, int digits);

Rational rational_from_json(const Json& j);
CycScalar cyc_from_json(const Json& j);
RatSeries rat_series_from_json(const Json& j);
CycSeries cyc_series_from_json(const Json& j);
/// Rebuilds the points and theta series; residuals are re-evaluated from the
/// stored data and must vanish.
FrobeniusData<CycSeries> frobenius_from_json(const Json& j);

} // namespace verlinde
