#include "verlinde/serialize.hpp"

#include <numeric>

namespace verlinde {

namespace {

int common_conductor(const std::vector<CycScalar>& xs)
{
    int m = 1;
    for (const auto& x : xs)
        m = std::lcm(m, x.conductor());
    return m;
}

Json decimal_pair(const CycScalar& x, int digits)
{
    const ComplexDecimal c = x.to_complex(digits);
    return Json{{"re", c.re}, {"im", c.im}};
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw PreconditionError(std::string("JSON record lacks field '") + key + "'");
    return j.at(key);
}

} // namespace

std::string rational_decimal(const Rational& q, int digits) { return CycScalar(q).to_complex(digits).re; }

Json to_json(const Rational& q, int digits) { return Json{{"exact", to_string(q)}, {"decimal", rational_decimal(q, digits)}}; }

Json to_json(const CycScalar& x, int digits)
{
    return Json{{"conductor", x.conductor()}, {"exact", x.to_string()}, {"decimal", decimal_pair(x, digits)}};
}

Json to_json(const RatSeries& s, int digits)
{
    Json exact = Json::array(), dec = Json::array();
    for (const auto& c : s.coefficients()) {
        exact.push_back(to_string(c));
        dec.push_back(rational_decimal(c, digits));
    }
    return Json{{"order", s.order()}, {"exact", exact}, {"decimal", dec}};
}

Json to_json(const CycSeries& s, int digits)
{
    const int m = common_conductor(s.coefficients());
    Json exact = Json::array(), dec = Json::array();
    for (const auto& c : s.coefficients()) {
        exact.push_back(c.promoted(m).to_string());
        dec.push_back(decimal_pair(c, digits));
    }
    return Json{{"order", s.order()}, {"conductor", m}, {"exact", exact}, {"decimal", dec}};
}

Json to_json(const FrobeniusData<CycSeries>& data, int digits)
{
    Json flows = Json::array();
    for (const auto& f : data.flows)
        flows.push_back(to_string(f));
    Json points = Json::array();
    for (const auto& p : data.points)
        points.push_back(Json{{"j", p.j},
            {"base", to_json(p.point.base(), digits)},
            {"epsilon", to_json(p.point.correction(), digits)},
            {"theta", to_json(p.theta, digits)},
            {"residual_zero", p.residual.is_zero()}});
    return Json{{"h", data.level.h}, {"modulus", data.level.modulus()}, {"morphism", to_string(data.morphism)},
        {"flows", flows}, {"order", data.orders.at(0)}, {"points", points}};
}

Rational rational_from_json(const Json& j) { return parse_rational(field(j, "exact").get<std::string>()); }

CycScalar cyc_from_json(const Json& j)
{
    return CycScalar::parse(field(j, "exact").get<std::string>(), field(j, "conductor").get<int>());
}

RatSeries rat_series_from_json(const Json& j)
{
    const Json& exact = field(j, "exact");
    if (!exact.is_array() || exact.empty())
        throw PreconditionError("series record needs a non-empty coefficient list");
    std::vector<Rational> c;
    for (const auto& e : exact)
        c.push_back(parse_rational(e.get<std::string>()));
    return RatSeries(std::move(c));
}

CycSeries cyc_series_from_json(const Json& j)
{
    const Json& exact = field(j, "exact");
    const int m = field(j, "conductor").get<int>();
    if (!exact.is_array() || exact.empty())
        throw PreconditionError("series record needs a non-empty coefficient list");
    std::vector<CycScalar> c;
    for (const auto& e : exact)
        c.push_back(CycScalar::parse(e.get<std::string>(), m));
    return CycSeries(std::move(c));
}

FrobeniusData<CycSeries> frobenius_from_json(const Json& j)
{
    const LevelData level(field(j, "h").get<int>());
    const Morphism morphism = parse_morphism(field(j, "morphism").get<std::string>());
    std::vector<RatLaurent> flows;
    for (const auto& f : field(j, "flows"))
        flows.push_back(parse_laurent(f.get<std::string>()));
    const std::vector<int> orders{field(j, "order").get<int>()};
    FrobeniusData<CycSeries> data{level, morphism, flows, orders, {}};
    const int n = level.modulus();
    for (const auto& p : field(j, "points")) {
        DeformedUnitPoint<CycSeries> point(cyc_from_json(field(p, "base")), cyc_series_from_json(field(p, "epsilon")));
        const CycSeries x = point.pow(1);
        const CycSeries residual =
            x.pow_int(n) * detail::log_flow(morphism, flows, x, orders).exp() - like(x, Rational(1));
        if (!residual.is_zero())
            throw ConsistencyError("stored point does not solve its fixed-point equation");
        data.points.push_back({field(p, "j").get<int>(), std::move(point), cyc_series_from_json(field(p, "theta")), residual});
    }
    return data;
}

} // namespace verlinde
