#include "qo/cli.hpp"

namespace qo {

using nlohmann::json;

json to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const json& j)
{
    if (!j.is_string()) throw Error("expected a rational string");
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0) throw Error("malformed rational '" + j.get<std::string>() + "'");
    q.canonicalize();
    return q;
}

namespace {

json cyclotomic_json(const Cyclotomic& c)
{
    json coeffs = json::array();
    for (const auto& q : c.coeffs()) coeffs.push_back(to_json(q));
    return {{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json& j)
{
    std::vector<Rational> c;
    for (const auto& q : j.at("coeffs")) c.push_back(rational_from_json(q));
    return Cyclotomic::from_powers(j.at("conductor").get<long>(), c);
}

}  // namespace

json to_json(const Number& c)
{
    if (c.in_base()) return cyclotomic_json(c.base_value());
    json parts = json::array();
    for (const auto& p : c.parts()) parts.push_back(cyclotomic_json(p));
    return {{"extension", c.extension()->var}, {"parts", parts}};
}

Number number_from_json(const json& j, const ExtensionPtr& ext)
{
    if (!j.contains("extension")) return Number(cyclotomic_from_json(j));
    if (!ext || ext->var != j.at("extension").get<std::string>())
        throw Error("number over an undeclared extension '" + j.at("extension").get<std::string>() + "'");
    std::vector<Cyclotomic> parts;
    for (const auto& p : j.at("parts")) parts.push_back(cyclotomic_from_json(p));
    return Number::from_parts(ext, std::move(parts));
}

json to_json(const Series& s)
{
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) {
        json exp = json::array();
        for (const auto& q : e) exp.push_back(to_json(q));
        terms.push_back({{"exponent", exp}, {"coeff", to_json(c)}});
    }
    return {{"nvars", s.nvars()},
            {"precision", s.precision() ? to_json(*s.precision()) : json(nullptr)},
            {"terms", terms}};
}

Series series_from_json(const json& j, const ExtensionPtr& ext)
{
    std::optional<Rational> prec;
    if (!j.at("precision").is_null()) prec = rational_from_json(j.at("precision"));
    Series s(j.at("nvars").get<std::size_t>(), prec);
    for (const auto& t : j.at("terms")) {
        ExponentVec e;
        for (const auto& q : t.at("exponent")) e.push_back(rational_from_json(q));
        s.add_term(e, number_from_json(t.at("coeff"), ext));
    }
    return s;
}

json to_json(const UniPoly& p)
{
    json c = json::array();
    for (const auto& x : p.coeffs()) c.push_back(to_json(x));
    return c;
}

UniPoly unipoly_from_json(const json& j, const ExtensionPtr& ext)
{
    std::vector<Number> c;
    for (const auto& x : j) c.push_back(number_from_json(x, ext));
    return UniPoly(std::move(c));
}

json to_json(const NewtonPolytope& p)
{
    json v = json::array();
    for (const auto& pt : p.vertices()) {
        json a = json::array();
        for (const auto& q : pt) a.push_back(to_json(q));
        v.push_back(a);
    }
    return {{"dim", p.dim()}, {"vertices", v}};
}

json to_json(const ScaledPolytope& p)
{
    return {{"factor", to_json(p.factor)}, {"base", to_json(p.base)}, {"value", to_json(p.value())}};
}

}  // namespace qo
