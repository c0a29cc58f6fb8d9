#include "doctest.h"

#include "qo/charpoly.hpp"
#include "qo/parser.hpp"

using namespace qo;

namespace {

LiteralContext ctx(std::vector<std::string> v)
{
    LiteralContext c;
    c.vars = std::move(v);
    return c;
}

UniPoly zpoly(std::initializer_list<long> c)
{
    std::vector<Number> v;
    for (long a : c) v.emplace_back(a);
    return UniPoly(v);
}

ExponentVec ev(std::initializer_list<Rational> q) { return ExponentVec(q); }

}  // namespace

TEST_CASE("characteristic data by substitution")
{
    auto c = ctx({"x1", "x2"});
    auto f = parse_ypoly("(y^2 - x1^3*x2^2)*(y - x1^5*x2^2)", c);
    Series zero(2);
    ExponentVec h = ev({Rational(3, 2), 1});
    auto r = characteristic_data(f, zero, h);
    REQUIRE(std::holds_alternative<CharacteristicData>(r));
    CHECK(std::get<CharacteristicData>(r).monic() == zpoly({0, -1, 0, 1}));
    CHECK(std::get<CharacteristicData>(r).q == ev({Rational(9, 2), 3}));
    CHECK(std::holds_alternative<Incompatible>(characteristic_data(parse_ypoly("y - x1 - x2", c), zero, h)));

    auto c1 = ctx({"x"});
    auto g = parse_ypoly("y^3 + x^2*y", c1);
    auto rg = characteristic_data(g, Series(1), ev({1}));
    REQUIRE(std::holds_alternative<CharacteristicData>(rg));
    CHECK(std::get<CharacteristicData>(rg).G == zpoly({0, 1, 0, 1}));
    CHECK(std::get<CharacteristicData>(rg).q == ev({3}));
}

TEST_CASE("closed form agrees with substitution")
{
    auto c = ctx({"x1", "x2"});
    std::vector<Branch> br{{"f1", parse_series("x1^(3/2)*x2", c), 2}, {"f2", parse_series("x1^5*x2^2", c), 1}};
    auto t = build_kuo_lu(expand_roots(br));
    auto f = parse_ypoly("(y^2 - x1^3*x2^2)*(y - x1^5*x2^2)", c);
    auto closed = characteristic_of_f(t, 0);
    auto direct = std::get<CharacteristicData>(characteristic_data(f, t.bar(0)));
    CHECK(closed.G == direct.G);
    CHECK(closed.q == direct.q);
    auto p2 = characteristic_from_roots(t, 0, roots_of_branch(t.roots(), 1));
    CHECK(p2.q == ev({Rational(3, 2), 1}));
    CHECK(p2.G == zpoly({0, 1}));
}

TEST_CASE("derivative split and regularity")
{
    auto s = derivative_split(zpoly({0, 1, 0, 1}), 2);
    CHECK(s.plus == zpoly({1}));
    CHECK(s.minus == zpoly({0, 1}));
    CHECK(!s.regular);
    CHECK(!is_k_regular(zpoly({0, 1, 0, 1}), 2));
    CHECK(is_k_regular(zpoly({0, 1, 0, 1}), 1));
    CHECK(is_k_regular(zpoly({0, 1, 0, 1}), 3));
    // (z^2 - 1)^3
    UniPoly F = zpoly({-1, 0, 1}).pow(3);
    for (long k = 1; k < 6; ++k) CHECK(is_k_regular(F, k));
    auto s2 = derivative_split(F, 2);
    CHECK(s2.plus == zpoly({-1, 0, 1}));
    CHECK(s2.plus * s2.minus == poly_derivative(F, 2).monic());
    CHECK_THROWS(derivative_split(F, 6));
    CHECK_THROWS(derivative_split(F, 0));
}

TEST_CASE("derivative shape of (z^n - c)^e")
{
    CHECK(al_derivative_shape(2, 4, 3) == ALShape{1, 1, 1});
    CHECK(al_derivative_shape(2, 2, 3) == ALShape{1, 0, 0});
    CHECK(al_derivative_shape(3, 1, 1) == ALShape{2, 0, 0});
    CHECK_THROWS(al_derivative_shape(2, 2, 4));
    UniPoly F = zpoly({-1, 0, 1}).pow(4);
    auto obs = observed_al_shape(poly_derivative(F, 3), 2, Number(1));
    REQUIRE(obs);
    CHECK(*obs == ALShape{1, 1, 1});
    CHECK(has_power_shape(zpoly({0, 0, -1, 0, 1}), 2));
    CHECK(!has_power_shape(zpoly({0, 1, 1}), 2));
}
