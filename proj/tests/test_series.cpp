#include "doctest.h"

#include "qo/parser.hpp"

using namespace qo;

namespace {

LiteralContext ctx2()
{
    LiteralContext c;
    c.vars = {"x1", "x2"};
    return c;
}

ExponentVec ev(std::initializer_list<Rational> q) { return ExponentVec(q); }

}  // namespace

TEST_CASE("literal parsing")
{
    auto c = ctx2();
    Series s = parse_series("2*x1^(3/2)*x2 + x1^2*x2^3", c);
    CHECK(s.terms().size() == 2);
    CHECK(s.coeff(ev({Rational(3, 2), 1})) == Number(2));

    SeriesYPoly f = parse_ypoly("(y^2 - x1^3*x2^2)*(y - x1^5*x2^2)", c);
    CHECK(f.degree() == 3);
    CHECK(f.is_weierstrass());
    CHECK(f.coeff(0).coeff(ev({8, 4})) == Number(1));
    CHECK(f.coeff(2).coeff(ev({5, 2})) == Number(-1));

    Series r = parse_series("sqrt(2)/2 + zeta(4)^3*x1", c);
    CHECK(r.coeff(ev({0, 0})) * r.coeff(ev({0, 0})) == Number(Rational(1, 2)));
    CHECK(r.coeff(ev({1, 0})) == Number(Cyclotomic::zeta(4, 3)));

    CHECK_THROWS_AS(parse_series("x1^(3/0)", c), ParseError);
    CHECK_THROWS_AS(parse_series("y + x1", c), ParseError);
    CHECK_THROWS_AS(parse_series("x3", c), ParseError);
    CHECK_THROWS_AS(parse_series("1/x1", c), ParseError);
    CHECK_THROWS_AS(parse_series("x1^(-1)", c), ParseError);
    CHECK_THROWS_AS(parse_ypoly("y^(1/2)", c), ParseError);
    try {
        LiteralContext c3 = c;
        c3.line = 4;
        c3.column = 10;
        parse_series("x1 +\n x1^(3/0)", c3);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 5);
        CHECK(e.column() == 8);
    }
}

TEST_CASE("extension generator")
{
    CPoly m = parse_extension_modulus("t^2 - sqrt(2)", "t");
    auto ext = make_extension("t", "t^2 - sqrt(2)", m);
    LiteralContext c;
    c.vars = {"x"};
    c.ext = ext;
    Series s = parse_series("t*x", c);
    Number v = s.coeff(ev({1}));
    CHECK(v * v == Number(sqrt_rational(2)));
}

TEST_CASE("substitution and initial data")
{
    auto c = ctx2();
    SeriesYPoly f = parse_ypoly("(y^2 - x1^3*x2^2)*(y - x1^5*x2^2)", c);
    LiteralContext c1;
    c1.vars = {"u"};
    SeriesYPoly g = parse_ypoly("(y^2 - u^5)*(y - u^7)", c1);
    CHECK(f.substitute_monomial({1, 1}) == g);
    CHECK(g.substitute_monomial({1}) == g);

    auto id = initial_data(parse_series("2*x1^(3/2)*x2 + x1^2*x2^3", c));
    REQUIRE(std::holds_alternative<InitialTerm>(id));
    CHECK(std::get<InitialTerm>(id).order == ev({Rational(3, 2), 1}));
    CHECK(std::get<InitialTerm>(id).coeff == Number(2));
    CHECK(std::holds_alternative<NotMonomialOrdered>(initial_data(parse_series("x1 + x2", c))));
    CHECK_THROWS_AS(initial_data(Series(2, Rational(3))), Indeterminate);
}

TEST_CASE("precision propagation")
{
    auto c = ctx2();
    Series a = parse_series("x1 + x2^2 + x1^3", c).truncated(Rational(3));
    CHECK(a.terms().size() == 2);
    Series b = parse_series("x2 + x1*x2", c).truncated(Rational(4));
    Series p = a * b;
    // min(3 + 1, 4 + 1)
    REQUIRE(p.precision());
    CHECK(*p.precision() == 4);
    for (const auto& [e, v] : p.terms()) CHECK(total(e) < 4);
    Series exact = parse_series("x1", c);
    CHECK(*(exact * b).precision() == 5);
    CHECK(*(a + exact).precision() == 3);
    Series u = a.substitute_monomial({1, 2});
    CHECK(*u.precision() == 3);
    CHECK_THROWS_AS(a.coeff(ev({3, 0})), Indeterminate);
}

TEST_CASE("normalized derivative")
{
    auto c = ctx2();
    SeriesYPoly f = parse_ypoly("(y^2 - x1^3*x2^2)*(y - x1^5*x2^2)", c);
    CHECK(f.normalized_derivative(1) == parse_ypoly("y^2 - 2/3*x1^5*x2^2*y - 1/3*x1^3*x2^2", c));
    LiteralContext c1;
    c1.vars = {"x"};
    CHECK(parse_ypoly("y^3 + x^2*y", c1).normalized_derivative(2) == parse_ypoly("y", c1));
    CHECK_THROWS(f.normalized_derivative(-1));
    CHECK_THROWS(f.normalized_derivative(4));
}
