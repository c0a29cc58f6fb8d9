#include "doctest.h"

#include "qo/parser.hpp"
#include "qo/polytope.hpp"

using namespace qo;

namespace {

LiteralContext vars(std::vector<std::string> v)
{
    LiteralContext c;
    c.vars = std::move(v);
    return c;
}

Point pt(std::initializer_list<Rational> p) { return Point(p); }

}  // namespace

TEST_CASE("newton polytope vertices")
{
    auto c = vars({"x1", "x2"});
    auto P = newton_polytope(parse_ypoly("y^8 + x1^4*x2^2", c));
    CHECK(P.vertices() == std::vector<Point>{pt({0, 0, 8}), pt({4, 2, 0})});
    auto M = newton_polytope(parse_series("x1^(3/2)*x2 + x1^2*x2^3", c));
    CHECK(M.is_monomial());
    CHECK(M == monomial_polytope({Rational(3, 2), 1}));
    CHECK(newton_polytope(Series(2)).is_empty());
    CHECK_THROWS_AS(newton_polytope(parse_series("x1 + x2", c).truncated(Rational(1))), Indeterminate);
    CHECK_NOTHROW(newton_polytope(parse_series("1 + x1", c).truncated(Rational(5))));
}

TEST_CASE("minkowski sum and canonical decomposition")
{
    auto c = vars({"x1", "x2"});
    SeriesYPoly f1 = parse_ypoly("y^2 - x1^3*x2^2", c), f2 = parse_ypoly("y - x1^5*x2^2", c);
    auto D = newton_polytope(f1 * f2);
    CHECK(D == minkowski_sum(newton_polytope(f1), newton_polytope(f2)));
    auto dec = canonical_decomposition(D);
    REQUIRE(std::holds_alternative<std::vector<ElementaryPolytope>>(dec));
    auto parts = std::get<std::vector<ElementaryPolytope>>(dec);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == ElementaryPolytope{ExponentVec{3, 2}, 2});
    CHECK(parts[1] == ElementaryPolytope{ExponentVec{5, 2}, 1});
    CHECK(sum_of(3, parts) == D);

    ElementaryPolytope a{ExponentVec{1, 1}, 1}, b{ExponentVec{2, 2}, 2};
    auto ab = minkowski_sum(a.polytope(), b.polytope());
    CHECK(ab == ElementaryPolytope({ExponentVec{3, 3}, 3}).polytope());

    auto yk = newton_polytope(parse_ypoly("y^3", c));
    auto dk = std::get<std::vector<ElementaryPolytope>>(canonical_decomposition(yk));
    REQUIRE(dk.size() == 1);
    CHECK(!dk[0].q);
    CHECK(dk[0].k == 3);

    auto origin = NewtonPolytope::from_points(3, {pt({0, 0, 0})});
    CHECK(minkowski_sum(D, origin) == D);

    auto np = newton_polytope(parse_ypoly("y^2 + x1*y + x2*y + x1*x2", c));
    CHECK(std::holds_alternative<NotPolygonal>(canonical_decomposition(np)));
}

TEST_CASE("symbolic restriction")
{
    auto c1 = vars({"x"});
    auto g = parse_ypoly("y^2 + x*y + x^3", c1);
    CHECK(symbolic_restriction(g, pt({0, 2}), pt({1, 1})) == parse_ypoly("y^2 + x*y", c1));
    auto c = vars({"x1", "x2"});
    auto f = parse_ypoly("(y^2 - x1^3*x2^2)*(y - x1^5*x2^2)", c);
    CHECK(symbolic_restriction(f, pt({0, 0, 3}), pt({3, 2, 1})) == parse_ypoly("y^3 - x1^3*x2^2*y", c));
    CHECK_THROWS(symbolic_restriction(f, pt({0, 0, 3}), pt({8, 4, 0})));
    CHECK(symbolic_restriction(parse_ypoly("x1*y", c), {1, 1, 1}) == parse_ypoly("x1*y", c));
}

TEST_CASE("projection and support")
{
    ElementaryPolytope e{ExponentVec{3, 2}, 2};
    CHECK(project(e.polytope(), {1, 1}) == ElementaryPolytope({ExponentVec{5}, 2}).polytope());
    auto M = monomial_polytope({3, 7});
    CHECK(M.support({2, 5}) == 41);
    auto A = ElementaryPolytope{ExponentVec{1, 2}, 1}.polytope(), B = ElementaryPolytope{ExponentVec{4, 1}, 3}.polytope();
    for (auto v : std::vector<std::vector<Rational>>{{1, 1, 1}, {2, 1, 3}, {0, 1, 5}})
        CHECK(minkowski_sum(A, B).support(v) == A.support(v) + B.support(v));
}

TEST_CASE("rond-schober")
{
    auto c1 = vars({"x"});
    auto cert = rond_schober_reducible(parse_ypoly("y^2 - x*y", c1));
    REQUIRE(cert);
    CHECK(cert->q == ExponentVec{1});
    CHECK(cert->i0 == 1);
    CHECK(!rond_schober_reducible(parse_ypoly("y^2 - x", c1)));
    CHECK(!rond_schober_reducible(parse_ypoly("y^2 - x1*x2", vars({"x1", "x2"}))));
    CHECK(!rond_schober_reducible(parse_ypoly("y^2 - 2*x*y + x^2", c1)));
}

TEST_CASE("polytope order")
{
    auto a = monomial_polytope({5, 2}), b = monomial_polytope({Rational(3, 2), 1});
    CHECK(polytope_order(a, b) == PolytopeOrder::greater);
    CHECK(polytope_order(b, a) == PolytopeOrder::less);
    CHECK(polytope_order(a, a) == PolytopeOrder::equal);
    CHECK(polytope_order(monomial_polytope({1, 0}), monomial_polytope({0, 1})) == PolytopeOrder::incomparable);
    CHECK(ScaledPolytope{Rational(1, 4), monomial_polytope({6, 4})}.value() == monomial_polytope({Rational(3, 2), 1}));
}
