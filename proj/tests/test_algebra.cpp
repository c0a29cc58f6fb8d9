#include "doctest.h"

#include "qo/unipoly.hpp"

using namespace qo;

namespace {

UniPoly poly(std::initializer_list<long> c)
{
    std::vector<Number> v;
    for (long a : c) v.emplace_back(a);
    return UniPoly(v);
}

}  // namespace

TEST_CASE("cyclotomic basics")
{
    Cyclotomic z8 = Cyclotomic::zeta(8);
    Cyclotomic s2 = z8 + z8.inverse();
    CHECK(s2 * s2 == Cyclotomic(2));
    CHECK(s2 == sqrt_rational(2));
    CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(4) == Cyclotomic(-1));
    Cyclotomic z12 = Cyclotomic::zeta(12);
    Cyclotomic p = Cyclotomic(1);
    for (int i = 0; i < 12; ++i) p = p * z12;
    CHECK(p == Cyclotomic(1));
    CHECK((s2 + z12 - z12) == s2);
    CHECK(s2.lifted(24) == s2);
    CHECK(s2.lifted(24).canonical().conductor() == 8);
    CHECK((z12 * z12).canonical().conductor() == 3);
    CHECK(Cyclotomic::zeta(6).canonical().conductor() == 3);
    for (long m : {2, 3, 5, 6, 7, 12, -3, -1, 15}) {
        Cyclotomic r = sqrt_rational(m);
        CHECK(r * r == Cyclotomic(m));
    }
    Cyclotomic a = Cyclotomic(3) + z8 * Cyclotomic(Rational(1, 2));
    CHECK(a * a.inverse() == Cyclotomic(1));
    CHECK(compare(a, a.lifted(24)) == 0);
}

TEST_CASE("extension arithmetic")
{
    CPoly m(std::vector<Cyclotomic>{-sqrt_rational(2), Cyclotomic(0), Cyclotomic(1)});
    auto ext = make_extension("t", "t^2 - sqrt(2)", m);
    Number t = Number::generator(ext);
    CHECK(t * t == Number(sqrt_rational(2)));
    CHECK((t * t).in_base());
    Number x = t + Number(1);
    CHECK(x * x.inverse() == Number(1));
    CHECK(t * t * t * t == Number(2));
}

TEST_CASE("squarefree decomposition")
{
    UniPoly z2m1 = poly({-1, 0, 1}), z2m2 = poly({-2, 0, 1});
    UniPoly f = z2m1.pow(4) * z2m2.pow(4);
    auto sq = squarefree_decomposition(f);
    REQUIRE(sq.size() == 1);
    CHECK(sq.at(4) == z2m1 * z2m2);
    CHECK(squarefree_decomposition(poly({0, 1})).at(1) == poly({0, 1}));
    UniPoly g = poly({0, -1, 0, 1});
    CHECK(squarefree_decomposition(g).at(1) == g);
    CHECK_THROWS_WITH(squarefree_decomposition(UniPoly()), "zero input");
}

TEST_CASE("derivatives")
{
    UniPoly f = poly({0, 1, 0, 1});
    CHECK(poly_derivative(f, 2) == poly({0, 6}));
    CHECK(poly_derivative(f, 0) == f);
    CHECK(poly_derivative(f, 2, true) == poly({0, 1}));
    CHECK_THROWS(poly_derivative(f, -1));
}

TEST_CASE("resultant")
{
    CHECK(resultant(poly({0, 1}), poly({0, 1})).is_zero());
    // Res(z - a, z - b) = a - b up to the Sylvester sign: det [[1,-a],[1,-b]] = a - b.
    CHECK(resultant(poly({-3, 1}), poly({-5, 1})) == Number(-2));
    // Res(z^2 + 1, z^2 - 2) = (i^2-2)((-i)^2-2) = 9
    CHECK(resultant(poly({1, 0, 1}), poly({-2, 0, 1})) == Number(9));
}

TEST_CASE("roots in the tower")
{
    auto r = solve_in_tower(poly({0, 1, 0, 1}));
    CHECK(r.roots.size() == 3);
    CHECK(r.unsolved.empty());
    auto s = solve_in_tower(UniPoly(std::vector<Number>{Number(Rational(1, 3)), Number(0), Number(1)}));
    CHECK(s.roots.size() == 2);
    for (auto& [x, m] : s.roots) CHECK(x * x == Number(Rational(-1, 3)));
    auto u = solve_in_tower(poly({-2, 0, 0, 0, 1}));
    CHECK(u.roots.empty());
    CHECK(u.unsolved.size() == 1);
    auto c = solve_in_tower(poly({1, 0, 0, 1}));
    CHECK(c.roots.size() == 3);
    CHECK(root_multiplicity(poly({0, 1}).pow(3) * poly({1, 1}), Number(0)) == 3);
}
