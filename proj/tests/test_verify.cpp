#include "doctest.h"

#include "qo/parser.hpp"
#include "qo/verify.hpp"

using namespace qo;

namespace {

LiteralContext ctx(std::vector<std::string> v)
{
    LiteralContext c;
    c.vars = std::move(v);
    return c;
}

std::vector<Series> values(const PuiseuxResult& r)
{
    std::vector<Series> out;
    for (const auto& x : r.roots) out.push_back(x.value);
    return out;
}

bool has(const std::vector<Series>& v, const Series& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

KuoLuTree tree_of(const SeriesYPoly& f, const Rational& prec)
{
    return build_kuo_lu(expand_roots(branches_from_roots(newton_puiseux_roots(f, prec).roots)));
}

NewtonPolytope delta(const Rational& q) { return monomial_polytope(ExponentVec{q}); }

}  // namespace

TEST_CASE("newton-puiseux roots")
{
    auto c = ctx({"x"});
    auto r1 = newton_puiseux_roots(parse_ypoly("y^2 - x^3", c), 10);
    CHECK(r1.roots.size() == 2);
    CHECK(!r1.partial);
    CHECK(has(values(r1), parse_series("x^(3/2)", c)));
    CHECK(has(values(r1), parse_series("-x^(3/2)", c)));
    for (const auto& r : r1.roots) CHECK(r.exact());

    auto r2 = newton_puiseux_roots(parse_ypoly("y^3 + x^2*y", c), 10);
    REQUIRE(r2.roots.size() == 3);
    CHECK(has(values(r2), Series(1)));
    CHECK(has(values(r2), parse_series("zeta(4)*x", c)));
    CHECK(has(values(r2), parse_series("-zeta(4)*x", c)));

    auto u = ctx({"u"});
    auto f = parse_ypoly("(y^2 - u^5)*(y - u^7)", u);
    auto r3 = values(newton_puiseux_roots(f, 10));
    CHECK(has(r3, parse_series("u^(5/2)", u)));
    CHECK(has(r3, parse_series("-u^(5/2)", u)));
    CHECK(has(r3, parse_series("u^7", u)));

    // An infinite root is returned truncated at the requested order.
    auto r4 = newton_puiseux_roots(parse_ypoly("y^2 - y - x", c), 4);
    REQUIRE(r4.roots.size() == 2);
    CHECK(has(values(r4), parse_series("-x + x^2 - 2*x^3", c).truncated(Rational(4))));

    auto br = branches_from_roots(r1.roots);
    REQUIRE(br.size() == 1);
    CHECK(br[0].denom == 2);
    CHECK(branch_polynomial(br[0]) == parse_ypoly("y^2 - x^3", c));
}

TEST_CASE("quartic P-contacts against second polar factors")
{
    auto c = ctx({"x"});
    for (int a : {0, 1}) {
        CAPTURE(a);
        auto fa = parse_ypoly("y^4 + " + std::to_string(a) + "*x^2*y^2 + x^2*y + x^10", c);
        auto br = branches_from_roots(newton_puiseux_roots(fa, 12).roots);
        REQUIRE(br.size() == 2);
        CHECK(br[0].denom == 3);
        auto f1 = branch_polynomial(br[0]), f2 = branch_polynomial(br[1]);
        auto gs = irreducible_factors(normalized_derivative(fa, 2), 12);
        REQUIRE(!gs.empty());
        for (const auto& g : gs) {
            CHECK(p_contact(f1, g).value() == delta(Rational(2, 3)));
            CHECK(p_contact(f2, g).value() == delta(a == 0 ? 8 : 1));
        }
    }
}

TEST_CASE("derivative characteristic data oracle")
{
    auto c = ctx({"x1", "x2"});
    auto t = build_kuo_lu(expand_roots({{"f1", parse_series("x1^(3/2)*x2", c), 2}, {"f2", parse_series("x1^5*x2^2", c), 1}}));
    auto f = parse_ypoly("(y^2 - x1^3*x2^2)*(y - x1^5*x2^2)", c);
    for (long k : {1, 2}) {
        auto rep = verify_derivative_charpoly(t, f, k);
        CHECK(rep.all_match());
        CHECK(rep.entries.size() == 2);
    }
}

TEST_CASE("resultant polytope oracle")
{
    auto c = ctx({"x1", "x2"});
    auto t = build_kuo_lu(expand_roots({{"f1", parse_series("x1^(3/2)*x2", c), 2}, {"f2", parse_series("x1^5*x2^2", c), 1}}));
    auto f = parse_ypoly("(y^2 - x1^3*x2^2)*(y - x1^5*x2^2)", c);
    auto batch = default_substitutions(2, 3);
    CHECK(batch == std::vector<std::vector<Rational>>{{1, 1}, {1, 2}, {2, 1}});
    auto rep = verify_resultant_polytope(t, f, {0, 1}, f, 1, batch);
    REQUIRE(rep.entries.size() == 3);
    CHECK(rep.all_match());
    CHECK(rep.entries[0].predicted == "conv{(0,2),(15,0)}+orthant");
    auto f1 = parse_ypoly("y^2 - x1^3*x2^2", c);
    CHECK(verify_resultant_polytope(t, f, {0}, f1, 1, batch).all_match());

    auto rep2 = verify_resultant_polytope(t, f, {0, 1}, f, 2, batch);
    CHECK(rep2.hypothesis_violated.has_value());
    CHECK(rep2.entries.empty());
}

TEST_CASE("higher Kuo-Lu clauses")
{
    auto c = ctx({"x"});
    auto f = parse_ypoly("y^3 + x^2*y", c);
    auto t = tree_of(f, 8);
    auto r1 = verify_higher_kuo_lu(t, f, 1, 8);
    CHECK(r1.all_match());
    auto r2 = verify_higher_kuo_lu(t, f, 2, 8);
    CHECK(!r2.any_mismatch());
    bool witness = false;
    for (const auto& e : r2.entries)
        if (e.claim.rfind("(iv) otherwise", 0) == 0 && e.status == Status::match) witness = true;
    CHECK(witness);

    auto u = ctx({"u"});
    auto g = parse_ypoly("(y^2 - u^5)*(y - u^7)", u);
    CHECK(verify_higher_kuo_lu(tree_of(g, 10), g, 1, 10).all_match());
}
