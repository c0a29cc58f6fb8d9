#include <sstream>

#include "doctest.h"

#include "qo/cli.hpp"

using namespace qo;

namespace {

std::string corpus(const std::string& name) { return std::string(QO_CORPUS_DIR) + "/" + name; }

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("input grammar")
{
    auto in = parse_input(R"(vars=[x1,x2]; branch{root="x1^(3/2)*x2", denom=2}; branch{root="x1^5*x2^2", denom=1})");
    CHECK(in.d() == 2);
    REQUIRE(in.branches.size() == 2);
    CHECK(in.branches[0].branch.label == "f1");
    CHECK(in.branches[1].branch.denom == 1);
    CHECK(in.precision == kDefaultPrecision);

    auto p = parse_input("# comment\nvars=[x]\npoly=\"y^3 + x^2*y\"   # trailing\nprecision=25/2\n");
    CHECK(p.poly.has_value());
    CHECK(p.branches.empty());
    CHECK(p.precision == Rational(25, 2));

    auto multi = parse_input("vars=[x]\nbranch{label=\"a\",\n  root=\"x^(3/2)\"\n  denom=2}\n");
    CHECK(multi.branches[0].branch.label == "a");
}

TEST_CASE("input errors carry positions and names")
{
    try {
        parse_input("vars=[x1,x2]\nbranch{root=\"x1^(3/0)\", denom=2}");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_input("vars=[x]; precision=3/0"), ParseError);
    CHECK_THROWS_AS(parse_input("vars=[x]; poly=\"y^2 - x^3\" extra"), ParseError);
    CHECK_THROWS_AS(parse_input("poly=\"y\""), ParseError);
    CHECK_THROWS_WITH_AS(parse_input("vars=[x]; poly=\"y - z\""), doctest::Contains("'z'"), ParseError);
    CHECK_THROWS_WITH_AS(parse_input("vars=[x]; colour=1"), doctest::Contains("colour"), ParseError);
    CHECK_THROWS_WITH(parse_input("vars=[x]; branch{label=\"g\", root=\"x^(3/2)\", denom=4}"), doctest::Contains("branch g"));
    CHECK_THROWS_WITH(parse_input("vars=[x]; conductor=4; branch{root=\"zeta(3)*x\"}"), doctest::Contains("conductor"));
    CHECK_THROWS(parse_input("vars=[x]"));
}

TEST_CASE("resolving problems")
{
    auto p = resolve(parse_input("vars=[x]; poly=\"y^3 + x^2*y\""));
    CHECK(p.tree.degree() == 3);
    CHECK(p.branches.size() == 3);
    CHECK(resolve_polynomial(p, "f(2)") == parse_ypoly("y", p.input.context()));

    auto ex = resolve(parse_input(R"(vars=[x1,x2]; branch{root="x1^(3/2)*x2", denom=2}; branch{root="x1^5*x2^2"})"));
    CHECK(ex.f == parse_ypoly("(y^2 - x1^3*x2^2)*(y - x1^5*x2^2)", ex.input.context()));
    CHECK(resolve_polynomial(ex, "f2") == parse_ypoly("y - x1^5*x2^2", ex.input.context()));

    CHECK_THROWS(resolve(parse_input("vars=[x1,x2]; poly=\"y^2 - x1*x2\"")));
    CHECK_THROWS_WITH(resolve(parse_input("vars=[x]; branch{root=\"x^(3/2)\", poly=\"y - x\"}")), doctest::Contains("degree"));
}

TEST_CASE("json round trip")
{
    auto ext = make_extension("t", "t^2 - sqrt(2)", parse_extension_modulus("t^2 - sqrt(2)", "t"));
    LiteralContext c;
    c.vars = {"x1", "x2"};
    c.ext = ext;
    auto s = parse_series("sqrt(2)*x1^(3/2)*x2 + t^3/4*x1^(7/4)*x2^(3/2) - 5/7*zeta(12)", c);
    CHECK(series_from_json(nlohmann::json::parse(to_json(s).dump()), ext) == s);
    auto trunc = s.truncated(Rational(3));
    CHECK(series_from_json(to_json(trunc), ext) == trunc);
    CHECK(rational_from_json(to_json(Rational(-22, 7))) == Rational(-22, 7));
    CHECK(to_json(Rational(3, 2)) == "3/2");
    UniPoly u({Number(Cyclotomic::zeta(5, 2)), Number(Rational(1, 3)), Number(1)});
    CHECK(unipoly_from_json(to_json(u)) == u);
    CHECK_THROWS(number_from_json(to_json(Number::generator(ext))));
}

TEST_CASE("tree rendering")
{
    auto p = resolve(parse_input(R"(vars=[x1,x2]; branch{root="x1^(3/2)*x2", denom=2}; branch{root="x1^5*x2^2"})"));
    auto dot = render_tree(p, Format::dot);
    CHECK(dot.find("(3/2,1)") != std::string::npos);
    CHECK(dot.find("style=dashed") != std::string::npos);
    auto j = nlohmann::json::parse(render_tree(p, Format::json));
    int finite = 0, leaves = 0;
    for (const auto& b : j["kuo_lu"]["bars"]) (b["height"] == "inf" ? leaves : finite)++;
    CHECK(finite == 1);
    CHECK(leaves == 3);
    CHECK(render_tree(p, Format::json) == render_tree(p, Format::json));

    auto cusp = resolve(parse_input("vars=[x]; branch{root=\"x^(3/2) + x^(7/4)\", denom=4}"));
    auto text = render_tree(cusp, Format::text);
    CHECK(text.find("[B1]") != std::string::npos);
    CHECK(text.find("--> [B2]") != std::string::npos);
}

TEST_CASE("commands and exit codes")
{
    auto tree = run({"tree", "--format", "dot", corpus("exkl.qo")});
    CHECK(tree.code == 0);
    CHECK(tree.out.find("(3/2,1)") != std::string::npos);

    auto polar = run({"polar", "-k", "2", corpus("gbgp.qo")});
    CHECK(polar.code == 0);
    auto j = nlohmann::json::parse(run({"polar", "-k", "2", "--format", "json", corpus("gbgp.qo")}).out);
    std::vector<long> degrees;
    for (const auto& f : j["factors"]) degrees.push_back(f["degree"].get<long>());
    CHECK(degrees == std::vector<long>{6, 4, 4});

    auto v = run({"verify", "-k", "2", corpus("casas51.qo")});
    CHECK(v.code == 2);
    CHECK(v.err.find("not 2-regular") != std::string::npos);
    CHECK(run({"verify", "-k", "1", corpus("exkl.qo")}).code == 0);

    auto c = run({"contact", corpus("casas52a0.qo"), "f2", "f(2)"});
    CHECK(c.code == 0);
    CHECK(c.out.find("Delta(x^8)") != std::string::npos);

    auto poly = run({"polytope", corpus("exkl.qo")});
    CHECK(poly.code == 0);
    CHECK(poly.out.find("canonical decomposition") != std::string::npos);

    CHECK(run({"tree", corpus("missing.qo")}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"polar", corpus("exkl.qo")}).code == 1);
    CHECK(run({"polar", "-k", "3", corpus("exkl.qo")}).code == 1);
    // Newton-Puiseux cannot separate the roots this early.
    CHECK(run({"tree", "--precision", "1/2", corpus("casas52a0.qo")}).code == 3);
}
