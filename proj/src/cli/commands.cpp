#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qo/cli.hpp"

namespace qo {

namespace {

std::string read_input(const std::string& path)
{
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    ss << in.rdbuf();
    return ss.str();
}

Problem load(const std::string& path, const std::string& precision)
{
    Rational prec = default_precision();
    if (!precision.empty()) {
        if (prec.set_str(precision, 10) != 0 || (prec.canonicalize(), prec <= 0))
            throw Error("--precision must be a positive rational");
    }
    // An explicit flag wins over the file; the file wins over the default.
    ProblemInput in = parse_input(read_input(path), prec);
    if (!precision.empty()) in.precision = prec;
    return resolve(in);
}

std::string contact_text(const ScaledPolytope& c, const std::string& g, const std::string& p)
{
    std::string s = "cont_P(" + g + ", " + p + ") = " + c.to_string();
    if (c.base.is_monomial()) {
        auto q = ExponentVec(c.value().vertices()[0]);
        s += " = Delta(x^" + to_string(q) + ")";
    }
    return s + "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Kuo-Lu and Eggers trees of quasi-ordinary polynomials and the factorization of their polars", "qo"};
    app.require_subcommand(1);
    std::string file, format = "text", precision;
    long k = 0;
    std::size_t subs = 3;
    std::string g_spec, p_spec, poly_spec;

    auto common = [&](CLI::App* sc) {
        sc->add_option("file", file, ".qo input, or - for standard input")->required();
        sc->add_option("--format", format, "text, json (and dot for tree)");
        sc->add_option("--precision", precision, "truncation order, overriding the file and QO_PRECISION");
    };
    auto* tree = app.add_subcommand("tree", "Kuo-Lu and Eggers trees");
    common(tree);
    auto* polar = app.add_subcommand("polar", "predicted factorization of the k-th polar");
    common(polar);
    polar->add_option("-k", k, "order of the derivative")->required();
    auto* contact = app.add_subcommand("contact", "P-contact of two polynomials");
    common(contact);
    contact->add_option("g", g_spec, "f, f(k), a branch label or a polynomial")->required();
    contact->add_option("p", p_spec, "f, f(k), a branch label or a polynomial")->required();
    auto* polytope = app.add_subcommand("polytope", "Newton polytope, canonical decomposition and Rond-Schober test");
    common(polytope);
    polytope->add_option("poly", poly_spec, "polynomial to inspect; f by default");
    auto* verify = app.add_subcommand("verify", "oracle suite for the k-th polar");
    common(verify);
    verify->add_option("-k", k, "order of the derivative")->required();
    verify->add_option("--subs", subs, "number of monomial substitutions")->check(CLI::Range(1, 5));

    std::vector<const char*> argv{"qo"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        Format fmt = parse_format(format);
        Problem p = load(file, precision);
        if (tree->parsed()) {
            out << render_tree(p, fmt);
        } else if (polar->parsed()) {
            if (fmt == Format::dot) throw Error("polar supports text and json output");
            out << render_polar(p, k, fmt);
        } else if (contact->parsed()) {
            auto c = p_contact(resolve_polynomial(p, g_spec), resolve_polynomial(p, p_spec));
            if (fmt == Format::json)
                out << nlohmann::json{{"g", g_spec}, {"p", p_spec}, {"contact", to_json(c)}}.dump(2) << "\n";
            else
                out << contact_text(c, g_spec, p_spec);
        } else if (polytope->parsed()) {
            auto g = poly_spec.empty() ? p.f : resolve_polynomial(p, poly_spec);
            auto delta = newton_polytope(g);
            auto dec = canonical_decomposition(delta);
            auto cert = rond_schober_reducible(g);
            if (fmt == Format::json) {
                nlohmann::json j = {{"polytope", to_json(delta)}};
                if (auto* parts = std::get_if<std::vector<ElementaryPolytope>>(&dec)) j["decomposition"] = to_string(*parts);
                else j["decomposition"] = nullptr;
                j["reducible"] = cert ? nlohmann::json{{"q", to_string(cert->q)}, {"i0", cert->i0}} : nlohmann::json(nullptr);
                out << j.dump(2) << "\n";
            } else {
                out << "Delta = " << delta.to_string() << "\n";
                if (auto* parts = std::get_if<std::vector<ElementaryPolytope>>(&dec))
                    out << "canonical decomposition: " << to_string(*parts) << "\n";
                else
                    out << "no canonical decomposition: " << std::get<NotPolygonal>(dec).reason << "\n";
                if (cert) out << "reducible (Rond-Schober): edge of inclination " << to_string(cert->q) << ", i0 = " << cert->i0 << "\n";
                else out << "Rond-Schober test: no conclusion\n";
            }
        } else if (verify->parsed()) {
            if (fmt == Format::dot) throw Error("verify supports text and json output");
            auto rep = run_verification(p, k, subs);
            out << render_verify(p, k, rep, fmt);
            if (rep.any_mismatch()) {
                err << "qo: prediction and oracle disagree\n";
                return 1;
            }
            if (rep.hypothesis_violated) {
                err << "qo: " << *rep.hypothesis_violated << "\n";
                return 2;
            }
        }
        return 0;
    } catch (const HypothesisViolated& e) {
        err << "qo: " << e.what() << "\n";
        return 2;
    } catch (const Indeterminate& e) {
        err << "qo: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "qo: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qo
