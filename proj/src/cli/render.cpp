#include <functional>
#include <numeric>
#include <sstream>

#include "qo/cli.hpp"

namespace qo {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

// Left-aligned columns, two spaces apart.
std::string table(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> w;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (w.size() <= i) w.push_back(0);
            w[i] = std::max(w[i], r[i].size());
        }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(w[i] - r[i].size() + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

json height_json(const Height& h)
{
    if (h.is_infinite()) return "inf";
    json a = json::array();
    for (const auto& q : h.value()) a.push_back(to_json(q));
    return a;
}

std::string monomial_string(const NewtonPolytope& p) { return "Delta(x^" + to_string(ExponentVec(p.vertices()[0])) + ")"; }

std::string contact_string(const ScaledPolytope& p)
{
    if (!p.base.is_monomial()) return p.to_string();
    if (p.factor == 1) return monomial_string(p.base);
    return p.factor.get_str() + "*" + monomial_string(p.base) + " = " + monomial_string(p.value());
}

std::string plural(std::size_t n, const std::string& one, const std::string& many) { return std::to_string(n) + " " + (n == 1 ? one : many); }

std::string polytope_string(const NewtonPolytope& p)
{
    auto dec = canonical_decomposition(p);
    if (auto* parts = std::get_if<std::vector<ElementaryPolytope>>(&dec)) return to_string(*parts);
    return p.to_string();
}

std::string vertex_name(const EggersVertex& v) { return v.is_leaf() ? v.name : "[" + v.name + "]"; }

std::string dot_escape(std::string s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

// Branches whose path passes from vertex a to its child b.
std::vector<std::size_t> branches_through(const EggersTree& e, std::size_t nbranches, int a, int b)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nbranches; ++i) {
        auto path = e.branch_path(i);
        for (std::size_t j = 0; j + 1 < path.size(); ++j)
            if (path[j] == a && path[j + 1] == b) out.push_back(i);
    }
    return out;
}

bool edge_dashed(const Problem& p, int a, int b)
{
    const auto& v = p.eggers.vertex(a);
    for (auto br : branches_through(p.eggers, p.branches.size(), a, b)) {
        auto it = v.dashed.find(br);
        if (it != v.dashed.end() && it->second) return true;
    }
    return false;
}

std::vector<int> eggers_roots(const EggersTree& e)
{
    std::vector<int> out;
    for (std::size_t i = 0; i < e.vertices().size(); ++i)
        if (e.vertices()[i].parent < 0) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> kuo_lu_roots(const KuoLuTree& t)
{
    std::vector<int> out;
    for (std::size_t i = 0; i < t.bars().size(); ++i)
        if (t.bars()[i].parent < 0) out.push_back(static_cast<int>(i));
    return out;
}

std::string tree_text(const Problem& p)
{
    const auto& t = p.tree;
    const auto& vars = p.input.vars;
    std::ostringstream os;
    std::size_t finite = 0;
    for (const auto& b : t.bars()) finite += !b.is_leaf();
    os << "Kuo-Lu tree: " << plural(t.degree(), "root", "roots") << ", " << plural(finite, "bar", "bars") << "\n";
    std::function<void(int, int)> bar = [&](int b, int depth) {
        const Bar& x = t.bar(b);
        os << std::string(static_cast<std::size_t>(2 * depth), ' ');
        if (x.is_leaf()) {
            os << t.name(b) << "  " << t.roots().roots[x.members[0]].to_string(vars) << "\n";
            return;
        }
        os << t.name(b) << "  height " << x.height.to_string() << "  m=" << x.m();
        if (!x.center.is_zero()) os << "  center " << x.center.to_string(vars);
        os << "\n";
        for (int c : x.children) bar(c, depth + 1);
    };
    for (int r : kuo_lu_roots(t)) bar(r, 1);

    os << "Eggers tree: " << plural(p.branches.size(), "branch", "branches") << "\n";
    std::function<void(int, int, bool)> vertex = [&](int v, int depth, bool dashed) {
        const auto& x = p.eggers.vertex(v);
        os << std::string(static_cast<std::size_t>(2 * depth), ' ') << (depth == 1 ? "" : dashed ? "..> " : "--> ");
        if (x.is_leaf()) {
            os << x.name << "\n";
            return;
        }
        os << vertex_name(x) << "  height " << x.height.to_string() << "  N=" << x.N << "  n=" << x.n << "\n";
        for (int c : x.children) vertex(c, depth + 1, edge_dashed(p, v, c));
    };
    for (int r : eggers_roots(p.eggers)) vertex(r, 1, false);
    return os.str();
}

std::string tree_dot(const Problem& p)
{
    const auto& t = p.tree;
    std::ostringstream os;
    os << "digraph qo {\n  node [fontname=\"monospace\"];\n";
    os << "  subgraph cluster_kuo_lu {\n    label=\"Kuo-Lu tree\";\n";
    for (std::size_t i = 0; i < t.bars().size(); ++i) {
        const Bar& x = t.bars()[i];
        int b = static_cast<int>(i);
        if (x.is_leaf())
            os << "    k" << i << " [shape=plaintext, label=\"" << dot_escape(t.name(b)) << "\"];\n";
        else
            os << "    k" << i << " [shape=box, label=\"" << t.name(b) << "\\n" << x.height.to_string() << "\"];\n";
    }
    for (std::size_t i = 0; i < t.bars().size(); ++i)
        for (int c : t.bars()[i].children) os << "    k" << i << " -> k" << c << ";\n";
    os << "  }\n  subgraph cluster_eggers {\n    label=\"Eggers tree\";\n";
    const auto& vs = p.eggers.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& x = vs[i];
        if (x.is_leaf())
            os << "    e" << i << " [shape=plaintext, label=\"" << dot_escape(x.name) << "\"];\n";
        else
            os << "    e" << i << " [shape=box, label=\"" << vertex_name(x) << "\\n" << x.height.to_string() << "\\nN=" << x.N
               << " n=" << x.n << "\"];\n";
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (int c : vs[i].children) {
            os << "    e" << i << " -> e" << c;
            if (edge_dashed(p, static_cast<int>(i), c)) os << " [style=dashed]";
            os << ";\n";
        }
    os << "  }\n}\n";
    return os.str();
}

json branches_json(const Problem& p)
{
    json a = json::array();
    for (const auto& b : p.branches) a.push_back({{"label", b.label}, {"root", to_json(b.root)}, {"denom", b.denom}});
    return a;
}

json tree_json(const Problem& p)
{
    const auto& t = p.tree;
    json bars = json::array();
    for (std::size_t i = 0; i < t.bars().size(); ++i) {
        const Bar& x = t.bars()[i];
        json members = json::array();
        for (auto m : x.members) members.push_back(t.roots().labels[m]);
        bars.push_back({{"id", i},
                        {"name", t.name(static_cast<int>(i))},
                        {"height", height_json(x.height)},
                        {"m", x.m()},
                        {"center", to_json(x.center)},
                        {"members", members},
                        {"parent", x.parent},
                        {"children", x.children}});
    }
    json verts = json::array();
    const auto& vs = p.eggers.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& x = vs[i];
        json edges = json::array();
        for (int c : x.children) edges.push_back({{"to", c}, {"dashed", edge_dashed(p, static_cast<int>(i), c)}});
        verts.push_back({{"id", i},
                         {"name", x.name},
                         {"height", height_json(x.height)},
                         {"N", x.N},
                         {"n", x.n},
                         {"bars", x.bars},
                         {"parent", x.parent},
                         {"edges", edges}});
    }
    return {{"vars", p.input.vars},
            {"degree", t.degree()},
            {"branches", branches_json(p)},
            {"kuo_lu", {{"bars", bars}}},
            {"eggers", {{"vertices", verts}}}};
}

std::string relation_string(const Problem& p, const std::string& factor, const ContactRelation& r)
{
    return "cont_P(" + p.branches[r.branch].label + ", g" + factor + ") " + (r.relation == Relation::equal ? "= " : ">= ") +
           contact_string(r.value);
}

}  // namespace

Format parse_format(const std::string& s)
{
    if (s == "text") return Format::text;
    if (s == "dot") return Format::dot;
    if (s == "json") return Format::json;
    throw Error("unknown format '" + s + "'");
}

std::string render_tree(const Problem& p, Format fmt)
{
    switch (fmt) {
    case Format::text: return tree_text(p);
    case Format::dot: return tree_dot(p);
    case Format::json: return tree_json(p).dump(2) + "\n";
    }
    return {};
}

PolarSummary summarize_polar(const Problem& p, long k)
{
    const long n = static_cast<long>(p.tree.degree());
    if (k < 1 || k >= n) throw Error("k must satisfy 1 <= k < " + std::to_string(n));
    PolarSummary s;
    s.factors = eggers_factorization(p.tree, p.eggers, k);
    s.regularity = kuo_lu_regular(p.tree, k);
    for (const auto& [v, deg] : polar_degrees(p.tree, p.eggers, k)) s.degree_sum += deg;
    if (s.regularity.regular) {
        std::vector<std::size_t> all(p.branches.size());
        std::iota(all.begin(), all.end(), 0);
        s.resultant = predict_resultant_polytope(p.tree, all, k);
    }
    if (p.branches.size() == 1) s.merle = merle_decomposition(p.tree, p.eggers, k);
    return s;
}

std::string render_polar(const Problem& p, long k, Format fmt)
{
    auto s = summarize_polar(p, k);
    const long n = static_cast<long>(p.tree.degree());
    auto degrees = polar_degrees(p.tree, p.eggers, k);
    auto prediction_of = [&](int v) -> const EggersFactorPrediction* {
        for (const auto& f : s.factors)
            if (f.vertex == v) return &f;
        return nullptr;
    };
    std::vector<std::string> failing;
    for (int b : s.regularity.failing) failing.push_back(p.tree.name(b));

    if (fmt == Format::json) {
        json rows = json::array();
        for (const auto& [v, deg] : degrees) {
            const auto& x = p.eggers.vertex(v);
            json row = {{"vertex", vertex_name(x)}, {"height", height_json(x.height)}, {"N", x.N}, {"n", x.n},
                        {"t_k", deg / x.N},         {"degree", deg}};
            if (const auto* f = prediction_of(v)) {
                json rel = json::array();
                for (const auto& r : f->relations)
                    rel.push_back({{"branch", p.branches[r.branch].label},
                                   {"relation", r.relation == Relation::equal ? "equal" : "at_least"},
                                   {"value", to_json(r.value)},
                                   {"provenance", r.provenance}});
                json wit = json::array();
                for (auto w : f->witnesses) wit.push_back(p.branches[w].label);
                row["charpoly"] = to_json(f->charpoly);
                row["self_contact"] = to_json(f->self_contact);
                row["relations"] = rel;
                row["witnesses"] = wit;
            }
            rows.push_back(row);
        }
        json out = {{"k", k},
                    {"n", n},
                    {"degree_sum", s.degree_sum},
                    {"kuo_lu_regular", s.regularity.regular},
                    {"failing_bars", failing},
                    {"factors", rows}};
        out["resultant_polytope"] = s.resultant ? to_json(*s.resultant) : json(nullptr);
        if (s.merle) {
            json mf = json::array();
            for (const auto& f : s.merle->factors)
                mf.push_back({{"i", f.i},
                              {"h", height_json(Height(f.h))},
                              {"t_k", f.t_k},
                              {"degree", f.degree},
                              {"charpoly", to_json(f.charpoly)},
                              {"self_contact", to_json(f.self_contact)},
                              {"shape", {{"a", f.shape.a}, {"b", f.shape.b}, {"d", f.shape.d}}},
                              {"deg_p0", f.deg_p0},
                              {"deg_pj", f.deg_pj},
                              {"p0", f.p0_kind}});
            out["merle"] = {{"i_k", s.merle->i_k}, {"factors", mf}};
        }
        return out.dump(2) + "\n";
    }
    if (fmt != Format::text) throw Error("polar supports text and json output");

    std::ostringstream os;
    os << "polar k=" << k << " of a degree " << n << " polynomial; Kuo-Lu " << k << "-regular: "
       << (s.regularity.regular ? "yes" : "no (" + join(failing, ", ") + ")") << "\n";
    std::vector<std::vector<std::string>> rows = {{"vertex", "height", "N", "n", "t_k", "degree", "F-", "self-contact"}};
    for (const auto& [v, deg] : degrees) {
        const auto& x = p.eggers.vertex(v);
        const auto* f = prediction_of(v);
        rows.push_back({vertex_name(x), x.height.to_string(), std::to_string(x.N), std::to_string(x.n), std::to_string(deg / x.N),
                        std::to_string(deg), f ? f->charpoly.to_string("z") : "-", f ? contact_string(f->self_contact) : "-"});
    }
    os << table(rows);
    os << "sum of degrees " << s.degree_sum << ", n-k = " << n - k << "\n";
    if (!s.factors.empty()) os << "contact relations:\n";
    for (const auto& f : s.factors) {
        std::string g = "[" + f.name + "]";
        for (const auto& r : f.relations) os << "  " << relation_string(p, g, r) << "  (" << r.provenance << ")\n";
        if (!f.witnesses.empty()) {
            std::vector<std::string> w;
            for (auto i : f.witnesses) w.push_back(p.branches[i].label);
            os << "  " << (w.size() == 1 ? w[0] : "one of " + join(w, ", ")) << " attains the self-contact of " << g << "\n";
        }
    }
    if (s.resultant) os << "Delta(Res_y(f^(" << k << "), f - T)) = " << polytope_string(*s.resultant) << "\n";
    else os << "no resultant polytope prediction: not Kuo-Lu " << k << "-regular\n";
    if (s.merle) {
        os << "Merle decomposition, i_k = " << s.merle->i_k << ":\n";
        std::vector<std::vector<std::string>> mr = {{"i", "h_i", "t_k", "degree", "F-", "(a,b,d)", "deg p_i0", "deg p_ij", "p_i0"}};
        for (const auto& f : s.merle->factors)
            mr.push_back({std::to_string(f.i), to_string(f.h), std::to_string(f.t_k), std::to_string(f.degree), f.charpoly.to_string("z"),
                          "(" + std::to_string(f.shape.a) + "," + std::to_string(f.shape.b) + "," + std::to_string(f.shape.d) + ")",
                          std::to_string(f.deg_p0), std::to_string(f.deg_pj), f.p0_kind});
        os << table(mr);
    }
    return os.str();
}

VerificationReport run_verification(const Problem& p, long k, std::size_t subs)
{
    const long n = static_cast<long>(p.tree.degree());
    if (k < 1 || k >= n) throw Error("k must satisfy 1 <= k < " + std::to_string(n));
    VerificationReport rep = verify_derivative_charpoly(p.tree, p.f, k);

    long sum = 0;
    for (const auto& [v, deg] : polar_degrees(p.tree, p.eggers, k)) sum += deg;
    rep.entries.push_back({"sum N t_k = n - k", std::to_string(sum), std::to_string(normalized_derivative(p.f, k).degree()),
                           sum == n - k ? Status::match : Status::mismatch, {}});

    std::vector<std::size_t> all(p.branches.size());
    std::iota(all.begin(), all.end(), 0);
    rep.append(verify_resultant_polytope(p.tree, p.f, all, p.f, k, default_substitutions(p.input.d(), subs)));
    if (p.input.d() == 1) rep.append(verify_higher_kuo_lu(p.tree, p.f, k, p.input.precision));
    return rep;
}

std::string render_verify(const Problem& p, long k, const VerificationReport& rep, Format fmt)
{
    auto subs_string = [](const ClaimResult& c) {
        std::vector<std::string> s;
        for (const auto& r : c.substitutions) s.push_back(to_string(ExponentVec(r)));
        return join(s, " ");
    };
    if (fmt == Format::json) {
        json entries = json::array();
        for (const auto& c : rep.entries) {
            json subs = json::array();
            for (const auto& r : c.substitutions) {
                json a = json::array();
                for (const auto& q : r) a.push_back(to_json(q));
                subs.push_back(a);
            }
            entries.push_back({{"claim", c.claim},
                               {"predicted", c.predicted},
                               {"oracle", c.oracle},
                               {"status", to_string(c.status)},
                               {"substitutions", subs}});
        }
        json out = {{"k", k}, {"n", p.tree.degree()}, {"entries", entries}, {"notices", rep.notices}};
        out["hypothesis_violated"] = rep.hypothesis_violated ? json(*rep.hypothesis_violated) : json(nullptr);
        return out.dump(2) + "\n";
    }
    if (fmt != Format::text) throw Error("verify supports text and json output");
    std::ostringstream os;
    os << "verify k=" << k << " of a degree " << p.tree.degree() << " polynomial\n";
    std::vector<std::vector<std::string>> rows = {{"status", "claim", "predicted", "oracle", "r"}};
    for (const auto& c : rep.entries) rows.push_back({to_string(c.status), c.claim, c.predicted, c.oracle, subs_string(c)});
    os << table(rows);
    for (const auto& n : rep.notices) os << "note: " << n << "\n";
    if (rep.hypothesis_violated) os << *rep.hypothesis_violated << "\n";
    return os.str();
}

}  // namespace qo
