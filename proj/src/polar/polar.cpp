#include "qo/polar.hpp"

#include <algorithm>

#include "qo/error.hpp"
#include "qo/resultant.hpp"

namespace qo {

namespace {

struct SeriesOps {
    std::size_t d;
    Series zero() const { return Series(d); }
    Series one() const { return Series::constant(d, Number(1)); }
    bool is_zero(const Series& s) const { return s.is_exact_zero(); }
    Series div_exact(const Series&, const Series&) const { throw Error("exact division of series is not supported"); }
};

const EggersVertex& finite_vertex(const EggersTree& e, int v)
{
    const EggersVertex& x = e.vertex(v);
    if (x.is_leaf()) throw Error("vertex " + x.name + " has infinite height");
    return x;
}

}  // namespace

SeriesYPoly normalized_derivative(const SeriesYPoly& f, long k)
{
    if (k < 1 || k >= f.degree())
        throw Error("k = " + std::to_string(k) + " out of range 1.." + std::to_string(f.degree() - 1));
    return f.normalized_derivative(static_cast<int>(k));
}

Series resultant_y(const SeriesYPoly& g, const SeriesYPoly& p)
{
    if (g.is_zero() || p.is_zero()) throw Error("resultant of a zero polynomial");
    if (g.nvars() != p.nvars()) throw Error("resultant of polynomials in different variables");
    SeriesOps ops{g.nvars()};
    return berkowitz_determinant(sylvester_matrix(g.coeffs(), p.coeffs(), ops), ops);
}

ScaledPolytope p_contact(const SeriesYPoly& g, const SeriesYPoly& p)
{
    if (g.degree() < 1 || p.degree() < 1) throw Error("P-contact needs polynomials of positive degree");
    Series r = resultant_y(g, p);
    if (r.is_zero()) {
        if (r.exact()) throw Error("P-contact of polynomials with a common factor");
        throw Indeterminate("resultant vanishes within precision");
    }
    return ScaledPolytope{Rational(1, g.degree() * p.degree()), newton_polytope(r)};
}

ExponentVec branch_q(const KuoLuTree& t, int bar, const std::vector<std::size_t>& branches)
{
    std::vector<std::size_t> roots;
    for (std::size_t b : branches) {
        auto r = roots_of_branch(t.roots(), b);
        roots.insert(roots.end(), r.begin(), r.end());
    }
    return characteristic_from_roots(t, bar, roots).q;
}

ScaledPolytope branch_contact(const KuoLuTree& t, int bar, std::size_t branch)
{
    auto roots = roots_of_branch(t.roots(), branch);
    ExponentVec q = characteristic_from_roots(t, bar, roots).q;
    return ScaledPolytope{Rational(1, static_cast<long>(roots.size())), monomial_polytope(q)};
}

bool branch_meets(const KuoLuTree& t, int bar, std::size_t branch)
{
    for (std::size_t r : t.bar(bar).members)
        if (t.roots().branch_of[r] == branch) return true;
    return false;
}

ScaledPolytope self_contact(const KuoLuTree& t, const EggersVertex& v)
{
    if (v.is_leaf()) throw Error("self-contact of a vertex of infinite height");
    int b = v.bars.at(0);
    std::optional<ScaledPolytope> out;
    for (std::size_t i = 0; i < t.roots().branches.size(); ++i) {
        if (!branch_meets(t, b, i)) continue;
        ScaledPolytope c = branch_contact(t, b, i);
        if (!out) out = c;
        else if (out->value() != c.value())
            throw Error("self-contact of " + v.name + " depends on the branch: " + out->to_string() + " vs " + c.to_string());
    }
    if (!out) throw Error("no branch meets " + v.name);
    return *out;
}

NewtonPolytope predict_resultant_polytope(const KuoLuTree& t, const std::vector<std::size_t>& p_branches, long k)
{
    if (p_branches.empty()) throw Error("empty factor");
    auto report = kuo_lu_regular(t, k);
    if (!report.regular)
        throw HypothesisViolated("not " + std::to_string(k) + "-regular at bar " + t.name(report.failing.front()));
    auto counts = bar_counts(t, k);
    std::vector<ElementaryPolytope> parts;
    for (std::size_t b = 0; b < t.bars().size(); ++b) {
        long tk = counts[b].t_k;
        if (tk == 0) continue;
        if (t.bars()[b].is_leaf()) throw Error("positive t_k at a leaf");
        ExponentVec q = branch_q(t, static_cast<int>(b), p_branches);
        parts.push_back(ElementaryPolytope{scale(q, Rational(tk)), Rational(tk)});
    }
    return sum_of(t.roots().nvars + 1, parts);
}

std::vector<std::pair<int, long>> polar_degrees(const KuoLuTree& t, const EggersTree& e, long k)
{
    auto counts = bar_counts(t, k);
    std::vector<std::pair<int, long>> out;
    for (std::size_t v = 0; v < e.vertices().size(); ++v) {
        const auto& x = e.vertices()[v];
        if (x.is_leaf()) continue;
        out.emplace_back(static_cast<int>(v), x.N * counts[static_cast<std::size_t>(x.bars[0])].t_k);
    }
    return out;
}

std::vector<EggersFactorPrediction> eggers_factorization(const KuoLuTree& t, const EggersTree& e, long k)
{
    auto counts = bar_counts(t, k);
    std::vector<EggersFactorPrediction> out;
    for (std::size_t vi = 0; vi < e.vertices().size(); ++vi) {
        const auto& v = e.vertices()[vi];
        if (v.is_leaf()) continue;
        int b = v.bars[0];
        long tk = counts[static_cast<std::size_t>(b)].t_k;
        if (tk == 0) continue;
        UniPoly F = characteristic_of_f(t, b).G;
        auto split = derivative_split(F, k);
        EggersFactorPrediction p{static_cast<int>(vi), v.name, v.N * tk, split.minus, self_contact(t, v), {}, {}};
        NewtonPolytope sc = p.self_contact.value();
        for (std::size_t i = 0; i < t.roots().branches.size(); ++i) {
            ScaledPolytope c = branch_contact(t, b, i);
            switch (polytope_order(c.value(), sc)) {
            case PolytopeOrder::less:
                p.relations.push_back({i, Relation::equal, c, "theorem"});
                break;
            case PolytopeOrder::equal:
                if (split.regular) p.relations.push_back({i, Relation::equal, p.self_contact, "theorem (k-regular clause)"});
                else p.relations.push_back({i, Relation::at_least, p.self_contact, "theorem"});
                p.witnesses.push_back(i);
                break;
            default:
                throw Error("contact of branch " + t.roots().branches[i].label + " exceeds the self-contact of " + v.name);
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

MerlePrediction merle_decomposition(const KuoLuTree& t, const EggersTree& e, long k)
{
    const RootSet& rs = t.roots();
    if (rs.branches.size() != 1) throw Error("input is reducible; use the Eggers factorization");
    const long n = static_cast<long>(t.degree());
    if (n < 2) throw Error("Merle decomposition needs degree at least 2");
    if (k < 1 || k >= n) throw Error("k = " + std::to_string(k) + " out of range 1.." + std::to_string(n - 1));

    MerlePrediction m;
    std::vector<int> chain;
    for (int v : e.branch_path(0))
        if (!e.vertex(v).is_leaf()) chain.push_back(v);
    for (int v : chain) {
        m.exponents.push_back(e.vertex(v).height.value());
        m.n.push_back(e.vertex(v).n);
    }
    const std::size_t s = chain.size();
    m.e.assign(s + 1, 1);
    for (std::size_t i = s; i-- > 0;) m.e[i] = m.e[i + 1] * m.n[i];
    if (m.e[0] != n) throw Error("ramification indices do not multiply to the degree");

    for (std::size_t i = 1; i <= s; ++i)
        if (m.e[i] <= k && k < m.e[i - 1]) m.i_k = static_cast<long>(i);

    auto counts = bar_counts(t, k);
    long prefix = 1;  // n_1 ... n_{i-1}
    for (std::size_t i = 1; i <= static_cast<std::size_t>(m.i_k); ++i) {
        const EggersVertex& v = finite_vertex(e, chain[i - 1]);
        int b = v.bars[0];
        long ni = m.n[i - 1], ei = m.e[i];
        long tk = counts[static_cast<std::size_t>(b)].t_k;
        long expected = k <= ei ? (ni - 1) * k : m.e[i - 1] - k;
        if (tk != expected) throw Error("t_k at " + v.name + " disagrees with the irreducible case formula");
        if (v.N != prefix) throw Error("class size at " + v.name + " is not n_1...n_{i-1}");
        MerleFactor f;
        f.i = static_cast<int>(i);
        f.h = m.exponents[i - 1];
        f.n_i = ni;
        f.e_i = ei;
        f.t_k = tk;
        f.degree = prefix * tk;
        f.charpoly = derivative_split(characteristic_of_f(t, b).G, k).minus;
        f.self_contact = self_contact(t, v);
        f.shape = al_derivative_shape(ni, ei, k);
        f.deg_p0 = f.shape.a * prefix;
        f.deg_pj = prefix * ni;
        f.p0_kind = f.shape.a == 0 ? "trivial" : f.shape.a == 1 ? "quasi-ordinary" : "not necessarily quasi-ordinary";
        m.factors.push_back(std::move(f));
        prefix *= ni;
    }
    return m;
}

}  // namespace qo
