#include "qo/verify.hpp"

#include <algorithm>
#include <set>

#include "qo/error.hpp"
#include "qo/resultant.hpp"

namespace qo {

namespace {

struct SeriesOps {
    std::size_t d;
    Series zero() const { return Series(d); }
    Series one() const { return Series::constant(d, Number(1)); }
    bool is_zero(const Series& s) const { return s.is_exact_zero(); }
};

std::string r_string(const std::vector<Rational>& r) { return to_string(ExponentVec(r)); }

ClaimResult claim(std::string name, std::string predicted, std::string oracle, Status s)
{
    return ClaimResult{std::move(name), std::move(predicted), std::move(oracle), s, {}};
}

std::string poly_string(const UniPoly& p) { return p.to_string("z"); }

// Finite bars with their heights.
std::set<ExponentVec> finite_heights(const KuoLuTree& t)
{
    std::set<ExponentVec> hs;
    for (const auto& b : t.bars())
        if (!b.is_leaf()) hs.insert(b.height.value());
    return hs;
}

}  // namespace

std::string to_string(Status s)
{
    switch (s) {
    case Status::match: return "match";
    case Status::mismatch: return "mismatch";
    default: return "inconclusive";
    }
}

bool VerificationReport::any_mismatch() const
{
    return std::any_of(entries.begin(), entries.end(), [](const ClaimResult& c) { return c.status == Status::mismatch; });
}

bool VerificationReport::all_match() const
{
    return !hypothesis_violated && !entries.empty() &&
           std::all_of(entries.begin(), entries.end(), [](const ClaimResult& c) { return c.status == Status::match; });
}

void VerificationReport::append(const VerificationReport& other)
{
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    notices.insert(notices.end(), other.notices.begin(), other.notices.end());
    if (other.hypothesis_violated && !hypothesis_violated) hypothesis_violated = other.hypothesis_violated;
}

VerificationReport verify_derivative_charpoly(const KuoLuTree& t, const SeriesYPoly& f, long k)
{
    VerificationReport rep;
    const long n = f.degree();
    SeriesYPoly g = normalized_derivative(f, k);
    const Number norm(factorial(static_cast<unsigned>(n - k)) / factorial(static_cast<unsigned>(n)));
    auto counts = bar_counts(t, k);
    for (int b : t.bfs()) {
        const Bar& bar = t.bar(b);
        if (bar.is_leaf() || static_cast<long>(bar.m()) < k) continue;
        std::string id = "charpoly[" + t.name(b) + ",k=" + std::to_string(k) + "]";
        auto F = characteristic_of_f(t, b);
        UniPoly predG = poly_derivative(F.G, static_cast<int>(k)).scaled(norm);
        ExponentVec predq = sub(F.q, scale(bar.height.value(), Rational(k)));
        std::string pred = poly_string(predG) + " x^" + to_string(predq);
        try {
            auto r = characteristic_data(g, bar);
            if (auto* inc = std::get_if<Incompatible>(&r)) {
                rep.entries.push_back(claim(id, pred, "incompatible: " + inc->reason, Status::mismatch));
                continue;
            }
            const auto& got = std::get<CharacteristicData>(r);
            std::string oracle = poly_string(got.G) + " x^" + to_string(got.q);
            bool ok = got.G == predG && got.q == predq;
            rep.entries.push_back(claim(id, pred, oracle, ok ? Status::match : Status::mismatch));
            long nk = counts[static_cast<std::size_t>(b)].n_k;
            rep.entries.push_back(claim("degree[" + t.name(b) + ",k=" + std::to_string(k) + "]", std::to_string(nk),
                                        std::to_string(got.G.degree()), got.G.degree() == nk ? Status::match : Status::mismatch));
        } catch (const Indeterminate& e) {
            rep.entries.push_back(claim(id, pred, e.what(), Status::inconclusive));
        }
    }
    return rep;
}

std::vector<std::vector<Rational>> default_substitutions(std::size_t d, std::size_t count)
{
    std::vector<std::vector<Rational>> out;
    out.emplace_back(d, Rational(1));
    for (long m : {2, 3})
        for (std::size_t i = 0; i < d && d > 1; ++i) {
            if (d == 2) {
                // (1,2), (2,1), (1,3), (3,1)
                std::vector<Rational> r(d, Rational(1));
                r[1 - i] = m;
                out.push_back(r);
            } else {
                std::vector<Rational> r(d, Rational(1));
                r[i] = m;
                out.push_back(r);
            }
        }
    if (out.size() > count) out.resize(count);
    return out;
}

bool separates_heights(const KuoLuTree& t, const std::vector<Rational>& r)
{
    std::set<Rational> seen;
    for (const auto& h : finite_heights(t))
        if (!seen.insert(dot(r, h)).second) return false;
    return true;
}

VerificationReport verify_resultant_polytope(const KuoLuTree& t, const SeriesYPoly& f, const std::vector<std::size_t>& p_branches,
                                             const SeriesYPoly& p, long k, const std::vector<std::vector<Rational>>& batch)
{
    VerificationReport rep;
    NewtonPolytope predicted;
    try {
        predicted = predict_resultant_polytope(t, p_branches, k);
    } catch (const HypothesisViolated& e) {
        rep.hypothesis_violated = e.what();
        rep.notices.push_back(std::string(e.what()) + "; no prediction to check");
        return rep;
    }
    std::string pname;
    for (std::size_t b : p_branches) pname += (pname.empty() ? "" : "*") + t.roots().branches[b].label;
    SeriesYPoly g = normalized_derivative(f, k);
    const std::size_t N = static_cast<std::size_t>(g.degree());

    for (const auto& r : batch) {
        std::string id = "resultant[" + pname + ",k=" + std::to_string(k) + ",r=" + r_string(r) + "]";
        if (!separates_heights(t, r)) {
            rep.notices.push_back(id + ": skipped, r does not separate the bar heights");
            continue;
        }
        NewtonPolytope proj = project(predicted, r);
        Rational amax(0);
        for (const auto& v : proj.vertices()) amax = std::max(amax, v[0]);
        const Rational prec = amax + 1;
        SeriesYPoly gr = g.substitute_monomial(r).truncated(prec);
        SeriesYPoly pr = p.substitute_monomial(r).truncated(prec);

        // Res_y(g, p - T) = det(p(C) - T) for the companion matrix C of the monic g.
        SeriesOps ops{1};
        Matrix<Series> C(N, std::vector<Series>(N, ops.zero()));
        for (std::size_t i = 0; i + 1 < N; ++i) C[i + 1][i] = ops.one();
        for (std::size_t i = 0; i < N; ++i) C[i][N - 1] = -gr.coeff(i);
        Matrix<Series> M(N, std::vector<Series>(N, ops.zero()));
        for (long j = pr.degree(); j >= 0; --j) {
            Matrix<Series> next(N, std::vector<Series>(N, ops.zero()));
            for (std::size_t a = 0; a < N; ++a)
                for (std::size_t c = 0; c < N; ++c) {
                    Series s = ops.zero();
                    for (std::size_t b = 0; b < N; ++b)
                        if (!M[a][b].is_zero() && !C[b][c].is_zero()) s = s + M[a][b] * C[b][c];
                    next[a][c] = s.truncated(prec);
                }
            for (std::size_t a = 0; a < N; ++a) next[a][a] = next[a][a] + pr.coeff(static_cast<std::size_t>(j));
            M = std::move(next);
        }
        auto cp = berkowitz_charpoly(M, ops);  // cp[i] multiplies T^{N-i}

        std::vector<Point> known;
        bool outside = false;
        for (std::size_t i = 0; i <= N; ++i) {
            Series c = cp[i].truncated(prec);
            if (c.is_zero()) continue;
            Point pt{total(c.terms().begin()->first), Rational(static_cast<long>(N - i))};
            if (!proj.contains(pt)) outside = true;
            known.push_back(pt);
        }
        NewtonPolytope oracle = NewtonPolytope::from_points(2, known);
        ClaimResult cr{id, proj.to_string(), oracle.to_string(), Status::match, {r}};
        if (outside) {
            cr.status = Status::mismatch;
        } else if (oracle != proj) {
            // Strictly inside: a cancellation this r cannot see past.
            cr.status = Status::inconclusive;
            cr.oracle += " (cancellation)";
        }
        rep.entries.push_back(std::move(cr));
    }
    return rep;
}

VerificationReport verify_higher_kuo_lu(const KuoLuTree& t, const SeriesYPoly& f, long k, const Rational& precision)
{
    VerificationReport rep;
    const RootSet& rs = t.roots();
    if (rs.nvars != 1) throw Error("the higher Kuo-Lu check needs a single variable");
    const long n = f.degree();
    std::string ks = ",k=" + std::to_string(k) + "]";
    Rational prec = precision;
    for (const auto& h : finite_heights(t)) prec = std::max(prec, Rational(h[0] + 1));
    auto np = newton_puiseux_roots(normalized_derivative(f, k), prec);
    std::vector<Series> betas;
    bool stubs = false;
    for (const auto& r : np.roots) {
        if (r.unrepresentable) stubs = true;
        else betas.push_back(r.value);
    }
    rep.entries.push_back(claim("root count[f" + ks, std::to_string(n - k), std::to_string(np.roots.size()),
                                static_cast<long>(np.roots.size()) == n - k ? Status::match : Status::mismatch));
    if (stubs || np.partial) rep.notices.push_back("some roots of the polar are unrepresentable or partial");

    auto counts = bar_counts(t, k);
    // in[b][j]: beta_j lies in bar b; nothing on indeterminate contact.
    std::vector<std::vector<int>> in(t.bars().size(), std::vector<int>(betas.size(), 0));
    bool undecided = false;
    auto order = [&](std::size_t a, std::size_t j) -> std::optional<Height> {
        try {
            auto c = contact(rs.roots[a], betas[j]);
            if (auto* h = std::get_if<Height>(&c)) return *h;
        } catch (const Indeterminate&) {
        }
        return std::nullopt;
    };
    for (std::size_t b = 0; b < t.bars().size(); ++b) {
        const Bar& bar = t.bars()[b];
        for (std::size_t j = 0; j < betas.size(); ++j) {
            auto o = order(bar.members[0], j);
            if (!o) {
                undecided = true;
                in[b][j] = -1;
            } else {
                in[b][j] = leq(bar.height, *o) ? 1 : 0;
            }
        }
    }
    auto status_of = [&](bool ok) { return undecided || stubs ? (ok ? Status::match : Status::inconclusive) : (ok ? Status::match : Status::mismatch); };

    std::vector<int> owners(betas.size(), 0);
    for (std::size_t b = 0; b < t.bars().size(); ++b) {
        if (!counts[b].in_T_k) continue;
        const Bar& bar = t.bars()[b];
        long inside = 0, interior = 0;
        std::vector<std::size_t> interior_idx;
        for (std::size_t j = 0; j < betas.size(); ++j) {
            if (in[b][j] != 1) continue;
            ++inside;
            bool deeper = false;
            for (int c : bar.children)
                if (counts[static_cast<std::size_t>(c)].in_T_k && in[static_cast<std::size_t>(c)][j] == 1) deeper = true;
            if (!deeper) {
                ++interior;
                interior_idx.push_back(j);
                ++owners[j];
            }
        }
        std::string nm = t.name(static_cast<int>(b));
        rep.entries.push_back(claim("(i)[" + nm + ks, std::to_string(counts[b].n_k), std::to_string(inside), status_of(inside == counts[b].n_k)));
        rep.entries.push_back(claim("(ii)[" + nm + ks, std::to_string(counts[b].t_k), std::to_string(interior), status_of(interior == counts[b].t_k)));
        if (bar.is_leaf() || interior_idx.empty()) continue;
        bool regular = is_k_regular(characteristic_of_f(t, static_cast<int>(b)).G, k);
        std::optional<std::string> witness;
        bool all_equal = true;
        for (std::size_t a : bar.members)
            for (std::size_t j : interior_idx) {
                auto o = order(a, j);
                if (!o) {
                    all_equal = false;
                    continue;
                }
                if (*o != bar.height) all_equal = false;
                if (lt(bar.height, *o) && !witness)
                    witness = "O(" + rs.labels[a] + ", beta" + std::to_string(j + 1) + ") = " + o->to_string() + " > " + bar.height.to_string();
            }
        if (regular)
            rep.entries.push_back(claim("(iv)[" + nm + ks, "O(alpha,beta) = " + bar.height.to_string(), all_equal ? "all equal" : "some differ",
                                        status_of(all_equal)));
        else
            rep.entries.push_back(claim("(iv) otherwise[" + nm + ks, "exists O(alpha,beta) > " + bar.height.to_string(),
                                        witness ? *witness : "no witness", status_of(witness.has_value())));
    }
    bool unique = std::all_of(owners.begin(), owners.end(), [](int c) { return c == 1; });
    rep.entries.push_back(claim("(iii)[f" + ks, "each root in one interior", unique ? "yes" : "no", status_of(unique)));

    if (kuo_lu_regular(t, k).regular) {
        bool ok = true, known = true;
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < betas.size(); ++j) {
                auto o = order(i, j);
                if (!o) {
                    known = false;
                    continue;
                }
                bool found = false;
                for (std::size_t l = 0; l < rs.size() && !found; ++l)
                    if (l != i && rs.contact_of(i, l) == *o) found = true;
                if (!found) ok = false;
            }
        rep.entries.push_back(claim("kuo-lu corollary[f" + ks, "O(alpha_i,beta) = O(alpha_i,alpha_j)", ok ? "holds" : "fails",
                                    !known && ok ? Status::inconclusive : ok ? Status::match : Status::mismatch));
    }
    return rep;
}

}  // namespace qo
