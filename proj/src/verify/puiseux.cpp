#include <algorithm>

#include "qo/error.hpp"
#include "qo/roots.hpp"
#include "qo/verify.hpp"

namespace qo {

namespace {

struct HullPoint {
    long i;
    Rational a;
    bool known;  // false: only a lower bound
};

std::vector<HullPoint> lower_hull(const std::vector<HullPoint>& pts)
{
    std::vector<HullPoint> h;
    for (const auto& p : pts) {
        while (h.size() >= 2) {
            const auto& o = h[h.size() - 2];
            const auto& m = h.back();
            // Drop m when it lies on or above the segment o-p.
            Rational cross = (m.a - o.a) * Rational(p.i - o.i) - (p.a - o.a) * Rational(m.i - o.i);
            if (cross >= 0) h.pop_back();
            else break;
        }
        h.push_back(p);
    }
    return h;
}

class Expander {
public:
    Expander(const SeriesYPoly& g, Rational precision) : g_(g), P_(std::move(precision))
    {
        W_ = Rational(g.degree() + 1) * (P_ + 1);
    }

    PuiseuxResult run()
    {
        expand(g_.truncated(W_), Series(1), std::nullopt, g_.degree());
        return std::move(out_);
    }

private:
    void emit(const Series& s, const Rational& prec, long copies, bool partial)
    {
        for (long c = 0; c < copies; ++c) out_.roots.push_back({s.truncated(prec), std::nullopt});
        if (partial) out_.partial = true;
    }

    // Multiplicity of s as an exact root of g, when g is exact.
    long exact_multiplicity(const Series& s) const
    {
        if (!g_.precision().has_value() && s.exact()) {
            long m = 0;
            while (m < g_.degree() && g_.derivative(static_cast<unsigned>(m)).evaluate(s).is_exact_zero()) ++m;
            return m;
        }
        return 0;
    }

    SeriesYPoly shift(const SeriesYPoly& gs, const Series& v) const
    {
        SeriesYPoly lin = SeriesYPoly::y(1) + SeriesYPoly::constant(v);
        SeriesYPoly acc(1);
        for (long i = gs.degree(); i >= 0; --i) acc = acc * lin + SeriesYPoly::constant(gs.coeff(static_cast<std::size_t>(i)));
        return acc.truncated(W_);
    }

    // gs(y) = g(s + y); finds the `count` roots of gs of order above gmin.
    void expand(SeriesYPoly gs, const Series& s, const std::optional<Rational>& gmin, long count)
    {
        if (count <= 0) return;
        if (gs.coeff(0).is_zero()) {
            long m = std::min(exact_multiplicity(s), count);
            if (m > 0) {
                for (long c = 0; c < m; ++c) out_.roots.push_back({s, std::nullopt});
                std::vector<Series> rest(gs.coeffs().begin() + m, gs.coeffs().end());
                gs = SeriesYPoly(1, rest);
                count -= m;
                if (count == 0) return;
            }
        }
        Rational floor_prec = gmin ? *gmin : Rational(0);
        std::vector<HullPoint> pts;
        for (long i = 0; i <= count; ++i) {
            Series c = gs.coeff(static_cast<std::size_t>(i));
            if (!c.is_zero()) pts.push_back({i, total(c.terms().begin()->first), true});
            else if (!c.exact()) pts.push_back({i, *c.precision(), false});
        }
        if (pts.empty() || pts.back().i != count || !pts.back().known) {
            emit(s, floor_prec, count, true);
            return;
        }
        auto hull = lower_hull(pts);
        // Edges right to left give increasing root orders.
        for (std::size_t e = hull.size() - 1; e-- > 0;) {
            const HullPoint &l = hull[e], &r = hull[e + 1];
            long copies = r.i - l.i;
            Rational gamma = (l.a - r.a) / Rational(copies);
            if (gmin && gamma <= *gmin) throw Error("Newton-Puiseux: edge below the current order");
            if (!r.known) {
                emit(s, floor_prec, copies, true);
                continue;
            }
            if (gamma >= P_) {
                emit(s, P_, copies, false);
                continue;
            }
            if (!l.known) {
                emit(s, gamma, copies, true);
                continue;
            }
            std::vector<Number> psi(static_cast<std::size_t>(copies + 1), Number(0));
            for (long i = l.i; i <= r.i; ++i) {
                Rational a = r.a + gamma * Rational(r.i - i);
                Number c = gs.coeff(static_cast<std::size_t>(i)).coeff(ExponentVec{a});
                psi[static_cast<std::size_t>(i - l.i)] = c;
            }
            auto split = solve_in_tower(UniPoly(psi));
            for (const auto& [c, mult] : split.roots) {
                Series v = Series::monomial(ExponentVec{gamma}, c);
                expand(shift(gs, v), s + v, gamma, static_cast<long>(mult));
            }
            for (const auto& [poly, mult] : split.unsolved) {
                for (long c = 0; c < poly.degree() * static_cast<long>(mult); ++c)
                    out_.roots.push_back({s.truncated(gamma), poly});
                out_.partial = true;
            }
        }
    }

    const SeriesYPoly& g_;
    Rational P_;
    Rational W_;
    PuiseuxResult out_;
};

}  // namespace

PuiseuxResult newton_puiseux_roots(const SeriesYPoly& g, const Rational& precision)
{
    if (g.nvars() != 1) throw Error("Newton-Puiseux needs a single variable");
    if (g.degree() < 1) throw Error("Newton-Puiseux needs positive degree");
    if (precision <= 0) throw Error("precision must be positive");
    return Expander(g, precision).run();
}

std::vector<Branch> branches_from_roots(const std::vector<PuiseuxRoot>& roots, const std::string& prefix)
{
    std::vector<bool> used(roots.size(), false);
    std::vector<Branch> out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        if (roots[i].unrepresentable)
            throw Unrepresentable("a root needs a root of " + roots[i].unrepresentable->to_string() + ", outside the configured field");
        const Series& r = roots[i].value;
        long e = r.denominator();
        for (const auto& conj : galois_orbit(r, e)) {
            bool found = false;
            for (std::size_t j = i; j < roots.size() && !found; ++j) {
                if (!used[j] && roots[j].value == conj) {
                    used[j] = true;
                    found = true;
                }
            }
            if (!found) throw Error("roots do not split into Galois orbits at this precision");
        }
        out.push_back(Branch{prefix + std::to_string(out.size() + 1), r, e});
    }
    return out;
}

SeriesYPoly branch_polynomial(const Branch& b) { return SeriesYPoly::from_roots(b.root.nvars(), galois_orbit(b)); }

std::vector<SeriesYPoly> irreducible_factors(const SeriesYPoly& g, const Rational& precision)
{
    auto np = newton_puiseux_roots(g, precision);
    std::vector<SeriesYPoly> out;
    for (const auto& b : branches_from_roots(np.roots)) {
        auto p = branch_polynomial(b);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
}

}  // namespace qo
