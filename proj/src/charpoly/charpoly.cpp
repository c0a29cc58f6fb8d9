#include "qo/charpoly.hpp"

#include <algorithm>
#include <map>

#include "qo/error.hpp"

namespace qo {

namespace {

// Fractional series with coefficients in K[z].
struct ZSeries {
    std::map<ExponentVec, UniPoly, GradedLess> terms;
    std::optional<Rational> precision;

    void add_term(const ExponentVec& e, const UniPoly& p)
    {
        if (precision && total(e) >= *precision) return;
        if (p.is_zero()) return;
        auto [it, inserted] = terms.emplace(e, p);
        if (!inserted) {
            it->second = it->second + p;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    std::optional<Rational> order() const
    {
        if (!terms.empty()) return total(terms.begin()->first);
        return precision;
    }
};

std::optional<Rational> min_opt(const std::optional<Rational>& a, const std::optional<Rational>& b)
{
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? a : b;
}

std::optional<Rational> plus_opt(const std::optional<Rational>& a, const std::optional<Rational>& b)
{
    if (!a || !b) return std::nullopt;
    return Rational(*a + *b);
}

ZSeries multiply(const ZSeries& a, const ZSeries& b)
{
    ZSeries r;
    if ((a.terms.empty() && !a.precision) || (b.terms.empty() && !b.precision)) return r;
    r.precision = min_opt(plus_opt(a.precision, b.order()), plus_opt(b.precision, a.order()));
    for (const auto& [ea, pa] : a.terms)
        for (const auto& [eb, pb] : b.terms) r.add_term(add(ea, eb), pa * pb);
    return r;
}

ZSeries from_series(const Series& s)
{
    ZSeries r;
    r.precision = s.precision();
    for (const auto& [e, c] : s.terms()) r.add_term(e, UniPoly(c));
    return r;
}

ZSeries sum(const ZSeries& a, const ZSeries& b)
{
    ZSeries r;
    r.precision = min_opt(a.precision, b.precision);
    for (const auto& [e, p] : a.terms) r.add_term(e, p);
    for (const auto& [e, p] : b.terms) r.add_term(e, p);
    return r;
}

}  // namespace

CharResult characteristic_data(const SeriesYPoly& g, const Series& lambda, const ExponentVec& h)
{
    if (g.is_zero()) throw Error("characteristic data of the zero polynomial");
    ZSeries y = from_series(lambda);
    y.add_term(h, UniPoly::x());
    ZSeries acc;
    for (long i = g.degree(); i >= 0; --i) acc = sum(multiply(acc, y), from_series(g.coeff(static_cast<std::size_t>(i))));
    if (acc.terms.empty()) throw Indeterminate("substituted polynomial vanishes within precision");
    const auto& [q, G] = *acc.terms.begin();
    for (const auto& [e, p] : acc.terms)
        if (!leq(q, e)) return Incompatible{"no exponent dominates: " + to_string(q) + " and " + to_string(e)};
    return CharacteristicData{G, q};
}

CharResult characteristic_data(const SeriesYPoly& g, const Bar& b)
{
    if (b.is_leaf()) throw Error("characteristic data needs a bar of finite height");
    return characteristic_data(g, b.center, b.height.value());
}

CharacteristicData characteristic_from_roots(const KuoLuTree& t, int bar, const std::vector<std::size_t>& roots)
{
    const Bar& B = t.bar(bar);
    if (B.is_leaf()) throw Error("characteristic data needs a bar of finite height");
    const RootSet& rs = t.roots();
    const ExponentVec& h = B.height.value();
    const std::size_t beta = B.members[0];
    UniPoly G(Number(1));
    ExponentVec q = zero_exponent(rs.nvars);
    for (std::size_t a : roots) {
        bool inside = std::find(B.members.begin(), B.members.end(), a) != B.members.end();
        if (inside) {
            Number lc = rs.roots[a].coeff(h);
            G = G * UniPoly(std::vector<Number>{-lc, Number(1)});
            q = add(q, h);
        } else {
            auto id = initial_data(rs.roots[beta] - rs.roots[a]);
            const auto& it = std::get<InitialTerm>(id);
            G = G.scaled(it.coeff);
            q = add(q, it.order);
        }
    }
    return CharacteristicData{G, q};
}

std::vector<std::size_t> roots_of_branch(const RootSet& rs, std::size_t branch)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rs.size(); ++i)
        if (rs.branch_of[i] == branch) out.push_back(i);
    return out;
}

CharacteristicData characteristic_of_f(const KuoLuTree& t, int bar)
{
    std::vector<std::size_t> all(t.degree());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return characteristic_from_roots(t, bar, all);
}

RegularitySplit derivative_split(const UniPoly& F, long k)
{
    if (k < 1 || k >= F.degree())
        throw Error("k = " + std::to_string(k) + " out of range for degree " + std::to_string(F.degree()));
    UniPoly plus(Number(1));
    for (const auto& [m, S] : squarefree_decomposition(F))
        if (static_cast<long>(m) > k) plus = plus * S.pow(m - static_cast<unsigned>(k));
    UniPoly Dk = poly_derivative(F, static_cast<int>(k));
    UniPoly minus = exact_div(Dk, plus).monic();
    RegularitySplit r{plus.monic(), minus, false};
    r.regular = gcd(F, minus).degree() == 0;
    return r;
}

bool is_k_regular(const UniPoly& F, long k)
{
    if (k < 1) throw Error("k must be positive");
    if (F.degree() <= k) return true;
    return derivative_split(F, k).regular;
}

RegularityReport kuo_lu_regular(const KuoLuTree& t, long k)
{
    RegularityReport r;
    for (std::size_t b = 0; b < t.bars().size(); ++b) {
        if (t.bars()[b].is_leaf()) continue;
        if (!is_k_regular(characteristic_of_f(t, static_cast<int>(b)).G, k)) {
            r.regular = false;
            r.failing.push_back(static_cast<int>(b));
        }
    }
    return r;
}

ALShape al_derivative_shape(long n, long e, long k)
{
    if (n < 1 || e < 1) throw Error("n and e must be positive");
    if (k < 1 || k >= e * n) throw Error("k = " + std::to_string(k) + " out of range 1.." + std::to_string(e * n - 1));
    ALShape s;
    s.a = ((-k) % n + n) % n;
    s.b = std::max(e - k, 0L);
    s.d = std::min(e, k) - (k + n - 1) / n;
    return s;
}

std::optional<ALShape> observed_al_shape(const UniPoly& D, long n, const Number& c)
{
    if (D.is_zero()) return std::nullopt;
    ALShape s;
    s.a = static_cast<long>(D.low_order());
    UniPoly rest = exact_div(D, UniPoly::monomial(Number(1), static_cast<std::size_t>(s.a)));
    std::vector<Number> base(static_cast<std::size_t>(n + 1), Number(0));
    base[0] = -c;
    base[static_cast<std::size_t>(n)] = Number(1);
    UniPoly zc(base);
    for (;;) {
        auto [quo, rem] = divmod(rest, zc);
        if (!rem.is_zero()) break;
        rest = quo;
        ++s.b;
    }
    // rest must be H(z^n) with H squarefree, H(0) != 0, H(c) != 0.
    if (!has_power_shape(rest, n) || rest.low_order() != 0) return std::nullopt;
    std::vector<Number> h;
    for (long i = 0; i <= rest.degree(); i += n) h.push_back(rest.coeff(static_cast<std::size_t>(i)));
    UniPoly H(h);
    if (H.degree() > 0 && gcd(H, H.derivative(1)).degree() > 0) return std::nullopt;
    if (H(c).is_zero()) return std::nullopt;
    s.d = H.degree();
    return s;
}

bool has_power_shape(const UniPoly& G, long n)
{
    if (G.is_zero()) return true;
    long j = static_cast<long>(G.low_order());
    for (long i = j; i <= G.degree(); ++i)
        if (!G.coeff(static_cast<std::size_t>(i)).is_zero() && (i - j) % n != 0) return false;
    return true;
}

}  // namespace qo
