#include "properties.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace qo::props {

namespace {

using Rng = std::mt19937;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Number random_number(Rng& rng, bool allow_zero = false)
{
    while (true) {
        Rational q(uniform(rng, -5, 5), uniform(rng, 1, 3));
        q.canonicalize();
        if (q == 0 && !allow_zero) continue;
        switch (uniform(rng, 0, 5)) {
        case 0: return Number(Cyclotomic::zeta(3, uniform(rng, 1, 2))) * Number(q);
        case 1: return Number(Cyclotomic::zeta(4)) * Number(q) + Number(uniform(rng, 0, 2));
        default: return Number(q);
        }
    }
}

UniPoly random_unipoly(Rng& rng, long lo, long hi)
{
    long deg = uniform(rng, lo, hi);
    std::vector<Number> c;
    for (long i = 0; i < deg; ++i) c.push_back(random_number(rng, true));
    c.push_back(random_number(rng));
    return UniPoly(std::move(c));
}

std::string str(const UniPoly& p) { return p.to_string("z"); }

ExponentVec random_exponent(Rng& rng, std::size_t d, long den, long lo, long hi)
{
    ExponentVec e;
    for (std::size_t i = 0; i < d; ++i) {
        Rational q(uniform(rng, lo, hi), den);
        q.canonicalize();
        e.push_back(q);
    }
    return e;
}

SeriesYPoly random_ypoly(Rng& rng)
{
    long deg = uniform(rng, 0, 2);
    std::vector<Series> c;
    for (long i = 0; i <= deg; ++i) {
        Series s(2);
        for (long t = uniform(rng, 1, 3); t > 0; --t) s.add_term(random_exponent(rng, 2, 2, 0, 6), random_number(rng));
        if (s.is_zero()) s = Series::constant(2, Number(1));
        c.push_back(s);
    }
    return SeriesYPoly(2, std::move(c));
}

struct RandomTree {
    std::vector<Branch> branches;
    RootSet roots;
    KuoLuTree tree;
    EggersTree eggers;
};

std::optional<RandomTree> random_tree(std::uint32_t seed)
{
    auto br = random_branches(seed);
    if (br.empty()) return std::nullopt;
    try {
        auto rs = expand_roots(br);
        auto t = build_kuo_lu(rs);
        auto e = build_eggers(t);
        return RandomTree{br, rs, t, e};
    } catch (const Error&) {
        return std::nullopt;
    }
}

// Finite bars B with a finite child B'.
std::vector<std::pair<int, int>> chain_pairs(const KuoLuTree& t)
{
    std::vector<std::pair<int, int>> out;
    for (std::size_t b = 0; b < t.bars().size(); ++b)
        for (int c : t.bars()[b].children)
            if (!t.bar(c).is_leaf()) out.emplace_back(static_cast<int>(b), c);
    return out;
}

void check_power_shape(Outcome& o, const UniPoly& G, long n, bool irreducible, const std::string& where)
{
    ++o.cases;
    if (!has_power_shape(G, n)) {
        o.fail(where + ": " + str(G) + " is not z^k H(z^" + std::to_string(n) + ")");
        return;
    }
    if (!irreducible) return;
    UniPoly m = G.monic();
    if (m == UniPoly::monomial(Number(1), static_cast<std::size_t>(m.degree()))) return;
    auto sq = squarefree_decomposition(m);
    bool ok = sq.size() == 1 && sq.begin()->second.degree() == n;
    if (ok) {
        const UniPoly& s = sq.begin()->second;
        for (long i = 1; i < n; ++i) ok = ok && s.coeff(static_cast<std::size_t>(i)).is_zero();
        ok = ok && !s.coeff(0).is_zero();
    }
    if (!ok) o.fail(where + ": irreducible factor gives " + str(G) + ", not const (z^n - c)^l");
}

void check_chain(Outcome& o, const KuoLuTree& t, const SeriesYPoly& p, std::size_t branch, const std::string& label)
{
    for (auto [b, c] : chain_pairs(t)) {
        auto lo = characteristic_data(p, t.bar(b));
        auto hi = characteristic_data(p, t.bar(c));
        ++o.cases;
        if (!std::holds_alternative<CharacteristicData>(lo) || !std::holds_alternative<CharacteristicData>(hi)) {
            o.fail(label + ": factor incompatible with " + t.name(b) + " or " + t.name(c));
            continue;
        }
        long count = 0;
        for (auto m : t.bar(c).members) count += t.roots().branch_of[m] == branch;
        ExponentVec lhs = sub(std::get<CharacteristicData>(hi).q, std::get<CharacteristicData>(lo).q);
        ExponentVec rhs = scale(sub(t.bar(c).height.value(), t.bar(b).height.value()), Rational(count));
        if (lhs != rhs)
            o.fail(label + " at " + t.name(b) + " > " + t.name(c) + ": increment " + to_string(lhs) + " vs " + to_string(rhs));
    }
}

}  // namespace

std::vector<Branch> random_branches(std::uint32_t seed)
{
    Rng rng(seed);
    std::size_t d = static_cast<std::size_t>(uniform(rng, 1, 2));
    long len = uniform(rng, 1, 3);
    std::vector<ExponentVec> chain;
    ExponentVec e = random_exponent(rng, d, d == 1 ? uniform(rng, 1, 3) : uniform(rng, 1, 2), 1, 4);
    chain.push_back(e);
    for (long i = 1; i < len; ++i) {
        long den = d == 1 ? uniform(rng, 1, 3) : uniform(rng, 1, 2);
        ExponentVec step = random_exponent(rng, d, den, 0, 3);
        if (total(step) == 0) step[0] = Rational(1, den);
        e = add(e, step);
        chain.push_back(e);
    }
    static const Rational coeffs[] = {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2), Rational(3)};
    std::vector<Rational> base;
    for (long i = 0; i < len; ++i) base.push_back(coeffs[uniform(rng, 0, 5)]);

    long nb = uniform(rng, 1, 3);
    std::vector<Branch> out;
    for (long j = 0; j < nb; ++j) {
        auto c = base;
        long l = uniform(rng, 1, len);
        if (j > 0) c[static_cast<std::size_t>(uniform(rng, 0, l - 1))] = coeffs[uniform(rng, 0, 5)];
        Series root(d);
        for (long i = 0; i < l; ++i) root.add_term(chain[static_cast<std::size_t>(i)], Number(c[static_cast<std::size_t>(i)]));
        out.push_back(Branch{"b" + std::to_string(j + 1), root, root.denominator()});
    }
    return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& dir)
{
    std::vector<std::filesystem::path> files;
    for (const auto& f : std::filesystem::directory_iterator(dir))
        if (f.path().extension() == ".qo") files.push_back(f.path());
    std::sort(files.begin(), files.end());
    std::vector<CorpusEntry> out;
    for (const auto& f : files) {
        std::ifstream in(f);
        std::stringstream ss;
        ss << in.rdbuf();
        out.push_back({f.stem().string(), resolve(parse_input(ss.str()))});
    }
    return out;
}

Outcome squarefree_reconstruction(long cases)
{
    Outcome o{"squarefree reconstruction"};
    Rng rng(kSeed);
    for (long i = 0; i < cases; ++i) {
        UniPoly p(random_number(rng));
        for (long f = uniform(rng, 1, 4); f > 0; --f) p = p * random_unipoly(rng, 1, 2).pow(static_cast<unsigned>(uniform(rng, 1, 3)));
        auto sq = squarefree_decomposition(p);
        UniPoly prod(Number(1));
        bool ok = true;
        for (const auto& [m, s] : sq) {
            prod = prod * s.pow(m);
            ok = ok && s == s.monic() && gcd(s, s.derivative(1)).degree() == 0;
            for (const auto& [m2, s2] : sq)
                if (m2 != m) ok = ok && gcd(s, s2).degree() == 0;
        }
        ++o.cases;
        if (!ok || prod != p.monic()) o.fail("decomposition of " + str(p));
    }
    return o;
}

Outcome resultant_multiplicativity(long cases)
{
    Outcome o{"resultant multiplicativity"};
    Rng rng(kSeed + 1);
    for (long i = 0; i < cases; ++i) {
        auto f = random_unipoly(rng, 1, 3), g = random_unipoly(rng, 1, 3), h = random_unipoly(rng, 1, 3);
        ++o.cases;
        if (resultant(f * g, h) != resultant(f, h) * resultant(g, h)) o.fail("Res(fg, h) for f=" + str(f) + ", g=" + str(g) + ", h=" + str(h));
        long sign = (f.degree() * h.degree()) % 2 ? -1 : 1;
        if (resultant(h, f) != Number(sign) * resultant(f, h)) o.fail("Res antisymmetry for f=" + str(f) + ", h=" + str(h));

        // Over the series ring, in y with monic factors.
        auto mk = [&] {
            long deg = uniform(rng, 1, 2);
            std::vector<Series> c;
            for (long j = 0; j < deg; ++j) c.push_back(Series::monomial(random_exponent(rng, 1, 2, 1, 6), random_number(rng)));
            c.push_back(Series::constant(1, Number(1)));
            return SeriesYPoly(1, std::move(c));
        };
        auto a = mk(), b = mk(), p = mk();
        ++o.cases;
        if (resultant_y(a * b, p) != resultant_y(a, p) * resultant_y(b, p)) o.fail("Res_y(ab, p) over series");
    }
    return o;
}

Outcome newton_polytope_of_product(long cases)
{
    Outcome o{"Newton polytope of a product"};
    Rng rng(kSeed + 2);
    for (long i = 0; i < cases; ++i) {
        auto f = random_ypoly(rng), g = random_ypoly(rng);
        ++o.cases;
        if (newton_polytope(f * g) != minkowski_sum(newton_polytope(f), newton_polytope(g)))
            o.fail("Delta(fg) for f=" + f.to_string({"x1", "x2"}) + ", g=" + g.to_string({"x1", "x2"}));
    }
    return o;
}

Outcome strong_triangle(long cases)
{
    Outcome o{"strong triangle inequality"};
    for (std::uint32_t s = kSeed; o.cases < cases && s < kSeed + 20 * static_cast<std::uint32_t>(cases); ++s) {
        auto br = random_branches(s);
        RootSet rs;
        try {
            rs = expand_roots(br);
        } catch (const Error&) {
            continue;
        }
        if (rs.size() < 3) continue;
        ++o.cases;
        if (auto v = check_strong_triangle(rs)) o.fail("seed " + std::to_string(s) + ": " + *v);
        // Directly from pairwise contacts: the two smallest of each triple agree.
        for (std::size_t a = 0; a < rs.size(); ++a)
            for (std::size_t b = a + 1; b < rs.size(); ++b)
                for (std::size_t c = b + 1; c < rs.size(); ++c) {
                    std::vector<Height> h;
                    for (auto [u, v] : {std::pair{a, b}, std::pair{b, c}, std::pair{a, c}}) {
                        auto ct = contact(rs.roots[u], rs.roots[v]);
                        if (!std::holds_alternative<Height>(ct)) {
                            o.fail("seed " + std::to_string(s) + ": undefined contact");
                            return o;
                        }
                        h.push_back(std::get<Height>(ct));
                    }
                    std::sort(h.begin(), h.end(), [](const Height& x, const Height& y) { return lt(x, y); });
                    if (h[0] != h[1] || !leq(h[1], h[2])) o.fail("seed " + std::to_string(s) + ": triple violates STI");
                }
    }
    return o;
}

Outcome al_shape()
{
    Outcome o{"derivative shape of (z^n - c)^e"};
    for (const Rational& c : {Rational(1), Rational(-2), Rational(3, 2)})
        for (long n = 1; n <= 4; ++n)
            for (long e = 1; e <= 4; ++e) {
                UniPoly F = (UniPoly::monomial(Number(1), static_cast<std::size_t>(n)) - UniPoly(Number(c))).pow(static_cast<unsigned>(e));
                for (long k = 1; k < e * n; ++k) {
                    ++o.cases;
                    auto seen = observed_al_shape(poly_derivative(F, static_cast<int>(k)), n, Number(c));
                    auto want = al_derivative_shape(n, e, k);
                    if (!seen || !(*seen == want))
                        o.fail("n=" + std::to_string(n) + " e=" + std::to_string(e) + " k=" + std::to_string(k));
                }
            }
    return o;
}

Outcome power_shape(const std::vector<const Problem*>& extra, long cases)
{
    Outcome o{"G_B = z^k H(z^n(B))"};
    for (const Problem* p : extra) {
        const auto& t = p->tree;
        for (std::size_t b = 0; b < t.bars().size(); ++b) {
            int bi = static_cast<int>(b);
            if (t.bar(bi).is_leaf()) continue;
            long n = p->eggers.vertex(p->eggers.class_of_bar(bi)).n;
            check_power_shape(o, characteristic_of_f(t, bi).G, n, false, t.name(bi));
            for (std::size_t i = 0; i < p->branch_polys.size(); ++i) {
                auto cd = characteristic_data(p->branch_polys[i], t.bar(bi));
                if (auto* d = std::get_if<CharacteristicData>(&cd))
                    check_power_shape(o, d->G, n, true, p->branches[i].label + " at " + t.name(bi));
                else
                    o.fail(p->branches[i].label + " incompatible with " + t.name(bi));
            }
        }
    }
    for (std::uint32_t s = kSeed; o.cases < cases && s < kSeed + 20 * static_cast<std::uint32_t>(cases); ++s) {
        auto rt = random_tree(s);
        if (!rt) continue;
        const auto& t = rt->tree;
        for (std::size_t b = 0; b < t.bars().size(); ++b) {
            int bi = static_cast<int>(b);
            if (t.bar(bi).is_leaf()) continue;
            long n = rt->eggers.vertex(rt->eggers.class_of_bar(bi)).n;
            std::string where = "seed " + std::to_string(s) + " " + t.name(bi);
            check_power_shape(o, characteristic_of_f(t, bi).G, n, false, where);
            for (std::size_t i = 0; i < rt->branches.size(); ++i)
                check_power_shape(o, characteristic_from_roots(t, bi, roots_of_branch(rt->roots, i)).G, n, true, where);
        }
    }
    return o;
}

Outcome chain_increments(const std::vector<const Problem*>& extra, long cases)
{
    Outcome o{"chain increments"};
    for (const Problem* p : extra)
        for (std::size_t i = 0; i < p->branch_polys.size(); ++i) check_chain(o, p->tree, p->branch_polys[i], i, p->branches[i].label);
    for (std::uint32_t s = kSeed; o.cases < cases && s < kSeed + 20 * static_cast<std::uint32_t>(cases); ++s) {
        auto rt = random_tree(s);
        if (!rt) continue;
        for (std::size_t i = 0; i < rt->branches.size(); ++i)
            check_chain(o, rt->tree, branch_polynomial(rt->branches[i]), i, "seed " + std::to_string(s) + " " + rt->branches[i].label);
    }
    return o;
}

}  // namespace qo::props
