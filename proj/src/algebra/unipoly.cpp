#include "qo/unipoly.hpp"

#include <numeric>

#include "qo/error.hpp"
#include "qo/resultant.hpp"

namespace qo {

Rational factorial(unsigned n)
{
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

std::map<unsigned, UniPoly> squarefree_decomposition(const UniPoly& p)
{
    std::map<unsigned, UniPoly> out;
    for (auto& [m, s] : squarefree_parts(p)) out.emplace(m, s);
    return out;
}

UniPoly poly_derivative(const UniPoly& p, int k, bool normalized)
{
    if (k < 0) throw Error("negative derivative order");
    UniPoly d = p.derivative(static_cast<unsigned>(k));
    if (!normalized || p.is_zero()) return d;
    auto n = static_cast<unsigned>(p.degree());
    if (static_cast<unsigned>(k) > n) return d;
    return d.scaled(Number(factorial(n - static_cast<unsigned>(k)) / factorial(n)));
}

namespace {

struct FieldOps {
    Number zero() const { return Number(0); }
    Number one() const { return Number(1); }
    bool is_zero(const Number& a) const { return a.is_zero(); }
    Number div_exact(const Number& a, const Number& b) const { return a / b; }
};

UniPoly linear(const Number& root) { return UniPoly(std::vector<Number>{-root, Number(1)}); }

// sqrt of a base-field element that is a rational times a root of unity.
bool sqrt_number(const Number& a, Number& out)
{
    if (a.is_zero()) {
        out = Number(0);
        return true;
    }
    if (!a.in_base()) return false;
    RootOfUnityForm f;
    if (!as_rational_times_root_of_unity(a.base_value(), f)) return false;
    out = Number(sqrt_rational(f.r) * Cyclotomic::zeta(2 * f.m, f.j));
    return true;
}

// All e-th roots of a (a != 0), when a is a rational times a root of unity and
// |r|^(1/e) lies in the tower.
bool binomial_roots(const Number& a, long e, std::vector<Number>& out)
{
    if (!a.in_base()) return false;
    RootOfUnityForm f;
    if (!as_rational_times_root_of_unity(a.base_value(), f)) return false;
    Rational r = f.r;
    long m = f.m, j = f.j;
    if (sgn(r) < 0) {
        r = -r;
        long mm = lcm_long(m, 2);
        j = j * (mm / m) + mm / 2;
        m = mm;
    }
    Cyclotomic base;
    Rational s;
    if (exact_root(r, static_cast<unsigned long>(e), s)) {
        base = Cyclotomic(s);
    } else if (e % 2 == 0 && exact_root(r, static_cast<unsigned long>(e / 2), s)) {
        base = sqrt_rational(s);
    } else {
        return false;
    }
    // zeta_m^j = zeta_{e m}^{e j}, so one root is base * zeta_{e m}^j.
    Cyclotomic z0 = base * Cyclotomic::zeta(e * m, j);
    for (long l = 0; l < e; ++l) out.emplace_back(z0 * Cyclotomic::zeta(e, l));
    return true;
}

std::vector<Integer> divisors_of(Integer n, bool& ok)
{
    std::vector<Integer> out;
    if (n < 0) n = -n;
    ok = n <= 1000000;
    if (!ok) return out;
    long v = n.get_si();
    for (long d = 1; d <= v; ++d)
        if (v % d == 0) out.emplace_back(d);
    return out;
}

bool rational_coefficients(const UniPoly& p)
{
    for (const auto& c : p.coeffs())
        if (!c.is_rational()) return false;
    return true;
}

// One step of root finding on a monic squarefree polynomial of degree >= 1.
bool find_some_roots(const UniPoly& s, std::vector<Number>& found)
{
    long deg = s.degree();
    if (s.low_order() > 0) {
        found.emplace_back(0);
        return true;
    }
    if (deg == 1) {
        found.push_back(-s.coeff(0) / s.coeff(1));
        return true;
    }
    // Reduce H(z^n) to H(w).
    long g = 0;
    for (long i = 1; i <= deg; ++i)
        if (!s.coeff(static_cast<std::size_t>(i)).is_zero()) g = std::gcd(g, i);
    if (g > 1) {
        std::vector<Number> h(static_cast<std::size_t>(deg / g + 1));
        for (long i = 0; i <= deg / g; ++i) h[static_cast<std::size_t>(i)] = s.coeff(static_cast<std::size_t>(i * g));
        std::vector<Number> ws;
        if (!find_some_roots(UniPoly(h), ws)) return false;
        bool any = false;
        for (const auto& w : ws) {
            if (w.is_zero()) continue;
            any = binomial_roots(w, g, found) || any;
        }
        return any;
    }
    if (deg == 2) {
        Number b = s.coeff(1) / s.coeff(2), c = s.coeff(0) / s.coeff(2);
        Number disc = b * b / Number(4) - c, r;
        if (!sqrt_number(disc, r)) return false;
        Number half = -b / Number(2);
        found.push_back(half + r);
        found.push_back(half - r);
        return true;
    }
    if (rational_coefficients(s)) {
        // Rational root theorem on the integer-cleared polynomial.
        Integer den = 1;
        for (const auto& c : s.coeffs()) {
            Integer d = c.rational_value().get_den();
            den = den / gcd(den, d) * d;
        }
        Integer a0 = Rational(s.coeff(0).rational_value() * Rational(den)).get_num();
        Integer an = Rational(s.lc().rational_value() * Rational(den)).get_num();
        bool ok0 = false, okn = false;
        auto ps = divisors_of(a0, ok0);
        auto qs = divisors_of(an, okn);
        if (ok0 && okn) {
            for (const auto& p : ps)
                for (const auto& q : qs)
                    for (int sign : {1, -1}) {
                        Number cand(Rational(p * sign, q));
                        if (s(cand).is_zero()) {
                            found.push_back(cand);
                            return true;
                        }
                    }
        }
    }
    return false;
}

}  // namespace

Number resultant(const UniPoly& p, const UniPoly& q)
{
    if (p.is_zero() || q.is_zero()) throw Error("resultant of a zero polynomial");
    FieldOps ops;
    return bareiss_determinant(sylvester_matrix(p.coeffs(), q.coeffs(), ops), ops);
}

unsigned root_multiplicity(const UniPoly& p, const Number& a)
{
    if (p.is_zero()) throw Error("root multiplicity in the zero polynomial");
    unsigned m = 0;
    UniPoly q = p;
    UniPoly l = linear(a);
    while (q.degree() > 0) {
        auto [quo, rem] = divmod(q, l);
        if (!rem.is_zero()) break;
        q = quo;
        ++m;
    }
    return m;
}

RootSplit solve_in_tower(const UniPoly& p)
{
    RootSplit out;
    for (auto& [m, s] : squarefree_decomposition(p)) {
        UniPoly rest = s;
        while (rest.degree() > 0) {
            std::vector<Number> found;
            if (!find_some_roots(rest, found)) break;
            bool progressed = false;
            for (const auto& r : found) {
                auto [quo, rem] = divmod(rest, linear(r));
                if (!rem.is_zero()) continue;
                out.roots.emplace_back(r, m);
                rest = quo;
                progressed = true;
            }
            if (!progressed) break;
        }
        if (rest.degree() > 0) out.unsolved.emplace_back(rest.monic(), m);
    }
    return out;
}

}  // namespace qo
