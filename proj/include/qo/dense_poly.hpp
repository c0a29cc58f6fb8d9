#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qo/error.hpp"
#include "qo/rational.hpp"

namespace qo {

namespace detail {
template <class F>
bool coeff_is_zero(const F& a)
{
    return is_zero(a);
}
}  // namespace detail

// Dense univariate polynomial over an exact field F, coefficients low to high.
// F needs +, -, *, /, ==, construction from int, and a free is_zero().
template <class F>
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    DensePoly(const F& constant) : c_{constant} { trim(); }

    static DensePoly monomial(const F& a, std::size_t k)
    {
        std::vector<F> v(k + 1, F(0));
        v[k] = a;
        return DensePoly(std::move(v));
    }
    static DensePoly x() { return monomial(F(1), 1); }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
    const F& lc() const
    {
        if (c_.empty()) throw Error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_constant() const { return c_.size() <= 1; }

    DensePoly monic() const
    {
        if (c_.empty()) return *this;
        F inv = F(1) / c_.back();
        std::vector<F> v(c_.size(), F(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * inv;
        return DensePoly(std::move(v));
    }

    F operator()(const F& z) const
    {
        F acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
        return acc;
    }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b)
    {
        std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
        return DensePoly(std::move(v));
    }
    friend DensePoly operator-(const DensePoly& a) { return a.scaled(F(-1)); }
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return DensePoly(std::move(v));
    }
    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

    DensePoly scaled(const F& s) const
    {
        std::vector<F> v(c_.size(), F(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
        return DensePoly(std::move(v));
    }

    DensePoly pow(unsigned e) const
    {
        DensePoly r(F(1)), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            e >>= 1u;
            if (e) b = b * b;
        }
        return r;
    }

    // Plain k-th derivative.
    DensePoly derivative(unsigned k = 1) const
    {
        if (static_cast<long>(k) > degree()) return {};
        std::vector<F> v(c_.size() - k, F(0));
        for (std::size_t i = k; i < c_.size(); ++i) {
            long f = 1;
            for (std::size_t j = i - k + 1; j <= i; ++j) f *= static_cast<long>(j);
            v[i - k] = c_[i] * F(f);
        }
        return DensePoly(std::move(v));
    }

    // p(s*z)
    DensePoly rescaled(const F& s) const
    {
        std::vector<F> v(c_.size(), F(0));
        F p(1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            v[i] = c_[i] * p;
            p = p * s;
        }
        return DensePoly(std::move(v));
    }

    // Multiplicity of z = 0 as a root.
    std::size_t low_order() const
    {
        std::size_t i = 0;
        while (i < c_.size() && detail::coeff_is_zero(c_[i])) ++i;
        return i;
    }

    std::string to_string(const std::string& var = "z") const
    {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (detail::coeff_is_zero(c_[i])) continue;
            std::string cs = coeff_string(c_[i]);
            bool one = cs == "1", minus_one = cs == "-1";
            std::string term;
            if (i == 0) {
                term = cs;
            } else {
                std::string mono = i == 1 ? var : var + "^" + std::to_string(i);
                if (one) term = mono;
                else if (minus_one) term = "-" + mono;
                else term = wrap(cs) + "*" + mono;
            }
            if (out.empty()) out = term;
            else if (!term.empty() && term[0] == '-') out += " - " + term.substr(1);
            else out += " + " + term;
        }
        return out;
    }

private:
    void trim()
    {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }
    static std::string coeff_string(const F& a)
    {
        using qo::to_string;
        return to_string(a);
    }
    static std::string wrap(const std::string& s)
    {
        bool simple = true;
        for (std::size_t i = 1; i < s.size(); ++i)
            if (s[i] == '+' || s[i] == '-' || s[i] == ' ') simple = false;
        return simple ? s : "(" + s + ")";
    }

    std::vector<F> c_;
};

template <class F>
std::pair<DensePoly<F>, DensePoly<F>> divmod(const DensePoly<F>& a, const DensePoly<F>& b)
{
    if (b.is_zero()) throw Error("polynomial division by zero");
    if (a.degree() < b.degree()) return {DensePoly<F>(), a};
    std::vector<F> r = a.coeffs();
    std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), F(0));
    const auto& bc = b.coeffs();
    F inv = F(1) / b.lc();
    for (long i = a.degree() - b.degree(); i >= 0; --i) {
        F t = r[static_cast<std::size_t>(i + b.degree())] * inv;
        q[static_cast<std::size_t>(i)] = t;
        if (detail::coeff_is_zero(t)) continue;
        for (std::size_t j = 0; j < bc.size(); ++j)
            r[static_cast<std::size_t>(i) + j] = r[static_cast<std::size_t>(i) + j] - t * bc[j];
    }
    r.resize(static_cast<std::size_t>(b.degree()), F(0));
    return {DensePoly<F>(std::move(q)), DensePoly<F>(std::move(r))};
}

template <class F>
DensePoly<F> operator%(const DensePoly<F>& a, const DensePoly<F>& b)
{
    return divmod(a, b).second;
}

// Exact quotient; throws if b does not divide a.
template <class F>
DensePoly<F> exact_div(const DensePoly<F>& a, const DensePoly<F>& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

// Monic gcd; gcd(0, 0) = 0.
template <class F>
DensePoly<F> gcd(DensePoly<F> a, DensePoly<F> b)
{
    while (!b.is_zero()) {
        DensePoly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
struct Xgcd {
    DensePoly<F> g, s, t;
};

template <class F>
Xgcd<F> xgcd(const DensePoly<F>& a, const DensePoly<F>& b)
{
    DensePoly<F> r0 = a, r1 = b, s0(F(1)), s1, t0, t1(F(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        DensePoly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F inv = F(1) / r0.lc();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// Yun's algorithm; returns (m, S_m) pairs with S_m monic, squarefree, nonconstant.
template <class F>
std::vector<std::pair<unsigned, DensePoly<F>>> squarefree_parts(const DensePoly<F>& p)
{
    if (p.is_zero()) throw Error("zero input");
    std::vector<std::pair<unsigned, DensePoly<F>>> out;
    DensePoly<F> f = p.monic();
    if (f.degree() == 0) return out;
    DensePoly<F> d = f.derivative();
    DensePoly<F> a = gcd(f, d);
    DensePoly<F> b = exact_div(f, a);
    DensePoly<F> c = exact_div(d, a) - b.derivative();
    unsigned m = 1;
    while (b.degree() > 0) {
        DensePoly<F> s = gcd(b, c);
        if (s.degree() > 0) out.emplace_back(m, s);
        b = exact_div(b, s);
        c = exact_div(c, s) - b.derivative();
        ++m;
    }
    return out;
}

}  // namespace qo
