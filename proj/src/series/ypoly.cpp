#include "qo/ypoly.hpp"

#include "qo/error.hpp"
#include "qo/unipoly.hpp"

namespace qo {

SeriesYPoly::SeriesYPoly(std::size_t nvars, std::vector<Series> coeffs) : d_(nvars), c_(std::move(coeffs))
{
    for (const auto& s : c_)
        if (s.nvars() != d_) throw Error("coefficient dimension mismatch");
    trim();
}

void SeriesYPoly::trim()
{
    while (!c_.empty() && c_.back().is_exact_zero()) c_.pop_back();
}

SeriesYPoly SeriesYPoly::y(std::size_t nvars)
{
    return SeriesYPoly(nvars, {Series(nvars), Series::constant(nvars, Number(1))});
}

SeriesYPoly SeriesYPoly::constant(const Series& c) { return SeriesYPoly(c.nvars(), {c}); }

SeriesYPoly SeriesYPoly::from_roots(std::size_t nvars, const std::vector<Series>& roots)
{
    SeriesYPoly p = constant(Series::constant(nvars, Number(1)));
    for (const auto& r : roots) p = p * SeriesYPoly(nvars, {-r, Series::constant(nvars, Number(1))});
    return p;
}

Series SeriesYPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Series(d_); }

bool SeriesYPoly::is_monic() const
{
    if (c_.empty()) return false;
    const Series& l = c_.back();
    return l.exact() && l.terms().size() == 1 && total(l.terms().begin()->first) == 0 && l.terms().begin()->second == Number(1);
}

bool SeriesYPoly::is_weierstrass() const
{
    if (!is_monic()) return false;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
        const auto& t = c_[i].terms();
        if (!t.empty() && total(t.begin()->first) == 0) return false;
    }
    return true;
}

std::optional<Rational> SeriesYPoly::precision() const
{
    std::optional<Rational> p;
    for (const auto& s : c_)
        if (s.precision() && (!p || *s.precision() < *p)) p = s.precision();
    return p;
}

SeriesYPoly operator+(const SeriesYPoly& a, const SeriesYPoly& b)
{
    std::vector<Series> c(std::max(a.c_.size(), b.c_.size()), Series(a.d_));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return SeriesYPoly(a.d_, std::move(c));
}

SeriesYPoly operator-(const SeriesYPoly& a, const SeriesYPoly& b) { return a + b.scaled(Number(-1)); }

SeriesYPoly operator*(const SeriesYPoly& a, const SeriesYPoly& b)
{
    if (a.is_zero() || b.is_zero()) return SeriesYPoly(a.d_);
    std::vector<Series> c(a.c_.size() + b.c_.size() - 1, Series(a.d_));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return SeriesYPoly(a.d_, std::move(c));
}

bool operator==(const SeriesYPoly& a, const SeriesYPoly& b) { return a.d_ == b.d_ && a.c_ == b.c_; }

SeriesYPoly SeriesYPoly::scaled(const Number& c) const
{
    std::vector<Series> out;
    for (const auto& s : c_) out.push_back(s.scaled(c));
    return SeriesYPoly(d_, std::move(out));
}

SeriesYPoly SeriesYPoly::pow(unsigned e) const
{
    SeriesYPoly r = constant(Series::constant(d_, Number(1))), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

SeriesYPoly SeriesYPoly::derivative(unsigned k) const
{
    std::vector<Series> out;
    for (std::size_t i = k; i < c_.size(); ++i) {
        Integer f = 1;
        for (std::size_t j = i - k + 1; j <= i; ++j) f *= static_cast<unsigned long>(j);
        out.push_back(c_[i].scaled(Number(Rational(f))));
    }
    return SeriesYPoly(d_, std::move(out));
}

SeriesYPoly SeriesYPoly::normalized_derivative(int k) const
{
    long n = degree();
    if (k < 0 || k > n) throw Error("derivative order " + std::to_string(k) + " out of range for degree " + std::to_string(n));
    auto uk = static_cast<unsigned>(k), un = static_cast<unsigned>(n);
    return derivative(uk).scaled(Number(factorial(un - uk) / factorial(un)));
}

Series SeriesYPoly::evaluate(const Series& y) const
{
    Series acc(d_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
    return acc;
}

SeriesYPoly SeriesYPoly::substitute_monomial(const std::vector<Rational>& r) const
{
    std::vector<Series> out;
    for (const auto& s : c_) out.push_back(s.substitute_monomial(r));
    return SeriesYPoly(1, std::move(out));
}

SeriesYPoly SeriesYPoly::truncated(const std::optional<Rational>& t) const
{
    std::vector<Series> out;
    for (const auto& s : c_) out.push_back(s.truncated(t));
    SeriesYPoly p(d_);
    p.c_ = std::move(out);
    return p;
}

std::string SeriesYPoly::to_string(const std::vector<std::string>& vars) const
{
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Series& s = c_[i];
        if (s.is_zero() && s.exact()) continue;
        std::string ys = i == 0 ? "" : (i == 1 ? "y" : "y^" + std::to_string(i));
        std::string cs = s.to_string(vars);
        bool single = s.exact() && s.terms().size() == 1;
        std::string term;
        if (ys.empty()) term = cs;
        else if (cs == "1") term = ys;
        else if (cs == "-1") term = "-" + ys;
        else if (single) term = cs + "*" + ys;
        else term = "(" + cs + ")*" + ys;
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace qo
