#include "qo/exponent.hpp"

#include <numeric>

#include "qo/error.hpp"

namespace qo {

Rational total(const ExponentVec& e)
{
    Rational s = 0;
    for (const auto& a : e) s += a;
    return s;
}

bool leq(const ExponentVec& a, const ExponentVec& b)
{
    if (a.size() != b.size()) throw Error("exponent dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool comparable(const ExponentVec& a, const ExponentVec& b) { return leq(a, b) || leq(b, a); }

ExponentVec add(const ExponentVec& a, const ExponentVec& b)
{
    if (a.size() != b.size()) throw Error("exponent dimension mismatch");
    ExponentVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExponentVec sub(const ExponentVec& a, const ExponentVec& b)
{
    if (a.size() != b.size()) throw Error("exponent dimension mismatch");
    ExponentVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

ExponentVec scale(const ExponentVec& a, const Rational& s)
{
    ExponentVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

ExponentVec zero_exponent(std::size_t d) { return ExponentVec(d, Rational(0)); }

ExponentVec meet(const ExponentVec& a, const ExponentVec& b)
{
    ExponentVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
    return r;
}

Rational dot(const std::vector<Rational>& r, const ExponentVec& q)
{
    if (r.size() != q.size()) throw Error("weight dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * q[i];
    return s;
}

long common_denominator(const ExponentVec& e)
{
    long n = 1;
    for (const auto& a : e) {
        long d = to_long(a.get_den());
        n = n / std::gcd(n, d) * d;
    }
    return n;
}

std::string to_string(const ExponentVec& e)
{
    if (e.size() == 1) return e[0].get_str();
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += e[i].get_str();
    }
    return s + ")";
}

bool GradedLess::operator()(const ExponentVec& a, const ExponentVec& b) const
{
    int c = cmp(total(a), total(b));
    if (c) return c < 0;
    return a < b;
}

const ExponentVec& Height::value() const
{
    if (!q_) throw Error("infinite height has no exponent value");
    return *q_;
}

bool leq(const Height& a, const Height& b)
{
    if (b.is_infinite()) return true;
    if (a.is_infinite()) return false;
    return leq(*a.q_, *b.q_);
}

bool lt(const Height& a, const Height& b) { return leq(a, b) && a != b; }

std::string Height::to_string() const { return q_ ? qo::to_string(*q_) : "inf"; }

}  // namespace qo
