#include "qo/series.hpp"

#include <numeric>

#include "qo/error.hpp"

namespace qo {

namespace {

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

void check_dims(const Series& a, const Series& b)
{
    if (a.nvars() != b.nvars()) throw Error("series in different numbers of variables");
}

}  // namespace

Series::Series(std::size_t nvars, std::optional<Rational> precision) : d_(nvars), precision_(std::move(precision)) {}

Series Series::constant(std::size_t nvars, const Number& c)
{
    Series s(nvars);
    s.add_term(zero_exponent(nvars), c);
    return s;
}

Series Series::monomial(const ExponentVec& e, const Number& c)
{
    Series s(e.size());
    s.add_term(e, c);
    return s;
}

Number Series::coeff(const ExponentVec& e) const
{
    if (precision_ && total(e) >= *precision_) throw Indeterminate("coefficient beyond precision");
    auto it = terms_.find(e);
    return it == terms_.end() ? Number(0) : it->second;
}

std::optional<Rational> Series::order_lower_bound() const
{
    if (!terms_.empty()) return total(terms_.begin()->first);
    return precision_;
}

long Series::denominator() const
{
    long n = 1;
    for (const auto& [e, c] : terms_) n = lcm_long(n, common_denominator(e));
    return n;
}

bool Series::is_constant() const
{
    if (!exact()) return false;
    for (const auto& [e, c] : terms_)
        if (total(e) != 0) return false;
    return true;
}

void Series::add_term(const ExponentVec& e, const Number& c)
{
    if (e.size() != d_) throw Error("exponent dimension mismatch");
    for (const auto& a : e)
        if (sgn(a) < 0) throw Error("negative exponent " + qo::to_string(e));
    if (precision_ && total(e) >= *precision_) return;
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Series::drop_beyond_precision()
{
    if (!precision_) return;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (total(it->first) >= *precision_) it = terms_.erase(it);
        else ++it;
    }
}

Series Series::truncated(const std::optional<Rational>& t) const
{
    Series r = *this;
    r.precision_ = min_opt(precision_, t);
    r.drop_beyond_precision();
    return r;
}

Series operator+(const Series& a, const Series& b)
{
    check_dims(a, b);
    Series r(a.d_, min_opt(a.precision_, b.precision_));
    for (const auto& [e, c] : a.terms_) r.add_term(e, c);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

Series operator-(const Series& a)
{
    Series r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b)
{
    check_dims(a, b);
    // Unknown tails: a = A + O(T_a), b = B + O(T_b).
    std::optional<Rational> p;
    if (a.is_exact_zero() || b.is_exact_zero()) {
        return Series(a.d_);
    }
    p = min_opt(plus_opt(a.precision_, b.order_lower_bound()), plus_opt(b.precision_, a.order_lower_bound()));
    if (a.precision_ && !b.order_lower_bound()) p = min_opt(p, std::nullopt);
    Series r(a.d_, p);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            ExponentVec e = add(ea, eb);
            if (p && total(e) >= *p) break;
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Series Series::scaled(const Number& c) const
{
    if (c.is_zero()) return Series(d_, precision_);
    Series r = *this;
    for (auto& [e, v] : r.terms_) v = v * c;
    return r;
}

Series Series::pow(unsigned e) const
{
    Series r = constant(d_, Number(1)), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

Series Series::shifted(const ExponentVec& s) const
{
    Series r(d_);
    if (precision_) r.precision_ = *precision_ + total(s);
    for (const auto& [e, c] : terms_) r.add_term(add(e, s), c);
    return r;
}

Series Series::map_coeffs(const std::function<Number(const ExponentVec&, const Number&)>& f) const
{
    Series r(d_, precision_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(e, c));
    return r;
}

bool operator==(const Series& a, const Series& b)
{
    if (a.d_ != b.d_ || a.precision_ != b.precision_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
        if (e != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

Series Series::substitute_monomial(const std::vector<Rational>& r) const
{
    if (r.size() != d_) throw Error("substitution weight dimension mismatch");
    Rational rmin = r.empty() ? Rational(1) : r[0];
    for (const auto& w : r) {
        if (sgn(w) <= 0) throw Error("substitution weights must be positive");
        if (w < rmin) rmin = w;
    }
    std::optional<Rational> p;
    if (precision_) p = *precision_ * rmin;
    Series out(1, p);
    for (const auto& [e, c] : terms_) out.add_term({dot(r, e)}, c);
    return out;
}

std::string Series::to_string(const std::vector<std::string>& vars) const
{
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (sgn(e[i]) == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars.at(i);
            if (e[i] != 1) mono += is_integer(e[i]) ? "^" + e[i].get_str() : "^(" + e[i].get_str() + ")";
        }
        std::string cs = c.to_string();
        bool compound = cs.find_first_of("+- ", 1) != std::string::npos;
        std::string term;
        if (mono.empty()) term = compound ? "(" + cs + ")" : cs;
        else if (cs == "1") term = mono;
        else if (cs == "-1") term = "-" + mono;
        else term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    if (out.empty()) out = "0";
    if (precision_) out += " + O(" + precision_->get_str() + ")";
    return out;
}

InitialData initial_data(const Series& s)
{
    if (s.is_zero()) throw Indeterminate("series is zero within precision");
    const auto& [q, c] = *s.terms().begin();
    for (const auto& [e, v] : s.terms())
        if (!leq(q, e)) return NotMonomialOrdered{};
    return InitialTerm{q, c};
}

std::vector<std::string> default_var_names(std::size_t d)
{
    if (d == 1) return {"x"};
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= d; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

}  // namespace qo
