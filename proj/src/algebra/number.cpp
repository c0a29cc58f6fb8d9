#include "qo/number.hpp"

#include "qo/error.hpp"

namespace qo {

ExtensionPtr make_extension(std::string var, std::string text, CPoly modulus)
{
    if (modulus.degree() < 2) throw Error("extension modulus must have degree >= 2");
    modulus = modulus.monic();
    return std::make_shared<const Extension>(Extension{std::move(var), std::move(text), std::move(modulus)});
}

namespace {

const ExtensionPtr& common(const ExtensionPtr& a, const ExtensionPtr& b)
{
    if (!a) return b;
    if (!b || a == b) return a;
    if (a->modulus != b->modulus) throw Error("numbers from different extensions");
    return a;
}

std::vector<Cyclotomic> padded(const std::vector<Cyclotomic>& p, std::size_t n)
{
    std::vector<Cyclotomic> r = p;
    r.resize(n, Cyclotomic());
    return r;
}

}  // namespace

Number Number::generator(const ExtensionPtr& ext)
{
    return from_parts(ext, {Cyclotomic(0), Cyclotomic(1)});
}

Number Number::from_parts(const ExtensionPtr& ext, std::vector<Cyclotomic> parts)
{
    Number r;
    if (!ext) {
        if (parts.empty()) return r;
        for (std::size_t i = 1; i < parts.size(); ++i)
            if (!parts[i].is_zero()) throw Error("extension part without an extension");
        r.parts_ = {parts[0]};
        return r;
    }
    CPoly p(std::move(parts));
    p = p % ext->modulus;
    r.ext_ = ext;
    r.parts_ = padded(p.coeffs(), static_cast<std::size_t>(ext->modulus.degree()));
    r.normalize();
    return r;
}

void Number::normalize()
{
    if (!ext_) return;
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (!parts_[i].is_zero()) return;
    Cyclotomic a = parts_.empty() ? Cyclotomic() : parts_[0];
    ext_.reset();
    parts_ = {a};
}

Rational Number::rational_value() const
{
    if (!is_rational()) throw Error("not a rational number: " + to_string());
    return parts_[0].rational_value();
}

const Cyclotomic& Number::base_value() const
{
    if (ext_) throw Error("number lies outside the cyclotomic field: " + to_string());
    return parts_[0];
}

long Number::conductor() const
{
    long n = 1;
    for (const auto& p : parts_) n = lcm_long(n, p.conductor());
    return n;
}

Number operator+(const Number& a, const Number& b)
{
    if (!a.ext_ && !b.ext_) return Number(a.parts_[0] + b.parts_[0]);
    const ExtensionPtr& e = common(a.ext_, b.ext_);
    std::size_t n = static_cast<std::size_t>(e->modulus.degree());
    auto x = padded(a.parts_, n), y = padded(b.parts_, n);
    for (std::size_t i = 0; i < n; ++i) x[i] = x[i] + y[i];
    return Number::from_parts(e, std::move(x));
}

Number operator-(const Number& a)
{
    Number r = a;
    for (auto& p : r.parts_) p = -p;
    return r;
}

Number operator-(const Number& a, const Number& b) { return a + (-b); }

Number operator*(const Number& a, const Number& b)
{
    if (!a.ext_ && !b.ext_) return Number(a.parts_[0] * b.parts_[0]);
    const ExtensionPtr& e = common(a.ext_, b.ext_);
    CPoly p = CPoly(a.parts_) * CPoly(b.parts_);
    return Number::from_parts(e, p.coeffs());
}

Number Number::inverse() const
{
    if (is_zero()) throw Error("division by zero");
    if (!ext_) return Number(parts_[0].inverse());
    auto r = xgcd(CPoly(parts_), ext_->modulus);
    if (r.g.degree() != 0) throw Error("extension modulus '" + ext_->text + "' is reducible");
    return from_parts(ext_, r.s.coeffs());
}

Number Number::galois(long a) const
{
    if (ext_) throw Error("galois action on extension elements is not defined");
    return Number(parts_[0].galois(a));
}

bool operator==(const Number& a, const Number& b)
{
    if (!a.ext_ && !b.ext_) return a.parts_[0] == b.parts_[0];
    if (!a.ext_ || !b.ext_) return false;
    common(a.ext_, b.ext_);
    for (std::size_t i = 0; i < a.parts_.size(); ++i)
        if (a.parts_[i] != b.parts_[i]) return false;
    return true;
}

int compare(const Number& a, const Number& b)
{
    if (a.in_base() != b.in_base()) return a.in_base() ? -1 : 1;
    std::size_t n = std::max(a.parts().size(), b.parts().size());
    auto x = padded(a.parts(), n), y = padded(b.parts(), n);
    for (std::size_t i = n; i-- > 0;) {
        int c = compare(x[i], y[i]);
        if (c) return c;
    }
    return 0;
}

std::string Number::to_string() const
{
    if (!ext_) return parts_[0].to_string();
    std::string out;
    for (std::size_t i = parts_.size(); i-- > 0;) {
        if (parts_[i].is_zero()) continue;
        std::string c = parts_[i].to_string();
        std::string mono = i == 0 ? "" : (i == 1 ? ext_->var : ext_->var + "^" + std::to_string(i));
        std::string term;
        if (mono.empty()) term = c;
        else if (c == "1") term = mono;
        else if (c == "-1") term = "-" + mono;
        else if (c.find_first_of("+- ", 1) != std::string::npos) term = "(" + c + ")*" + mono;
        else term = c + "*" + mono;
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out;
}

}  // namespace qo
