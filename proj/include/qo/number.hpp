#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qo/cyclotomic.hpp"
#include "qo/dense_poly.hpp"

namespace qo {

using CPoly = DensePoly<Cyclotomic>;

// Algebraic extension Q(zeta)[t]/(m(t)) of the cyclotomic tower, declared by the input.
// m must be monic and irreducible over the cyclotomic field; reducibility is detected
// only when an inverse hits a zero divisor.
struct Extension {
    std::string var;
    std::string text;
    CPoly modulus;
};
using ExtensionPtr = std::shared_ptr<const Extension>;

ExtensionPtr make_extension(std::string var, std::string text, CPoly modulus);

// Coefficient field element: a cyclotomic number, or a polynomial in the extension
// generator with cyclotomic coefficients when an extension is in use.
class Number {
public:
    Number() : parts_{Cyclotomic()} {}
    Number(long a) : parts_{Cyclotomic(a)} {}
    Number(const Rational& a) : parts_{Cyclotomic(a)} {}
    Number(const Cyclotomic& a) : parts_{a} {}

    static Number generator(const ExtensionPtr& ext);
    static Number from_parts(const ExtensionPtr& ext, std::vector<Cyclotomic> parts);

    bool is_zero() const { return parts_.size() == 1 && parts_[0].is_zero(); }
    bool in_base() const { return !ext_; }
    bool is_rational() const { return !ext_ && parts_[0].is_rational(); }
    Rational rational_value() const;
    const Cyclotomic& base_value() const;
    const ExtensionPtr& extension() const { return ext_; }
    const std::vector<Cyclotomic>& parts() const { return parts_; }
    long conductor() const;

    Number inverse() const;
    Number galois(long a) const;

    friend Number operator+(const Number& a, const Number& b);
    friend Number operator-(const Number& a, const Number& b);
    friend Number operator-(const Number& a);
    friend Number operator*(const Number& a, const Number& b);
    friend Number operator/(const Number& a, const Number& b) { return a * b.inverse(); }
    friend bool operator==(const Number& a, const Number& b);
    friend bool operator!=(const Number& a, const Number& b) { return !(a == b); }

    std::string to_string() const;

private:
    void normalize();

    ExtensionPtr ext_;
    std::vector<Cyclotomic> parts_;
};

inline bool is_zero(const Number& a) { return a.is_zero(); }
inline std::string to_string(const Number& a) { return a.to_string(); }
int compare(const Number& a, const Number& b);

struct NumberLess {
    bool operator()(const Number& a, const Number& b) const { return compare(a, b) < 0; }
};

}  // namespace qo
