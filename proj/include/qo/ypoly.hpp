#pragma once

#include <string>
#include <vector>

#include "qo/series.hpp"

namespace qo {

// Polynomial in y with fractional-series coefficients, stored low to high.
class SeriesYPoly {
public:
    explicit SeriesYPoly(std::size_t nvars = 1) : d_(nvars) {}
    SeriesYPoly(std::size_t nvars, std::vector<Series> coeffs);
    static SeriesYPoly y(std::size_t nvars);
    static SeriesYPoly constant(const Series& c);
    // prod (y - r) over the given roots.
    static SeriesYPoly from_roots(std::size_t nvars, const std::vector<Series>& roots);

    std::size_t nvars() const { return d_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Series>& coeffs() const { return c_; }
    Series coeff(std::size_t i) const;
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    // Monic with all non-leading coefficients of positive order.
    bool is_weierstrass() const;
    std::optional<Rational> precision() const;

    friend SeriesYPoly operator+(const SeriesYPoly& a, const SeriesYPoly& b);
    friend SeriesYPoly operator-(const SeriesYPoly& a, const SeriesYPoly& b);
    friend SeriesYPoly operator*(const SeriesYPoly& a, const SeriesYPoly& b);
    friend bool operator==(const SeriesYPoly& a, const SeriesYPoly& b);
    SeriesYPoly scaled(const Number& c) const;
    SeriesYPoly pow(unsigned e) const;

    SeriesYPoly derivative(unsigned k) const;
    // ((n-k)!/n!) d^k/dy^k for n = degree.
    SeriesYPoly normalized_derivative(int k) const;
    Series evaluate(const Series& y) const;
    SeriesYPoly substitute_monomial(const std::vector<Rational>& r) const;
    SeriesYPoly truncated(const std::optional<Rational>& t) const;

    std::string to_string(const std::vector<std::string>& vars) const;

private:
    void trim();

    std::size_t d_;
    std::vector<Series> c_;
};

}  // namespace qo
