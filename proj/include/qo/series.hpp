#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qo/exponent.hpp"
#include "qo/number.hpp"

namespace qo {

// Truncated fractional power series in d variables. Terms of total order below the
// precision are exact; nothing is known at or beyond it. No precision means exact.
class Series {
public:
    using Terms = std::map<ExponentVec, Number, GradedLess>;

    explicit Series(std::size_t nvars = 1, std::optional<Rational> precision = std::nullopt);
    static Series constant(std::size_t nvars, const Number& c);
    static Series monomial(const ExponentVec& e, const Number& c = Number(1));

    std::size_t nvars() const { return d_; }
    const Terms& terms() const { return terms_; }
    const std::optional<Rational>& precision() const { return precision_; }
    bool exact() const { return !precision_; }

    // No known nonzero terms; for inexact series this means zero within precision.
    bool is_zero() const { return terms_.empty(); }
    bool is_exact_zero() const { return terms_.empty() && exact(); }
    Number coeff(const ExponentVec& e) const;
    // Smallest total order of a known term, or the precision if none.
    std::optional<Rational> order_lower_bound() const;
    // lcm of all exponent denominators.
    long denominator() const;
    bool is_constant() const;

    void add_term(const ExponentVec& e, const Number& c);
    Series truncated(const std::optional<Rational>& t) const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator-(const Series& a);
    friend Series operator*(const Series& a, const Series& b);
    Series scaled(const Number& c) const;
    Series pow(unsigned e) const;
    Series shifted(const ExponentVec& e) const;
    Series map_coeffs(const std::function<Number(const ExponentVec&, const Number&)>& f) const;

    // Exact equality including precision.
    friend bool operator==(const Series& a, const Series& b);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    // x_i -> u^{r_i}.
    Series substitute_monomial(const std::vector<Rational>& r) const;

    std::string to_string(const std::vector<std::string>& vars) const;

private:
    void drop_beyond_precision();

    std::size_t d_;
    Terms terms_;
    std::optional<Rational> precision_;
};

struct InitialTerm {
    ExponentVec order;
    Number coeff;
};
struct NotMonomialOrdered {};
using InitialData = std::variant<InitialTerm, NotMonomialOrdered>;

// (q, c) when s = x^q * unit; throws Indeterminate when s is zero within precision.
InitialData initial_data(const Series& s);

std::vector<std::string> default_var_names(std::size_t d);

}  // namespace qo
