#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qo/rational.hpp"

namespace qo {

using ExponentVec = std::vector<Rational>;

Rational total(const ExponentVec& e);
// Componentwise a <= b.
bool leq(const ExponentVec& a, const ExponentVec& b);
bool comparable(const ExponentVec& a, const ExponentVec& b);
ExponentVec add(const ExponentVec& a, const ExponentVec& b);
ExponentVec sub(const ExponentVec& a, const ExponentVec& b);
ExponentVec scale(const ExponentVec& a, const Rational& s);
ExponentVec zero_exponent(std::size_t d);
// Componentwise minimum.
ExponentVec meet(const ExponentVec& a, const ExponentVec& b);
Rational dot(const std::vector<Rational>& r, const ExponentVec& q);
// lcm of the denominators.
long common_denominator(const ExponentVec& e);
// "(3/2,1)"; a single entry prints without parentheses.
std::string to_string(const ExponentVec& e);

// Total degree first, then lexicographic; a total order refining the partial order.
struct GradedLess {
    bool operator()(const ExponentVec& a, const ExponentVec& b) const;
};

// Exponent vector or the symbol infinity, which lies above every vector.
class Height {
public:
    Height() = default;  // infinity
    Height(ExponentVec q) : q_(std::move(q)) {}
    static Height infinity() { return Height(); }

    bool is_infinite() const { return !q_; }
    const ExponentVec& value() const;

    friend bool operator==(const Height& a, const Height& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Height& a, const Height& b) { return !(a == b); }
    // Partial order.
    friend bool leq(const Height& a, const Height& b);
    friend bool comparable(const Height& a, const Height& b) { return leq(a, b) || leq(b, a); }
    std::string to_string() const;

private:
    std::optional<ExponentVec> q_;
};

bool lt(const Height& a, const Height& b);

}  // namespace qo
