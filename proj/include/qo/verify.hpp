#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qo/polar.hpp"

namespace qo {

enum class Status { match, mismatch, inconclusive };
std::string to_string(Status s);

struct ClaimResult {
    std::string claim;
    std::string predicted;
    std::string oracle;
    Status status = Status::inconclusive;
    std::vector<std::vector<Rational>> substitutions;
};

struct VerificationReport {
    std::vector<ClaimResult> entries;
    std::optional<std::string> hypothesis_violated;
    std::vector<std::string> notices;

    bool any_mismatch() const;
    bool all_match() const;
    void append(const VerificationReport& other);
};

// One Newton-Puiseux root. An unrepresentable root carries the minimal polynomial
// of the next coefficient, which lies outside the configured tower.
struct PuiseuxRoot {
    Series value;
    std::optional<UniPoly> unrepresentable;

    bool exact() const { return value.exact() && !unrepresentable; }
};

struct PuiseuxResult {
    std::vector<PuiseuxRoot> roots;
    bool partial = false;
};

// Roots of g (d = 1) as fractional series known below the given order.
PuiseuxResult newton_puiseux_roots(const SeriesYPoly& g, const Rational& precision);

// Groups representable roots into Galois orbits, one branch per orbit, labelled prefix1, prefix2, ...
std::vector<Branch> branches_from_roots(const std::vector<PuiseuxRoot>& roots, const std::string& prefix = "f");
// Irreducible factors of g over the series ring, d = 1.
std::vector<SeriesYPoly> irreducible_factors(const SeriesYPoly& g, const Rational& precision);

// The product of the orbit of a branch root.
SeriesYPoly branch_polynomial(const Branch& b);

VerificationReport verify_derivative_charpoly(const KuoLuTree& t, const SeriesYPoly& f, long k);

// Defaults filtered by height separation.
std::vector<std::vector<Rational>> default_substitutions(std::size_t d, std::size_t count = 5);
bool separates_heights(const KuoLuTree& t, const std::vector<Rational>& r);

// Res_y(f^(k), p - T) after each x_i -> u^{r_i}, against the projected prediction.
VerificationReport verify_resultant_polytope(const KuoLuTree& t, const SeriesYPoly& f, const std::vector<std::size_t>& p_branches,
                                             const SeriesYPoly& p, long k, const std::vector<std::vector<Rational>>& batch);

// The higher Kuo-Lu clauses for d = 1, with roots of f from the tree.
VerificationReport verify_higher_kuo_lu(const KuoLuTree& t, const SeriesYPoly& f, long k, const Rational& precision);

}  // namespace qo
