#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qo/series.hpp"

namespace qo {

// One Newton-Puiseux root of an irreducible factor; its Galois orbit gives the factor.
struct Branch {
    std::string label;
    Series root;
    long denom = 1;
};

// x_i^{a/N} -> zeta_N^{j_i a} x_i^{a/N}.
Series apply_galois(const Series& s, long N, const std::vector<long>& j);
// Distinct images under all of mu_N^d, identity first.
std::vector<Series> galois_orbit(const Series& s, long N);
std::vector<Series> galois_orbit(const Branch& b);

struct ContactUndefined {};
using Contact = std::variant<Height, ContactUndefined>;

// O(a, b). A difference that vanishes within precision is infinite contact only when
// the series are declared the same root; otherwise it is indeterminate.
Contact contact(const Series& a, const Series& b, bool same_root = false);

// All roots of a product of branches, with the validated contact matrix.
struct RootSet {
    std::size_t nvars = 1;
    long conductor = 1;
    std::vector<Branch> branches;
    std::vector<Series> roots;
    std::vector<std::string> labels;
    std::vector<std::size_t> branch_of;
    std::vector<std::vector<Height>> contacts;

    std::size_t size() const { return roots.size(); }
    const Height& contact_of(std::size_t i, std::size_t j) const { return contacts[i][j]; }
};

// Expands orbits and checks that every contact is well-defined and that contacts
// against a common root are comparable. Failures name the offending roots.
RootSet expand_roots(const std::vector<Branch>& branches);

// Strong triangle inequality on every triple; returns the first violation, if any.
std::optional<std::string> check_strong_triangle(const RootSet& rs);

}  // namespace qo
