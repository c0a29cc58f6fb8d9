#pragma once

#include <map>

#include "qo/dense_poly.hpp"
#include "qo/number.hpp"

namespace qo {

// Univariate polynomial over the coefficient field, e.g. characteristic polynomials in z.
using UniPoly = DensePoly<Number>;

Rational factorial(unsigned n);

// {m -> S_m}: S_m monic squarefree pairwise coprime, prod S_m^m = p up to a constant.
std::map<unsigned, UniPoly> squarefree_decomposition(const UniPoly& p);

// k-th derivative; normalized scales by (n-k)!/n!, n = deg p.
UniPoly poly_derivative(const UniPoly& p, int k, bool normalized = false);

Number resultant(const UniPoly& p, const UniPoly& q);

// Roots of p in the cyclotomic tower with multiplicities; the unsolved part is returned
// as monic squarefree polynomials grouped by multiplicity.
struct RootSplit {
    std::vector<std::pair<Number, unsigned>> roots;
    std::vector<std::pair<UniPoly, unsigned>> unsolved;
};
RootSplit solve_in_tower(const UniPoly& p);

// Multiplicity of a as a root of p (p nonzero).
unsigned root_multiplicity(const UniPoly& p, const Number& a);

}  // namespace qo
