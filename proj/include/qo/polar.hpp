#pragma once

#include <string>
#include <vector>

#include "qo/charpoly.hpp"
#include "qo/polytope.hpp"

namespace qo {

// ((n-k)!/n!) d^k f/dy^k for 1 <= k < deg f.
SeriesYPoly normalized_derivative(const SeriesYPoly& f, long k);

// Res_y(g, p) by a division-free determinant of the Sylvester matrix.
Series resultant_y(const SeriesYPoly& g, const SeriesYPoly& p);

// (1/(deg g deg p)) Delta(Res_y(g, p)).
ScaledPolytope p_contact(const SeriesYPoly& g, const SeriesYPoly& p);

// q(p, B) for p the product of the given branches, with multiplicity.
ExponentVec branch_q(const KuoLuTree& t, int bar, const std::vector<std::size_t>& branches);
// cont_P(f_i, B) = (1/deg f_i) Delta(x^{q(f_i, B)}).
ScaledPolytope branch_contact(const KuoLuTree& t, int bar, std::size_t branch);
// Whether some root of the branch lies in the bar.
bool branch_meets(const KuoLuTree& t, int bar, std::size_t branch);

ScaledPolytope self_contact(const KuoLuTree& t, const EggersVertex& v);

// Sum over bars with t_k != 0 of {t_k q(p, B) over t_k}, in Q^{d+1} with T last.
// Throws HypothesisViolated when f is not Kuo-Lu k-regular.
NewtonPolytope predict_resultant_polytope(const KuoLuTree& t, const std::vector<std::size_t>& p_branches, long k);

enum class Relation { equal, at_least };

struct ContactRelation {
    std::size_t branch;
    Relation relation;
    ScaledPolytope value;     // cont_P(f_i, g) equals, or is at least, this
    std::string provenance;  // "theorem" or "theorem (k-regular clause)"
};

struct EggersFactorPrediction {
    int vertex;
    std::string name;
    long degree;
    UniPoly charpoly;  // monic F- of the vertex
    ScaledPolytope self_contact;
    std::vector<ContactRelation> relations;
    // Branches that may realize cont_P(f_i, g) = self-contact; one of them must.
    std::vector<std::size_t> witnesses;
};

// N(B) t_k(B) for every finite vertex, in vertex order.
std::vector<std::pair<int, long>> polar_degrees(const KuoLuTree& t, const EggersTree& e, long k);
// One prediction per finite vertex with t_k != 0.
std::vector<EggersFactorPrediction> eggers_factorization(const KuoLuTree& t, const EggersTree& e, long k);

struct MerleFactor {
    int i;               // 1-based index of the characteristic exponent
    ExponentVec h;
    long n_i;
    long e_i;
    long t_k;
    long degree;         // n_1...n_{i-1} t_k(B_i)
    UniPoly charpoly;    // monic F- at B_i
    ScaledPolytope self_contact;
    ALShape shape;       // refinement: p_i = p_{i0} p_{i1} ... p_{id}
    long deg_p0;         // a n_1...n_{i-1}
    long deg_pj;         // n_1...n_i
    std::string p0_kind; // "trivial", "quasi-ordinary", or "not necessarily quasi-ordinary"
};

struct MerlePrediction {
    std::vector<ExponentVec> exponents;  // h_1 < ... < h_s
    std::vector<long> n;                 // n_1, ..., n_s
    std::vector<long> e;                 // e_0, ..., e_s
    long i_k = 0;
    std::vector<MerleFactor> factors;    // i = 1..i_k
};

MerlePrediction merle_decomposition(const KuoLuTree& t, const EggersTree& e, long k);

}  // namespace qo
