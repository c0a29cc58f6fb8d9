#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qo/tree.hpp"
#include "qo/unipoly.hpp"
#include "qo/ypoly.hpp"

namespace qo {

// g(lambda_B + z x^h) = G(z) x^q + higher terms.
struct CharacteristicData {
    UniPoly G;  // with its true leading constant
    ExponentVec q;

    UniPoly monic() const { return G.monic(); }
};

struct Incompatible {
    std::string reason;
};
using CharResult = std::variant<CharacteristicData, Incompatible>;

// Direct substitution y = lambda + z x^h.
CharResult characteristic_data(const SeriesYPoly& g, const Series& lambda, const ExponentVec& h);
CharResult characteristic_data(const SeriesYPoly& g, const Bar& b);

// Closed form for the product of the given roots of the tree.
CharacteristicData characteristic_from_roots(const KuoLuTree& t, int bar, const std::vector<std::size_t>& roots);
// All roots of the tree: F_B.
CharacteristicData characteristic_of_f(const KuoLuTree& t, int bar);
std::vector<std::size_t> roots_of_branch(const RootSet& rs, std::size_t branch);

struct RegularitySplit {
    UniPoly plus;   // monic
    UniPoly minus;  // monic
    bool regular = false;
};

// F^{(k)} = F+ F- with F+ = prod_{m > k} S_m^{m-k}; requires 1 <= k < deg F.
RegularitySplit derivative_split(const UniPoly& F, long k);
// Definition with the degenerate cases: F^{(k)} = 0 or constant counts as regular.
bool is_k_regular(const UniPoly& F, long k);

struct RegularityReport {
    bool regular = true;
    std::vector<int> failing;  // bar indices
};
RegularityReport kuo_lu_regular(const KuoLuTree& t, long k);

struct ALShape {
    long a = 0;
    long b = 0;
    long d = 0;
    friend bool operator==(const ALShape& x, const ALShape& y) { return x.a == y.a && x.b == y.b && x.d == y.d; }
};
// Exponents of d^k/dz^k (z^n - c)^e = C z^a (z^n - c)^b prod_{i<=d} (z^n - c_i).
ALShape al_derivative_shape(long n, long e, long k);
// Reads the shape off an explicit derivative; nothing if it does not have that form.
std::optional<ALShape> observed_al_shape(const UniPoly& D, long n, const Number& c);

// G = z^j H(z^n) for some H.
bool has_power_shape(const UniPoly& G, long n);

}  // namespace qo
