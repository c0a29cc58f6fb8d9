#pragma once

#include <string>
#include <vector>

#include "qo/dense_poly.hpp"
#include "qo/rational.hpp"

namespace qo {

using QPoly = DensePoly<Rational>;

long euler_phi(long n);
long lcm_long(long a, long b);
// The n-th cyclotomic polynomial, cached.
const QPoly& cyclotomic_polynomial(long n);

// Element of Q(zeta_N), stored as phi(N) rational coefficients on 1, zeta, ..., zeta^(phi-1)
// reduced modulo the N-th cyclotomic polynomial. zeta_N = exp(2*pi*i/N).
class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_{Rational(0)} {}
    Cyclotomic(long a) : n_(1), c_{Rational(a)} {}
    Cyclotomic(const Rational& a) : n_(1), c_{a} {}

    // Reduces an arbitrary coefficient vector on powers of zeta_N.
    static Cyclotomic from_powers(long n, const std::vector<Rational>& powers);
    static Cyclotomic zeta(long n, long k = 1);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;

    // Same element written over a multiple m of the conductor.
    Cyclotomic lifted(long m) const;
    // Same element over the smallest conductor that contains it.
    Cyclotomic canonical() const;
    Cyclotomic inverse() const;
    // Automorphism zeta_N -> zeta_N^a, gcd(a, N) = 1.
    Cyclotomic galois(long a) const;
    Cyclotomic complex_conjugate() const { return galois(-1); }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string to_string() const;

private:
    Cyclotomic(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
    void shrink_if_rational();

    long n_;
    std::vector<Rational> c_;
};

inline bool is_zero(const Cyclotomic& a) { return a.is_zero(); }
inline std::string to_string(const Cyclotomic& a) { return a.to_string(); }

// Total order on canonical forms: conductor, then coefficients.
int compare(const Cyclotomic& a, const Cyclotomic& b);

// sqrt(a) for rational a, via Gauss sums; the root with nonnegative real part
// (a > 0) or positive imaginary part (a < 0).
Cyclotomic sqrt_rational(const Rational& a);

// Writes a as r * zeta_m^j with r rational, if possible (a != 0).
struct RootOfUnityForm {
    Rational r;
    long m = 1;
    long j = 0;
};
bool as_rational_times_root_of_unity(const Cyclotomic& a, RootOfUnityForm& out);

}  // namespace qo
