#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qo {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p/q", or "p" for integers.
inline std::string to_string(const Rational& a) { return a.get_str(); }

Rational parse_rational(std::string_view text);

inline Integer floor(const Rational& a)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    return q;
}

inline Integer ceil(const Rational& a)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    return q;
}

inline bool is_integer(const Rational& a) { return a.get_den() == 1; }

Rational pow(const Rational& a, long e);

// Exact k-th root of a nonnegative rational, if it exists.
bool exact_root(const Rational& a, unsigned long k, Rational& out);

long to_long(const Integer& z);

}  // namespace qo
