#include "qo/rational.hpp"

#include "qo/error.hpp"

namespace qo {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw Error("bad rational literal '" + s + "'");
    if (r.get_den() == 0) throw Error("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

Rational pow(const Rational& a, long e)
{
    if (e < 0) {
        if (is_zero(a)) throw Error("zero to a negative power");
        return pow(Rational(1) / a, -e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), a.get_den_mpz_t(), static_cast<unsigned long>(e));
    Rational r(n, d);
    r.canonicalize();
    return r;
}

bool exact_root(const Rational& a, unsigned long k, Rational& out)
{
    if (sgn(a) < 0 || k == 0) return false;
    Integer n, d;
    if (!mpz_root(n.get_mpz_t(), a.get_num_mpz_t(), k)) return false;
    if (!mpz_root(d.get_mpz_t(), a.get_den_mpz_t(), k)) return false;
    out = Rational(n, d);
    out.canonicalize();
    return true;
}

long to_long(const Integer& z)
{
    if (!z.fits_slong_p()) throw Error("integer out of range: " + z.get_str());
    return z.get_si();
}

}  // namespace qo
