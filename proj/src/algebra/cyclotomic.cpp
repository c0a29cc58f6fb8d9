#include "qo/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "qo/error.hpp"

namespace qo {

long euler_phi(long n)
{
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

const QPoly& cyclotomic_polynomial(long n)
{
    static std::mutex mu;
    static std::map<long, QPoly> cache;
    if (n < 1) throw Error("cyclotomic polynomial of nonpositive index");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // z^n - 1 divided by Phi_d for proper divisors d; computed without recursion into the lock.
    std::vector<long> divisors;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    for (long d : divisors) {
        if (cache.count(d)) continue;
        QPoly p = QPoly::monomial(Rational(1), static_cast<std::size_t>(d)) - QPoly(Rational(1));
        for (long e : divisors) {
            if (e >= d) break;
            if (d % e == 0) p = exact_div(p, cache.at(e));
        }
        cache.emplace(d, p);
    }
    return cache.at(n);
}

namespace {

std::vector<Rational> reduce(long n, const std::vector<Rational>& powers)
{
    const QPoly& phi = cyclotomic_polynomial(n);
    std::size_t deg = static_cast<std::size_t>(phi.degree());
    std::vector<Rational> r = powers;
    const auto& pc = phi.coeffs();
    for (std::size_t i = r.size(); i-- > deg;) {
        if (is_zero(r[i])) continue;
        Rational t = r[i];
        for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= t * pc[j];
    }
    r.resize(deg, Rational(0));
    return r;
}

// Solves for x with sum_j x_j * cols[j] = rhs, if consistent.
bool solve_linear(std::vector<std::vector<Rational>> cols, std::vector<Rational> rhs, std::vector<Rational>& x)
{
    std::size_t rows = rhs.size(), ncols = cols.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < ncols; ++j) m[i][j] = cols[j][i];
        m[i][ncols] = rhs[i];
    }
    std::vector<long> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j <= ncols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(static_cast<long>(c));
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!is_zero(m[i][ncols])) return false;
    x.assign(ncols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) {
        auto c = static_cast<std::size_t>(pivot_col[i]);
        x[c] = m[i][ncols] / m[i][c];
    }
    return true;
}

}  // namespace

Cyclotomic Cyclotomic::from_powers(long n, const std::vector<Rational>& powers)
{
    if (n < 1) throw Error("conductor must be positive");
    Cyclotomic r(n, reduce(n, powers));
    r.shrink_if_rational();
    return r;
}

Cyclotomic Cyclotomic::zeta(long n, long k)
{
    if (n < 1) throw Error("zeta(N) needs N >= 1");
    long e = ((k % n) + n) % n;
    std::vector<Rational> p(static_cast<std::size_t>(e + 1), Rational(0));
    p[static_cast<std::size_t>(e)] = 1;
    return from_powers(n, p);
}

void Cyclotomic::shrink_if_rational()
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!qo::is_zero(c_[i])) return;
    if (n_ != 1) {
        Rational a = c_.empty() ? Rational(0) : c_[0];
        n_ = 1;
        c_ = {a};
    }
}

bool Cyclotomic::is_zero() const
{
    for (const auto& a : c_)
        if (!qo::is_zero(a)) return false;
    return true;
}

bool Cyclotomic::is_rational() const
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!qo::is_zero(c_[i])) return false;
    return true;
}

Rational Cyclotomic::rational_value() const
{
    if (!is_rational()) throw Error("not a rational number: " + to_string());
    return c_[0];
}

Cyclotomic Cyclotomic::lifted(long m) const
{
    if (m == n_) return *this;
    if (m % n_) throw Error("conductor lift to a non-multiple");
    long step = m / n_;
    std::vector<Rational> p(static_cast<std::size_t>(step) * c_.size(), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) p[i * static_cast<std::size_t>(step)] = c_[i];
    return Cyclotomic(m, reduce(m, p));
}

Cyclotomic Cyclotomic::canonical() const
{
    if (is_rational()) return Cyclotomic(c_[0]);
    for (long m = 3; m < n_; ++m) {
        if (n_ % m || m % 4 == 2) continue;
        std::vector<std::vector<Rational>> cols;
        for (long j = 0; j < euler_phi(m); ++j) cols.push_back(Cyclotomic::zeta(m, j).lifted(n_).c_);
        std::vector<Rational> x;
        if (solve_linear(cols, c_, x)) return Cyclotomic(m, x);
    }
    if (n_ % 4 == 2) {
        long m = n_ / 2;
        std::vector<std::vector<Rational>> cols;
        for (long j = 0; j < euler_phi(m); ++j) cols.push_back(Cyclotomic::zeta(m, j).lifted(n_).c_);
        std::vector<Rational> x;
        if (solve_linear(cols, c_, x)) return Cyclotomic(m, x);
    }
    return *this;
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero()) throw Error("division by zero in Q(zeta)");
    if (is_rational()) return Cyclotomic(Rational(1) / c_[0]);
    auto r = xgcd(QPoly(c_), cyclotomic_polynomial(n_));
    if (r.g.degree() != 0) throw Error("cyclotomic inverse failed");
    return from_powers(n_, r.s.coeffs());
}

Cyclotomic Cyclotomic::galois(long a) const
{
    if (std::gcd(((a % n_) + n_) % n_, n_) != 1 && n_ > 1) throw Error("galois exponent not a unit");
    if (n_ == 1) return *this;
    long am = ((a % n_) + n_) % n_;
    std::vector<Rational> p(static_cast<std::size_t>(n_), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        auto e = static_cast<std::size_t>((static_cast<long>(i) * am) % n_);
        p[e] += c_[i];
    }
    return from_powers(n_, p);
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.n_ == 1 && b.n_ == 1) return Cyclotomic(a.c_[0] + b.c_[0]);
    long m = lcm_long(a.n_, b.n_);
    Cyclotomic x = a.lifted(m), y = b.lifted(m);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    x.shrink_if_rational();
    return x;
}

Cyclotomic operator-(const Cyclotomic& a)
{
    Cyclotomic r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.n_ == 1) {
        if (qo::is_zero(a.c_[0])) return Cyclotomic();
        Cyclotomic r = b;
        for (auto& c : r.c_) c *= a.c_[0];
        return r;
    }
    if (b.n_ == 1) return b * a;
    long m = lcm_long(a.n_, b.n_);
    Cyclotomic x = a.lifted(m), y = b.lifted(m);
    std::vector<Rational> p(x.c_.size() + y.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        if (qo::is_zero(x.c_[i])) continue;
        for (std::size_t j = 0; j < y.c_.size(); ++j) p[i + j] += x.c_[i] * y.c_[j];
    }
    return Cyclotomic::from_powers(m, p);
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.n_ == b.n_) return a.c_ == b.c_;
    long m = lcm_long(a.n_, b.n_);
    return a.lifted(m).c_ == b.lifted(m).c_;
}

int compare(const Cyclotomic& a, const Cyclotomic& b)
{
    Cyclotomic x = a.canonical(), y = b.canonical();
    if (x.conductor() != y.conductor()) return x.conductor() < y.conductor() ? -1 : 1;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        int c = cmp(x.coeffs()[i], y.coeffs()[i]);
        if (c) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string Cyclotomic::to_string() const
{
    Cyclotomic c = canonical();
    if (c.n_ == 1) return c.c_[0].get_str();
    std::string out;
    for (std::size_t i = 0; i < c.c_.size(); ++i) {
        const Rational& a = c.c_[i];
        if (qo::is_zero(a)) continue;
        std::string mono = i == 0 ? "" : "zeta(" + std::to_string(c.n_) + ")" + (i == 1 ? "" : "^" + std::to_string(i));
        std::string term;
        if (mono.empty()) term = a.get_str();
        else if (a == 1) term = mono;
        else if (a == -1) term = "-" + mono;
        else term = a.get_str() + "*" + mono;
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out;
}

namespace {

Cyclotomic sqrt_prime(long p)
{
    if (p == 2) return Cyclotomic::zeta(8, 1) - Cyclotomic::zeta(8, 3);
    // Quadratic Gauss sum g, g^2 = (-1)^((p-1)/2) p.
    std::vector<Rational> powers(static_cast<std::size_t>(p), Rational(0));
    std::vector<bool> square(static_cast<std::size_t>(p), false);
    for (long a = 1; a < p; ++a) square[static_cast<std::size_t>((a * a) % p)] = true;
    for (long a = 1; a < p; ++a) powers[static_cast<std::size_t>(a)] = square[static_cast<std::size_t>(a)] ? 1 : -1;
    Cyclotomic g = Cyclotomic::from_powers(p, powers);
    if (p % 4 == 1) return g;
    return -(Cyclotomic::zeta(4, 1) * g);
}

Cyclotomic sqrt_integer(Integer n)
{
    Cyclotomic r(1);
    if (n < 0) {
        r = Cyclotomic::zeta(4, 1);
        n = -n;
    }
    if (n == 0) return Cyclotomic(0);
    Integer outside = 1;
    Integer p = 2;
    while (p * p <= n) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) outside *= p;
        if (e % 2) r = r * sqrt_prime(to_long(p));
        p += 1;
    }
    if (n > 1) r = r * sqrt_prime(to_long(n));
    return r * Cyclotomic(Rational(outside));
}

}  // namespace

Cyclotomic sqrt_rational(const Rational& a)
{
    // sqrt(p/q) = sqrt(p q) / q
    Integer num = a.get_num(), den = a.get_den();
    Cyclotomic s = sqrt_integer(num * den);
    return s * Cyclotomic(Rational(Integer(1), den));
}

bool as_rational_times_root_of_unity(const Cyclotomic& a, RootOfUnityForm& out)
{
    if (a.is_zero()) return false;
    Cyclotomic c = a.canonical();
    long n = c.conductor();
    long m = n % 2 ? 2 * n : n;
    for (long j = 0; j < m; ++j) {
        Cyclotomic t = c * Cyclotomic::zeta(m, -j);
        if (t.is_rational()) {
            out.r = t.rational_value();
            out.m = m;
            out.j = j;
            return true;
        }
    }
    return false;
}

}  // namespace qo
