#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qo/error.hpp"

namespace qo {

// Ring operations needed by the determinant routines:
//   R zero(), R one(), bool is_zero(const R&), R div_exact(const R&, const R&).
template <class R>
using Matrix = std::vector<std::vector<R>>;

// Sylvester matrix of p (degree m) and q (degree n), coefficients low to high.
template <class R, class Ops>
Matrix<R> sylvester_matrix(const std::vector<R>& p, const std::vector<R>& q, const Ops& ops)
{
    if (p.empty() || q.empty()) throw Error("resultant of a zero polynomial");
    std::size_t m = p.size() - 1, n = q.size() - 1, size = m + n;
    Matrix<R> s(size, std::vector<R>(size, ops.zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = p[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = q[n - j];
    return s;
}

// Fraction-free Gaussian elimination (Bareiss); needs exact division.
template <class R, class Ops>
R bareiss_determinant(Matrix<R> a, const Ops& ops)
{
    std::size_t n = a.size();
    if (n == 0) return ops.one();
    R prev = ops.one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ops.is_zero(a[k][k])) {
            std::size_t p = k + 1;
            while (p < n && ops.is_zero(a[p][k])) ++p;
            if (p == n) return ops.zero();
            std::swap(a[k], a[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = ops.div_exact(t, prev);
            }
            a[i][k] = ops.zero();
        }
        prev = a[k][k];
    }
    R d = a[n - 1][n - 1];
    return negate ? ops.zero() - d : d;
}

// Coefficients of det(lambda I - A), leading first; division-free (Berkowitz).
template <class R, class Ops>
std::vector<R> berkowitz_charpoly(const Matrix<R>& a, const Ops& ops)
{
    std::size_t n = a.size();
    if (n == 0) return {ops.one()};
    // v holds the characteristic polynomial coefficients of the leading r x r block.
    std::vector<R> v{ops.one(), ops.zero() - a[0][0]};
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ...
        std::vector<R> col;
        col.push_back(ops.one());
        col.push_back(ops.zero() - a[r][r]);
        std::vector<R> c(r);
        for (std::size_t i = 0; i < r; ++i) c[i] = a[i][r];
        for (std::size_t k = 0; k < r; ++k) {
            R s = ops.zero();
            for (std::size_t i = 0; i < r; ++i) s = s + a[r][i] * c[i];
            col.push_back(ops.zero() - s);
            if (k + 1 == r) break;
            std::vector<R> nc(r, ops.zero());
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) nc[i] = nc[i] + a[i][j] * c[j];
            c = std::move(nc);
        }
        std::vector<R> nv(r + 2, ops.zero());
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= i && j < v.size(); ++j) nv[i] = nv[i] + col[i - j] * v[j];
        v = std::move(nv);
    }
    return v;
}

template <class R, class Ops>
R berkowitz_determinant(const Matrix<R>& a, const Ops& ops)
{
    std::size_t n = a.size();
    if (n == 0) return ops.one();
    R d = berkowitz_charpoly(a, ops)[n];
    return n % 2 ? ops.zero() - d : d;
}

}  // namespace qo
