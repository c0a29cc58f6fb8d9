#include "qo/lp.hpp"

#include "qo/error.hpp"

namespace qo {

std::optional<std::vector<Rational>> lp_feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b)
{
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    if (b.size() != m) throw Error("lp: row count mismatch");
    if (m == 0) return std::vector<Rational>(n, Rational(0));

    // Columns: n structural, m artificial, then the right-hand side.
    const std::size_t cols = n + m + 1;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (A[i].size() != n) throw Error("lp: ragged matrix");
        int s = sgn(b[i]) < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = s * A[i][j];
        t[i][n + i] = 1;
        t[i][cols - 1] = s * b[i];
        basis[i] = n + i;
    }
    // Reduced costs for minimizing the sum of artificials.
    std::vector<Rational> cost(cols, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (j < n || j == cols - 1) cost[j] -= t[i][j];

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j + 1 < cols; ++j) {
            if (sgn(cost[j]) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(t[i][enter]) <= 0) continue;
            Rational ratio = t[i][cols - 1] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded direction; cannot occur for the phase-one objective
        Rational piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(t[i][enter]) == 0) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
        }
        if (sgn(cost[enter]) != 0) {
            Rational f = cost[enter];
            for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    if (sgn(cost[cols - 1]) != 0) return std::nullopt;
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t[i][cols - 1];
    return x;
}

}  // namespace qo
