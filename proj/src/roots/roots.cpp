#include "qo/roots.hpp"

#include "qo/error.hpp"

namespace qo {

Series apply_galois(const Series& s, long N, const std::vector<long>& j)
{
    if (j.size() != s.nvars()) throw Error("Galois element dimension mismatch");
    return s.map_coeffs([&](const ExponentVec& e, const Number& c) {
        Rational a = 0;
        for (std::size_t i = 0; i < e.size(); ++i) a += e[i] * N * j[i];
        if (!is_integer(a)) throw Error("exponent " + to_string(e) + " has denominator not dividing " + std::to_string(N));
        long k = to_long(a.get_num()) % N;
        if (k < 0) k += N;
        return k == 0 ? c : c * Number(Cyclotomic::zeta(N, k));
    });
}

std::vector<Series> galois_orbit(const Series& s, long N)
{
    if (N < 1) throw Error("conductor must be positive");
    if (N % s.denominator() != 0)
        throw Error("exponent denominators " + std::to_string(s.denominator()) + " do not divide " + std::to_string(N));
    const std::size_t d = s.nvars();
    std::vector<Series> out;
    std::vector<long> j(d, 0);
    for (;;) {
        Series img = apply_galois(s, N, j);
        bool seen = false;
        for (const auto& o : out)
            if (o == img) seen = true;
        if (!seen) out.push_back(std::move(img));
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (++j[i] < N) break;
            j[i] = 0;
            if (i == 0) return out;
        }
        if (d == 0) return out;
    }
}

std::vector<Series> galois_orbit(const Branch& b) { return galois_orbit(b.root, b.denom); }

Contact contact(const Series& a, const Series& b, bool same_root)
{
    Series diff = a - b;
    if (diff.is_zero()) {
        if (same_root || diff.exact()) return Height::infinity();
        throw Indeterminate("difference of distinct roots vanishes within precision");
    }
    auto id = initial_data(diff);
    if (std::holds_alternative<NotMonomialOrdered>(id)) return ContactUndefined{};
    // For d > 1 the unknown tail is assumed to lie above the known initial exponent.
    return Height(std::get<InitialTerm>(id).order);
}

RootSet expand_roots(const std::vector<Branch>& branches)
{
    if (branches.empty()) throw Error("no branches given");
    RootSet rs;
    rs.nvars = branches[0].root.nvars();
    rs.branches = branches;
    for (std::size_t b = 0; b < branches.size(); ++b) {
        const auto& br = branches[b];
        if (br.root.nvars() != rs.nvars) throw Error("branch " + br.label + " has a different number of variables");
        rs.conductor = lcm_long(rs.conductor, br.denom);
        auto orbit = galois_orbit(br);
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            rs.roots.push_back(orbit[i]);
            rs.labels.push_back(orbit.size() == 1 ? br.label : br.label + "." + std::to_string(i + 1));
            rs.branch_of.push_back(b);
        }
    }
    const std::size_t n = rs.roots.size();
    rs.contacts.assign(n, std::vector<Height>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Contact c = contact(rs.roots[i], rs.roots[j]);
            if (std::holds_alternative<ContactUndefined>(c))
                throw Error("not quasi-ordinary: contact of " + rs.labels[i] + " and " + rs.labels[j] + " is not well-defined");
            const Height& h = std::get<Height>(c);
            if (h.is_infinite()) throw Error("roots " + rs.labels[i] + " and " + rs.labels[j] + " coincide");
            rs.contacts[i][j] = rs.contacts[j][i] = h;
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (i != k && j != k && !comparable(rs.contacts[i][k], rs.contacts[j][k]))
                    throw Error("not quasi-ordinary: contacts of " + rs.labels[i] + " and " + rs.labels[j] + " with " +
                                rs.labels[k] + " are incomparable");
    return rs;
}

std::optional<std::string> check_strong_triangle(const RootSet& rs)
{
    const std::size_t n = rs.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const Height &a = rs.contacts[i][j], &b = rs.contacts[i][k], &c = rs.contacts[j][k];
                const Height& m = leq(b, c) ? b : c;
                if (!leq(m, a)) return rs.labels[i] + "," + rs.labels[j] + "," + rs.labels[k];
            }
    return std::nullopt;
}

}  // namespace qo
