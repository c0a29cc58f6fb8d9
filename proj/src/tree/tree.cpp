#include "qo/tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "qo/error.hpp"

namespace qo {

namespace {

Series center_of(const Series& root, const Height& h)
{
    if (h.is_infinite()) return root;
    Series c(root.nvars(), root.precision());
    for (const auto& [e, v] : root.terms())
        if (!leq(h.value(), e)) c.add_term(e, v);
    return c;
}

Number coefficient_at(const Series& root, const ExponentVec& h)
{
    if (root.precision() && total(h) >= *root.precision())
        throw Indeterminate("support point at x^" + to_string(h) + " is beyond the root precision");
    return root.coeff(h);
}

class Builder {
public:
    explicit Builder(const RootSet& rs) : rs_(rs) {}

    int build(std::vector<std::size_t> members, int parent)
    {
        int id = static_cast<int>(bars_.size());
        bars_.emplace_back();
        Bar b;
        b.parent = parent;
        b.members = members;
        if (parent >= 0) b.support = coefficient_at(rs_.roots[members[0]], bars_[static_cast<std::size_t>(parent)].height.value());
        if (members.size() == 1) {
            b.center = rs_.roots[members[0]];
            bars_[static_cast<std::size_t>(id)] = std::move(b);
            return id;
        }
        Height h = rs_.contact_of(members[0], members[1]);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (lt(rs_.contact_of(members[i], members[j]), h)) h = rs_.contact_of(members[i], members[j]);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!leq(h, rs_.contact_of(members[i], members[j])))
                    throw Error("no minimal contact among " + rs_.labels[members[i]] + " and " + rs_.labels[members[j]]);
        b.height = h;
        b.center = center_of(rs_.roots[members[0]], h);

        // Cosets of the relation O(a, b) > h.
        std::vector<std::vector<std::size_t>> cosets;
        for (std::size_t r : members) {
            bool placed = false;
            for (auto& c : cosets) {
                if (rs_.contact_of(c[0], r) != h) {
                    c.push_back(r);
                    placed = true;
                    break;
                }
            }
            if (!placed) cosets.push_back({r});
        }
        for (std::size_t a = 0; a < cosets.size(); ++a)
            for (std::size_t x = 0; x < cosets[a].size(); ++x) {
                for (std::size_t y = x + 1; y < cosets[a].size(); ++y)
                    if (rs_.contact_of(cosets[a][x], cosets[a][y]) == h) throw Error("contact relation is not an equivalence");
                for (std::size_t bb = a + 1; bb < cosets.size(); ++bb)
                    for (std::size_t r : cosets[bb])
                        if (rs_.contact_of(cosets[a][x], r) != h) throw Error("contact relation is not an equivalence");
            }
        bars_[static_cast<std::size_t>(id)] = std::move(b);
        std::vector<int> kids;
        for (auto& c : cosets) kids.push_back(build(c, id));
        std::sort(kids.begin(), kids.end(), [&](int x, int y) {
            const Bar &bx = bars_[static_cast<std::size_t>(x)], &by = bars_[static_cast<std::size_t>(y)];
            int c = compare(*bx.support, *by.support);
            if (c) return c < 0;
            return bx.members[0] < by.members[0];
        });
        for (std::size_t i = 0; i + 1 < kids.size(); ++i)
            if (compare(*bars_[static_cast<std::size_t>(kids[i])].support, *bars_[static_cast<std::size_t>(kids[i + 1])].support) == 0)
                throw Error("two postbars supported at the same point");
        bars_[static_cast<std::size_t>(id)].children = std::move(kids);
        return id;
    }

    std::vector<Bar> take() { return std::move(bars_); }

private:
    const RootSet& rs_;
    std::vector<Bar> bars_;
};

// |det| of the integer lattice spanned by rows, which must have full rank.
Integer lattice_determinant(std::vector<std::vector<Integer>> rows, std::size_t d)
{
    Integer det = 1;
    std::size_t top = 0;
    for (std::size_t c = 0; c < d; ++c) {
        for (;;) {
            std::size_t piv = rows.size();
            for (std::size_t r = top; r < rows.size(); ++r)
                if (rows[r][c] != 0 && (piv == rows.size() || abs(rows[r][c]) < abs(rows[piv][c]))) piv = r;
            if (piv == rows.size()) throw Error("lattice is not of full rank");
            std::swap(rows[top], rows[piv]);
            bool done = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                Integer q = rows[r][c] / rows[top][c];
                for (std::size_t k = c; k < d; ++k) rows[r][k] -= q * rows[top][k];
                if (rows[r][c] != 0) done = false;
            }
            if (done) break;
        }
        det *= abs(rows[top][c]);
        ++top;
    }
    return det;
}

}  // namespace

std::vector<int> KuoLuTree::bfs() const
{
    std::vector<int> out;
    std::deque<int> q{0};
    while (!q.empty()) {
        int b = q.front();
        q.pop_front();
        out.push_back(b);
        for (int c : bar(b).children) q.push_back(c);
    }
    return out;
}

std::vector<int> KuoLuTree::path_to(int b) const
{
    std::vector<int> p;
    for (int x = b; x >= 0; x = bar(x).parent) p.push_back(x);
    std::reverse(p.begin(), p.end());
    return p;
}

int KuoLuTree::leaf_of(std::size_t root) const
{
    for (std::size_t i = 0; i < bars_.size(); ++i)
        if (bars_[i].is_leaf() && bars_[i].members[0] == root) return static_cast<int>(i);
    throw Error("root without a leaf");
}

std::string KuoLuTree::name(int b) const
{
    const Bar& x = bar(b);
    if (x.is_leaf()) return roots_.labels[x.members[0]];
    std::vector<int> order = bfs();
    int idx = 0;
    for (int o : order) {
        if (!bar(o).is_leaf()) ++idx;
        if (o == b) break;
    }
    return "B" + std::to_string(idx);
}

KuoLuTree build_kuo_lu(const RootSet& roots)
{
    if (roots.size() == 0) throw Error("empty root set");
    std::vector<std::size_t> all(roots.size());
    std::iota(all.begin(), all.end(), 0);
    Builder b(roots);
    b.build(all, -1);
    return KuoLuTree(roots, b.take());
}

std::vector<BarCounts> bar_counts(const KuoLuTree& t, long k)
{
    long n = static_cast<long>(t.degree());
    if (k < 1 || k >= n) throw Error("k = " + std::to_string(k) + " out of range 1.." + std::to_string(n - 1));
    std::vector<BarCounts> out(t.bars().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].m = static_cast<long>(t.bars()[i].m());
        out[i].n_k = std::max(out[i].m - k, 0L);
        out[i].in_T_k = out[i].m >= k;
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        long s = 0;
        for (int c : t.bars()[i].children) s += out[static_cast<std::size_t>(c)].n_k;
        out[i].t_k = out[i].n_k - s;
    }
    return out;
}

long ramification_index(const Series& lambda, const ExponentVec& h)
{
    const std::size_t d = h.size();
    std::vector<ExponentVec> gens;
    for (const auto& [e, c] : lambda.terms()) gens.push_back(e);
    long D = common_denominator(h);
    for (const auto& g : gens) D = lcm_long(D, common_denominator(g));
    auto to_int = [&](const ExponentVec& e) {
        std::vector<Integer> v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = Rational(e[i] * D).get_num();
        return v;
    };
    std::vector<std::vector<Integer>> rows;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Integer> v(d, Integer(0));
        v[i] = D;
        rows.push_back(v);
    }
    for (const auto& g : gens) rows.push_back(to_int(g));
    Integer base = lattice_determinant(rows, d);
    rows.push_back(to_int(h));
    Integer ext = lattice_determinant(rows, d);
    return to_long(Integer(base / ext));
}

std::vector<int> EggersTree::branch_path(std::size_t branch) const
{
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (v_[i].leaf_branch == branch) {
            std::vector<int> p;
            for (int x = static_cast<int>(i); x >= 0; x = v_[static_cast<std::size_t>(x)].parent) p.push_back(x);
            std::reverse(p.begin(), p.end());
            return p;
        }
    }
    throw Error("branch without a leaf");
}

EggersTree build_eggers(const KuoLuTree& t)
{
    const RootSet& rs = t.roots();
    const long N = rs.conductor;
    std::vector<int> class_of(t.bars().size(), -1);
    std::vector<EggersVertex> verts;
    int finite = 0;
    for (int b : t.bfs()) {
        if (class_of[static_cast<std::size_t>(b)] >= 0) continue;
        const Bar& bar = t.bar(b);
        EggersVertex v;
        v.height = bar.height;
        auto orbit = galois_orbit(bar.center, N);
        for (int o : t.bfs()) {
            const Bar& other = t.bar(o);
            if (class_of[static_cast<std::size_t>(o)] >= 0 || other.height != bar.height) continue;
            if (std::find(orbit.begin(), orbit.end(), other.center) == orbit.end()) continue;
            class_of[static_cast<std::size_t>(o)] = static_cast<int>(verts.size());
            v.bars.push_back(o);
        }
        v.N = static_cast<long>(v.bars.size());
        if (bar.is_leaf()) {
            v.leaf_branch = rs.branch_of[bar.members[0]];
            v.name = rs.branches[*v.leaf_branch].label;
        } else {
            v.name = "B" + std::to_string(++finite);
            v.n = ramification_index(bar.center, bar.height.value());
        }
        verts.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
        int p = t.bar(verts[i].bars[0]).parent;
        if (p < 0) continue;
        verts[i].parent = class_of[static_cast<std::size_t>(p)];
        for (int b : verts[i].bars)
            if (class_of[static_cast<std::size_t>(t.bar(b).parent)] != verts[i].parent)
                throw Error("conjugate bars with non-conjugate parents");
        verts[static_cast<std::size_t>(verts[i].parent)].children.push_back(static_cast<int>(i));
    }
    // Dashed: no two roots of the branch in a bar of the class have contact h(B).
    for (auto& v : verts) {
        if (v.is_leaf()) continue;
        for (int b : v.bars) {
            const auto& mem = t.bar(b).members;
            for (std::size_t r : mem) v.dashed.emplace(rs.branch_of[r], true);
            for (std::size_t i = 0; i < mem.size(); ++i)
                for (std::size_t j = i + 1; j < mem.size(); ++j)
                    if (rs.branch_of[mem[i]] == rs.branch_of[mem[j]] && rs.contact_of(mem[i], mem[j]) == v.height)
                        v.dashed[rs.branch_of[mem[i]]] = false;
        }
    }
    return EggersTree(std::move(verts), std::move(class_of));
}

}  // namespace qo
