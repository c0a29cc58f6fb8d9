#include "qo/polytope.hpp"

#include <algorithm>

#include "qo/error.hpp"
#include "qo/lp.hpp"

namespace qo {

namespace {

bool dominates(const Point& p, const Point& r)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] < r[i]) return false;
    return true;
}

std::vector<Point> reduce_to_vertices(std::vector<Point> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Point> minimal;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pts.size() && !dominated; ++j)
            dominated = i != j && dominates(pts[i], pts[j]);
        if (!dominated) minimal.push_back(pts[i]);
    }
    // Drop points in the hull of the remaining ones, one at a time.
    std::vector<Point> out = minimal;
    for (std::size_t i = 0; i < out.size();) {
        std::vector<Point> others;
        for (std::size_t j = 0; j < out.size(); ++j)
            if (j != i) others.push_back(out[j]);
        if (!others.empty() && in_hull_plus_orthant(others, out[i])) out.erase(out.begin() + static_cast<long>(i));
        else ++i;
    }
    return out;
}

std::string point_string(const Point& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += p[i].get_str();
    }
    return s + ")";
}

Rational dot_point(const std::vector<Rational>& w, const Point& p)
{
    Rational s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += w[i] * p[i];
    return s;
}

}  // namespace

bool in_hull_plus_orthant(const std::vector<Point>& points, const Point& p)
{
    for (const auto& v : points)
        if (dominates(p, v)) return true;
    if (points.size() < 2) return false;
    const std::size_t n = points.size(), D = p.size();
    // sum l_j P_j + s = p, sum l_j = 1, l, s >= 0.
    std::vector<std::vector<Rational>> A(D + 1, std::vector<Rational>(n + D, Rational(0)));
    std::vector<Rational> b(D + 1);
    for (std::size_t c = 0; c < D; ++c) {
        for (std::size_t j = 0; j < n; ++j) A[c][j] = points[j][c];
        A[c][n + c] = 1;
        b[c] = p[c];
    }
    for (std::size_t j = 0; j < n; ++j) A[D][j] = 1;
    b[D] = 1;
    return lp_feasible(A, b).has_value();
}

NewtonPolytope NewtonPolytope::empty(std::size_t dim)
{
    NewtonPolytope p;
    p.dim_ = dim;
    return p;
}

NewtonPolytope NewtonPolytope::from_points(std::size_t dim, std::vector<Point> points)
{
    for (const auto& q : points)
        if (q.size() != dim) throw Error("point dimension mismatch");
    NewtonPolytope p;
    p.dim_ = dim;
    p.vertices_ = reduce_to_vertices(std::move(points));
    return p;
}

bool NewtonPolytope::contains(const Point& p) const
{
    if (p.size() != dim_) throw Error("point dimension mismatch");
    return !vertices_.empty() && in_hull_plus_orthant(vertices_, p);
}

Rational NewtonPolytope::support(const std::vector<Rational>& v) const
{
    if (v.size() != dim_) throw Error("support vector dimension mismatch");
    if (vertices_.empty()) throw Error("support function of the empty polytope");
    for (const auto& a : v)
        if (sgn(a) < 0) throw Error("support vector must be nonnegative");
    Rational best = dot_point(v, vertices_[0]);
    for (const auto& p : vertices_) {
        Rational s = dot_point(v, p);
        if (s < best) best = s;
    }
    return best;
}

NewtonPolytope NewtonPolytope::scaled(const Rational& s) const
{
    if (sgn(s) <= 0) throw Error("polytope scale must be positive");
    NewtonPolytope r = *this;
    for (auto& p : r.vertices_)
        for (auto& a : p) a *= s;
    return r;
}

std::string NewtonPolytope::to_string() const
{
    if (vertices_.empty()) return "empty";
    if (vertices_.size() == 1) return "Delta(x^" + (dim_ == 1 ? vertices_[0][0].get_str() : point_string(vertices_[0])) + ")";
    std::string s = "conv{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) s += ",";
        s += point_string(vertices_[i]);
    }
    return s + "}+orthant";
}

namespace {

// Points of the support plus, for inexact coefficients, the corners of the unknown region.
void collect(const Series& s, std::optional<long> y, std::vector<Point>& known, std::vector<Point>& unknown)
{
    const std::size_t d = s.nvars();
    for (const auto& [e, c] : s.terms()) {
        Point p = e;
        if (y) p.emplace_back(*y);
        known.push_back(std::move(p));
    }
    if (!s.precision()) return;
    for (std::size_t i = 0; i < d; ++i) {
        Point p = zero_exponent(d);
        p[i] = *s.precision();
        if (y) p.emplace_back(*y);
        unknown.push_back(std::move(p));
    }
}

NewtonPolytope certified(std::size_t dim, std::vector<Point> known, const std::vector<Point>& unknown)
{
    NewtonPolytope p = NewtonPolytope::from_points(dim, std::move(known));
    for (const auto& u : unknown)
        if (p.is_empty() || !p.contains(u)) throw Indeterminate("Newton polytope depends on unknown terms");
    return p;
}

}  // namespace

NewtonPolytope newton_polytope(const Series& s)
{
    std::vector<Point> known, unknown;
    collect(s, std::nullopt, known, unknown);
    if (known.empty() && unknown.empty()) return NewtonPolytope::empty(s.nvars());
    return certified(s.nvars(), std::move(known), unknown);
}

NewtonPolytope newton_polytope(const SeriesYPoly& g)
{
    std::vector<Point> known, unknown;
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) collect(g.coeffs()[i], static_cast<long>(i), known, unknown);
    if (known.empty() && unknown.empty()) return NewtonPolytope::empty(g.nvars() + 1);
    return certified(g.nvars() + 1, std::move(known), unknown);
}

NewtonPolytope monomial_polytope(const ExponentVec& q) { return NewtonPolytope::from_points(q.size(), {q}); }

NewtonPolytope minkowski_sum(const NewtonPolytope& a, const NewtonPolytope& b)
{
    if (a.dim() != b.dim()) throw Error("Minkowski sum of polytopes of different dimension");
    if (a.is_empty() || b.is_empty()) return NewtonPolytope::empty(a.dim());
    std::vector<Point> pts;
    for (const auto& p : a.vertices())
        for (const auto& q : b.vertices()) pts.push_back(add(p, q));
    return NewtonPolytope::from_points(a.dim(), std::move(pts));
}

std::optional<ExponentVec> ElementaryPolytope::inclination() const
{
    if (!q) return std::nullopt;
    return scale(*q, 1 / k);
}

NewtonPolytope ElementaryPolytope::polytope() const
{
    std::size_t dim = q ? q->size() + 1 : 0;
    if (!q) throw Error("infinite elementary polytope needs an explicit dimension");
    Point top = zero_exponent(dim);
    top.back() = k;
    Point bottom = *q;
    bottom.emplace_back(0);
    return NewtonPolytope::from_points(dim, {top, bottom});
}

std::string ElementaryPolytope::to_string() const
{
    return "{" + (q ? qo::to_string(*q) : std::string("inf")) + " over " + k.get_str() + "}";
}

std::string to_string(const std::vector<ElementaryPolytope>& parts)
{
    std::string s;
    for (const auto& e : parts) s += (s.empty() ? "" : " + ") + e.to_string();
    return s.empty() ? "0" : s;
}

NewtonPolytope sum_of(std::size_t dim, const std::vector<ElementaryPolytope>& parts)
{
    NewtonPolytope acc = NewtonPolytope::from_points(dim, {zero_exponent(dim)});
    for (const auto& e : parts) {
        if (e.q) {
            acc = minkowski_sum(acc, e.polytope());
        } else {
            Point p = zero_exponent(dim);
            p.back() = e.k;
            acc = minkowski_sum(acc, NewtonPolytope::from_points(dim, {p}));
        }
    }
    return acc;
}

Decomposition canonical_decomposition(const NewtonPolytope& p)
{
    if (p.is_empty()) throw Error("canonical decomposition of the empty polytope");
    std::vector<Point> v = p.vertices();
    std::sort(v.begin(), v.end(), [](const Point& a, const Point& b) { return a.back() > b.back(); });
    const std::size_t d = p.dim() - 1;
    for (std::size_t i = 0; i < d; ++i)
        if (sgn(v[0][i]) != 0) return NotPolygonal{"top vertex is not on the y-axis"};
    std::vector<ElementaryPolytope> out;
    std::optional<ExponentVec> last;
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
        if (v[j].back() == v[j + 1].back()) return NotPolygonal{"two vertices at the same y-level"};
        Rational k = v[j].back() - v[j + 1].back();
        ExponentVec q(v[j + 1].begin(), v[j + 1].end() - 1);
        q = sub(q, ExponentVec(v[j].begin(), v[j].end() - 1));
        ExponentVec incl = scale(q, 1 / k);
        if (last && !(leq(*last, incl) && *last != incl)) return NotPolygonal{"edge inclinations are not increasing"};
        last = incl;
        out.push_back({q, k});
    }
    if (sgn(v.back().back()) > 0) out.push_back({std::nullopt, v.back().back()});
    if (sum_of(p.dim(), out) != p) return NotPolygonal{"compact faces of dimension above one"};
    return out;
}

SeriesYPoly symbolic_restriction(const SeriesYPoly& g, const std::vector<Rational>& weight)
{
    const std::size_t d = g.nvars();
    if (weight.size() != d + 1) throw Error("weight dimension mismatch");
    for (const auto& w : weight)
        if (sgn(w) <= 0) throw Error("weight must be strictly positive");
    std::optional<Rational> best;
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
        for (const auto& [e, c] : g.coeffs()[i].terms()) {
            Rational s = dot(std::vector<Rational>(weight.begin(), weight.end() - 1), e) + weight.back() * static_cast<long>(i);
            if (!best || s < *best) best = s;
        }
    }
    Rational wmin = *std::min_element(weight.begin(), weight.end() - 1);
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
        const auto& pr = g.coeffs()[i].precision();
        if (pr && (!best || *pr * wmin + weight.back() * static_cast<long>(i) <= *best))
            throw Indeterminate("face depends on unknown terms");
    }
    std::vector<Series> out(g.coeffs().size(), Series(d));
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
        for (const auto& [e, c] : g.coeffs()[i].terms()) {
            Rational s = dot(std::vector<Rational>(weight.begin(), weight.end() - 1), e) + weight.back() * static_cast<long>(i);
            if (s == *best) out[i].add_term(e, c);
        }
    }
    return SeriesYPoly(d, std::move(out));
}

SeriesYPoly symbolic_restriction(const SeriesYPoly& g, const Point& p1, const Point& p2)
{
    NewtonPolytope P = newton_polytope(g);
    const auto& V = P.vertices();
    if (std::find(V.begin(), V.end(), p1) == V.end() || std::find(V.begin(), V.end(), p2) == V.end() || p1 == p2)
        throw Error("segment endpoints are not distinct vertices of the Newton polytope");
    const std::size_t D = P.dim();
    // w = 1 + w', <w, p2 - p1> = 0, <w, v - p1> >= 1 for the other vertices.
    std::vector<Point> others;
    for (const auto& v : V)
        if (v != p1 && v != p2) others.push_back(v);
    const std::size_t n = D + others.size();
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    Point diff = sub(p2, p1);
    std::vector<Rational> row(n, Rational(0));
    Rational rhs = 0;
    for (std::size_t c = 0; c < D; ++c) {
        row[c] = diff[c];
        rhs -= diff[c];
    }
    A.push_back(row);
    b.push_back(rhs);
    for (std::size_t j = 0; j < others.size(); ++j) {
        std::vector<Rational> r(n, Rational(0));
        Point dv = sub(others[j], p1);
        Rational s = 1;
        for (std::size_t c = 0; c < D; ++c) {
            r[c] = dv[c];
            s -= dv[c];
        }
        r[D + j] = -1;
        A.push_back(r);
        b.push_back(s);
    }
    auto sol = lp_feasible(A, b);
    if (!sol) throw Error("segment is not an edge of the Newton polytope");
    std::vector<Rational> w(D);
    for (std::size_t c = 0; c < D; ++c) w[c] = 1 + (*sol)[c];
    return symbolic_restriction(g, w);
}

NewtonPolytope project(const NewtonPolytope& p, const std::vector<Rational>& r)
{
    if (r.size() + 1 != p.dim()) throw Error("projection weight dimension mismatch");
    for (const auto& a : r)
        if (sgn(a) <= 0) throw Error("projection weights must be positive");
    if (p.is_empty()) return NewtonPolytope::empty(2);
    std::vector<Point> pts;
    for (const auto& v : p.vertices()) pts.push_back({dot(r, ExponentVec(v.begin(), v.end() - 1)), v.back()});
    return NewtonPolytope::from_points(2, std::move(pts));
}

std::optional<RondSchoberCertificate> rond_schober_reducible(const SeriesYPoly& g)
{
    if (!g.is_weierstrass()) throw Error("Rond-Schober test needs a Weierstrass polynomial");
    const long m = g.degree();
    const std::size_t d = g.nvars();
    if (m < 2) throw Error("Rond-Schober test needs degree at least 2");
    auto c = [&](long i) { return g.coeff(static_cast<std::size_t>(m - i)); };

    // Every exponent of c_i is >= i q; unknown tails are certified only when d = 1.
    auto divisible = [&](const Series& s, const ExponentVec& iq) {
        for (const auto& [e, v] : s.terms())
            if (!leq(iq, e)) return false;
        if (s.precision()) {
            if (d != 1) throw Indeterminate("divisibility of a truncated coefficient");
            if (*s.precision() < iq[0]) throw Indeterminate("divisibility of a truncated coefficient");
        }
        return true;
    };

    for (long i0 = m - 1; i0 >= 1; --i0) {
        const Series ci0 = c(i0);
        if (ci0.is_zero()) continue;
        auto id = initial_data(ci0);
        if (!std::holds_alternative<InitialTerm>(id)) continue;
        ExponentVec q = scale(std::get<InitialTerm>(id).order, Rational(1, i0));
        bool ok = true;
        for (long i = 1; i <= m && ok; ++i) ok = divisible(c(i), scale(q, Rational(i)));
        if (!ok) continue;
        if (ci0.precision() && d != 1) throw Indeterminate("unit part of a truncated coefficient");
        ExponentVec mq = scale(q, Rational(m));
        const Series cm = c(m);
        if (cm.precision() && *cm.precision() <= total(mq)) throw Indeterminate("term of c_m at m*q");
        if (!cm.terms().count(mq)) return RondSchoberCertificate{q, static_cast<int>(i0)};
    }
    return std::nullopt;
}

PolytopeOrder polytope_order(const NewtonPolytope& a, const NewtonPolytope& b)
{
    if (a.dim() != b.dim()) throw Error("comparing polytopes of different dimension");
    auto subset = [](const NewtonPolytope& x, const NewtonPolytope& y) {
        if (x.is_empty()) return true;
        if (y.is_empty()) return false;
        for (const auto& v : x.vertices())
            if (!y.contains(v)) return false;
        return true;
    };
    bool ab = subset(a, b), ba = subset(b, a);
    if (ab && ba) return PolytopeOrder::equal;
    if (ab) return PolytopeOrder::greater;
    if (ba) return PolytopeOrder::less;
    return PolytopeOrder::incomparable;
}

std::string to_string(PolytopeOrder o)
{
    switch (o) {
    case PolytopeOrder::equal: return "equal";
    case PolytopeOrder::greater: return "greater";
    case PolytopeOrder::less: return "less";
    case PolytopeOrder::incomparable: return "incomparable";
    }
    return "";
}

std::string ScaledPolytope::to_string() const
{
    return factor == 1 ? base.to_string() : factor.get_str() + "*" + base.to_string();
}

}  // namespace qo
