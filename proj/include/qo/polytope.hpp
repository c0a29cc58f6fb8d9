#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qo/ypoly.hpp"

namespace qo {

using Point = std::vector<Rational>;

// conv(points) + nonnegative orthant, kept as its vertex set.
class NewtonPolytope {
public:
    NewtonPolytope() = default;  // empty, dimension 0
    static NewtonPolytope empty(std::size_t dim);
    static NewtonPolytope from_points(std::size_t dim, std::vector<Point> points);

    std::size_t dim() const { return dim_; }
    bool is_empty() const { return vertices_.empty(); }
    const std::vector<Point>& vertices() const { return vertices_; }
    // The orthant translated to a single point.
    bool is_monomial() const { return vertices_.size() == 1; }

    bool contains(const Point& p) const;
    // min <v, a> over the polytope; v must be nonnegative.
    Rational support(const std::vector<Rational>& v) const;
    NewtonPolytope scaled(const Rational& s) const;

    friend bool operator==(const NewtonPolytope& a, const NewtonPolytope& b)
    {
        return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
    }
    friend bool operator!=(const NewtonPolytope& a, const NewtonPolytope& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::size_t dim_ = 0;
    std::vector<Point> vertices_;
};

// Whether p lies in conv(points) + orthant.
bool in_hull_plus_orthant(const std::vector<Point>& points, const Point& p);

// Delta of a series (in Q^d) or of a y-polynomial (in Q^{d+1}, y last).
// Throws Indeterminate when unknown terms could still change the polytope.
NewtonPolytope newton_polytope(const Series& s);
NewtonPolytope newton_polytope(const SeriesYPoly& g);
// Delta(x^q) in Q^d.
NewtonPolytope monomial_polytope(const ExponentVec& q);

NewtonPolytope minkowski_sum(const NewtonPolytope& a, const NewtonPolytope& b);

// {q over k}; q absent means the infinite inclination, Delta(y^k).
struct ElementaryPolytope {
    std::optional<ExponentVec> q;
    Rational k;

    std::optional<ExponentVec> inclination() const;
    NewtonPolytope polytope() const;
    std::string to_string() const;
    friend bool operator==(const ElementaryPolytope& a, const ElementaryPolytope& b) { return a.q == b.q && a.k == b.k; }
};

struct NotPolygonal {
    std::string reason;
};
using Decomposition = std::variant<std::vector<ElementaryPolytope>, NotPolygonal>;

// Canonical representation sorted by increasing inclination, infinity last.
Decomposition canonical_decomposition(const NewtonPolytope& p);
NewtonPolytope sum_of(std::size_t dim, const std::vector<ElementaryPolytope>& parts);
std::string to_string(const std::vector<ElementaryPolytope>& parts);

// Terms of g minimizing a strictly positive weight; the face is compact.
SeriesYPoly symbolic_restriction(const SeriesYPoly& g, const std::vector<Rational>& weight);
// Terms of g on the segment [p1, p2], which must be an edge of Delta(g).
SeriesYPoly symbolic_restriction(const SeriesYPoly& g, const Point& p1, const Point& p2);

// Image under (a, b) -> (<r, a>, b) for the last coordinate b.
NewtonPolytope project(const NewtonPolytope& p, const std::vector<Rational>& r);

struct RondSchoberCertificate {
    ExponentVec q;
    int i0;
};
// Sufficient test for reducibility of a Weierstrass polynomial; nothing means no conclusion.
std::optional<RondSchoberCertificate> rond_schober_reducible(const SeriesYPoly& g);

// a "greater" b means a is strictly contained in b.
enum class PolytopeOrder { equal, greater, less, incomparable };
PolytopeOrder polytope_order(const NewtonPolytope& a, const NewtonPolytope& b);
std::string to_string(PolytopeOrder o);

// s * Delta, kept with its factor for display.
struct ScaledPolytope {
    Rational factor;
    NewtonPolytope base;

    NewtonPolytope value() const { return base.scaled(factor); }
    std::string to_string() const;
};

}  // namespace qo
