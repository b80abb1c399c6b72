#pragma once

#include "tropical/feasibility.hpp"
#include "tropical/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tropical {

/// Point of R^{n+1}: exponent vector followed by the vertical coordinate.
using LiftedPoint = RationalVector;

enum class ConstraintKind { Inequality, Equality };

/// <normal, p> >= offset (or == offset). The normal is a primitive integer
/// vector; inequalities have a nonnegative vertical component and equalities
/// a zero one.
struct Facet {
    IntegerVector normal;
    Rational offset;
    ConstraintKind kind = ConstraintKind::Inequality;

    /// <normal, p> - offset
    Rational slack(const LiftedPoint &p) const { return dot(normal, p) - offset; }
    bool satisfied_by(const LiftedPoint &p) const;
    bool tight_at(const LiftedPoint &p) const { return slack(p) == 0; }

    friend bool operator==(const Facet &, const Facet &) = default;
};

/// Convex hull of the upward vertical rays based at the lifted monomials,
/// kept in both descriptions. Vertices and constraints are in canonical
/// (lexicographic) order; equalities describe the affine hull when the
/// polyhedron is not full-dimensional.
class NewtonPolyhedron {
  public:
    std::size_t num_vars() const noexcept { return n_; }
    std::size_t ambient_dim() const noexcept { return n_ + 1; }
    const std::vector<LiftedPoint> &apexes() const noexcept { return apexes_; }
    const std::vector<LiftedPoint> &vertices() const noexcept { return vertices_; }
    const std::vector<Facet> &constraints() const noexcept { return constraints_; }

    bool full_dimensional() const noexcept;

    /// Index of v in vertices(), or nullopt.
    std::optional<std::size_t> vertex_index(const LiftedPoint &v) const;

    /// Constraints tight at vertex i (all equalities included), ascending.
    const std::vector<std::size_t> &tight_at_vertex(std::size_t i) const { return tight_[i]; }

    /// Bounded edges as pairs of vertex indices (i < j), lexicographic.
    const std::vector<std::pair<std::size_t, std::size_t>> &edges() const noexcept { return edges_; }

    /// Vertex indices joined to vertex i by a bounded edge.
    std::vector<std::size_t> neighbors(std::size_t i) const;

    friend NewtonPolyhedron newton_polyhedron(const Polynomial &f);

  private:
    NewtonPolyhedron() = default;

    std::size_t n_ = 0;
    std::vector<LiftedPoint> apexes_;
    std::vector<LiftedPoint> vertices_;
    std::vector<Facet> constraints_;
    std::vector<std::vector<std::size_t>> tight_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

LiftedPoint lift(const Monomial &m);

NewtonPolyhedron newton_polyhedron(const Polynomial &f);

/// Extreme points in lexicographic order.
inline const std::vector<LiftedPoint> &vertices(const NewtonPolyhedron &p) { return p.vertices(); }

/// All equalities plus the inequalities tight at v. Throws DomainError if v
/// is not a vertex of p.
std::vector<std::size_t> active_constraints(const NewtonPolyhedron &p, const LiftedPoint &v);

/// min over p of <c, .>; nullopt encodes -inf (c has negative vertical part).
std::optional<Rational> support_min(const NewtonPolyhedron &p, const RationalVector &c);

namespace detail {

struct HullDescription {
    std::vector<Facet> equalities;
    std::vector<Facet> inequalities;
    std::vector<std::vector<std::size_t>> incident; // per inequality: indices of tight points
};

/// Facet description of conv(points) + cone(e_last) in R^dim by exact double
/// description on the homogenized dual cone.
HullDescription vertical_hull(std::size_t dim, const std::vector<LiftedPoint> &points);

} // namespace detail

} // namespace tropical
