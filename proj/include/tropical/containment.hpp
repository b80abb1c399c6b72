#pragma once

#include "tropical/geometry.hpp"

#include <optional>
#include <vector>

namespace tropical {

/// Upper end of the feasible homothety interval (0, t_max]. Unbounded when
/// no constraint of the container ever binds.
struct ScaleBound {
    std::optional<Rational> finite; // nullopt means +inf

    bool is_infinite() const noexcept { return !finite.has_value(); }
    /// min(t_max, 1)
    Rational clamped() const { return finite && *finite < 1 ? *finite : Rational(1); }

    friend bool operator==(const ScaleBound &, const ScaleBound &) = default;
};

/// The shift s = vertex - t * anchor maps the anchor onto the vertex and
/// s + t * N(f) lies inside N(g) for every 0 < t <= t_max.
struct VertexCertificate {
    LiftedPoint vertex;
    LiftedPoint anchor;
    ScaleBound t_max;
};

enum class Verdict { Contained, NotContained };

struct ContainmentReport {
    Verdict verdict = Verdict::Contained;
    std::vector<VertexCertificate> certificates; // one per vertex of N(g) when contained
    std::optional<LiftedPoint> failing_vertex;   // first failing vertex, canonical order
    std::vector<LiftedPoint> all_failing;        // filled only in all-failing mode
    bool witness_searched = false;
    std::optional<SlopePoint> witness;           // in Trop(f) but not in Trop(g)
    std::optional<Rational> t0;                  // common scale, when contained

    bool contained() const noexcept { return verdict == Verdict::Contained; }
};

struct ContainmentOptions {
    bool search_witness = true;
    bool all_failing = false;
};

/// Supremum of the t > 0 for which v + t (u' - u) satisfies every constraint
/// of ng for all vertices u' of N(f). nullopt when no t > 0 works.
/// Throws DomainError if v or u is not a vertex.
std::optional<ScaleBound> anchor_feasible(const std::vector<LiftedPoint> &vf,
                                          const NewtonPolyhedron &ng, const LiftedPoint &v,
                                          const LiftedPoint &u);

/// First feasible anchor in canonical order, or nullopt.
std::optional<VertexCertificate> inscribe_at_vertex(const NewtonPolyhedron &nf,
                                                    const NewtonPolyhedron &ng,
                                                    const LiftedPoint &v);

/// Every feasible anchor at v (exhaustive; used to study anchor uniqueness).
std::vector<VertexCertificate> feasible_anchors(const NewtonPolyhedron &nf,
                                                const NewtonPolyhedron &ng,
                                                const LiftedPoint &v);

struct InscriptionResult {
    std::vector<VertexCertificate> certificates;
    std::vector<LiftedPoint> failing; // empty iff totally inscribable

    bool totally_inscribable() const noexcept { return failing.empty(); }
};

/// Runs inscribe_at_vertex at every vertex of ng. Stops at the first failing
/// vertex unless all_failing is set.
InscriptionResult totally_inscribable(const NewtonPolyhedron &nf, const NewtonPolyhedron &ng,
                                      bool all_failing = false);

/// Point x with a unique minimizing vertex v on N(g) and a tie on N(f),
/// verified exactly before it is returned. Searches bounded edges of N(f).
std::optional<SlopePoint> find_witness(const Polynomial &f, const Polynomial &g,
                                       const LiftedPoint &v);
std::optional<SlopePoint> find_witness(const Polynomial &f, const Polynomial &g,
                                       const NewtonPolyhedron &nf, const NewtonPolyhedron &ng,
                                       const LiftedPoint &v);

/// min over certificates of min(t_max, 1). Throws DomainError when empty.
Rational global_scale(const std::vector<VertexCertificate> &certs);

/// Decides Trop(f) subset-or-equal Trop(g).
ContainmentReport check_containment(const Polynomial &f, const Polynomial &g,
                                    const ContainmentOptions &options = {});

} // namespace tropical
