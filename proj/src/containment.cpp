#include "tropical/containment.hpp"

#include <algorithm>

namespace tropical {

namespace {

// Values of every constraint functional of the container on the vertices of
// the inscribed polyhedron, shared by all (vertex, anchor) queries.
class InscriptionTable {
  public:
    InscriptionTable(const std::vector<LiftedPoint> &vf, const NewtonPolyhedron &ng)
        : vf_(vf), ng_(ng) {
        const auto &cs = ng.constraints();
        values_.resize(cs.size());
        min_.resize(cs.size());
        constant_.resize(cs.size());
        for (std::size_t c = 0; c < cs.size(); ++c) {
            values_[c].reserve(vf.size());
            for (const auto &u : vf)
                values_[c].push_back(dot(cs[c].normal, u));
            const auto [lo, hi] = std::minmax_element(values_[c].begin(), values_[c].end());
            min_[c] = *lo;
            constant_[c] = *lo == *hi;
        }
    }

    // u is given by its index in vf.
    std::optional<ScaleBound> feasible(std::size_t vertex, std::size_t u) const {
        const auto &cs = ng_.constraints();
        const LiftedPoint &v = ng_.vertices()[vertex];
        // Constraints tight at v decide feasibility; the others only cap t.
        for (std::size_t c : ng_.tight_at_vertex(vertex)) {
            if (cs[c].kind == ConstraintKind::Equality ? !constant_[c] : min_[c] < values_[c][u])
                return std::nullopt;
        }
        ScaleBound bound;
        for (std::size_t c = 0; c < cs.size(); ++c) {
            if (cs[c].kind == ConstraintKind::Equality)
                continue;
            const Rational drop = values_[c][u] - min_[c];
            if (drop == 0)
                continue;
            const Rational limit = cs[c].slack(v) / drop;
            if (!bound.finite || limit < *bound.finite)
                bound.finite = limit;
        }
        return bound;
    }

    const std::vector<LiftedPoint> &inscribed_vertices() const { return vf_; }

  private:
    const std::vector<LiftedPoint> &vf_;
    const NewtonPolyhedron &ng_;
    std::vector<std::vector<Rational>> values_;
    std::vector<Rational> min_;
    std::vector<bool> constant_;
};

void require_same_dim(const NewtonPolyhedron &nf, const NewtonPolyhedron &ng) {
    if (nf.ambient_dim() != ng.ambient_dim())
        throw DimensionError("Newton polyhedra live in different dimensions");
}

std::size_t require_vertex(const NewtonPolyhedron &p, const LiftedPoint &v) {
    auto i = p.vertex_index(v);
    if (!i)
        throw DomainError("point is not a vertex of the container polyhedron");
    return *i;
}

} // namespace

std::optional<ScaleBound> anchor_feasible(const std::vector<LiftedPoint> &vf,
                                          const NewtonPolyhedron &ng, const LiftedPoint &v,
                                          const LiftedPoint &u) {
    const std::size_t vi = require_vertex(ng, v);
    auto ui = std::find(vf.begin(), vf.end(), u);
    if (ui == vf.end())
        throw DomainError("anchor is not a vertex of the inscribed polyhedron");
    if (u.size() != ng.ambient_dim())
        throw DimensionError("anchor has wrong dimension");
    InscriptionTable table(vf, ng);
    return table.feasible(vi, static_cast<std::size_t>(ui - vf.begin()));
}

std::optional<VertexCertificate> inscribe_at_vertex(const NewtonPolyhedron &nf,
                                                    const NewtonPolyhedron &ng,
                                                    const LiftedPoint &v) {
    require_same_dim(nf, ng);
    const std::size_t vi = require_vertex(ng, v);
    InscriptionTable table(nf.vertices(), ng);
    for (std::size_t u = 0; u < nf.vertices().size(); ++u)
        if (auto t = table.feasible(vi, u))
            return VertexCertificate{v, nf.vertices()[u], *t};
    return std::nullopt;
}

std::vector<VertexCertificate> feasible_anchors(const NewtonPolyhedron &nf,
                                                const NewtonPolyhedron &ng,
                                                const LiftedPoint &v) {
    require_same_dim(nf, ng);
    const std::size_t vi = require_vertex(ng, v);
    InscriptionTable table(nf.vertices(), ng);
    std::vector<VertexCertificate> out;
    for (std::size_t u = 0; u < nf.vertices().size(); ++u)
        if (auto t = table.feasible(vi, u))
            out.push_back({v, nf.vertices()[u], *t});
    return out;
}

InscriptionResult totally_inscribable(const NewtonPolyhedron &nf, const NewtonPolyhedron &ng,
                                      bool all_failing) {
    require_same_dim(nf, ng);
    InscriptionTable table(nf.vertices(), ng);
    InscriptionResult result;
    for (std::size_t vi = 0; vi < ng.vertices().size(); ++vi) {
        std::optional<VertexCertificate> cert;
        for (std::size_t u = 0; u < nf.vertices().size() && !cert; ++u)
            if (auto t = table.feasible(vi, u))
                cert = VertexCertificate{ng.vertices()[vi], nf.vertices()[u], *t};
        if (cert) {
            result.certificates.push_back(std::move(*cert));
        } else {
            result.failing.push_back(ng.vertices()[vi]);
            if (!all_failing)
                break;
        }
    }
    return result;
}

std::optional<SlopePoint> find_witness(const Polynomial &f, const Polynomial &g,
                                       const NewtonPolyhedron &nf, const NewtonPolyhedron &ng,
                                       const LiftedPoint &v) {
    require_same_dim(nf, ng);
    const std::size_t n = f.num_vars();
    const std::size_t vi = require_vertex(ng, v);

    // <(x,1), a - b> as coefficients on x and a constant
    auto difference = [n](const LiftedPoint &a, const LiftedPoint &b) {
        RationalVector coeffs(n);
        for (std::size_t j = 0; j < n; ++j)
            coeffs[j] = a[j] - b[j];
        return std::pair{coeffs, Rational(a[n] - b[n])};
    };

    // v is the unique minimizer on N(g) iff every edge leaving v goes up.
    LinearSystem strict_support(n);
    for (std::size_t w : ng.neighbors(vi)) {
        auto [coeffs, c] = difference(ng.vertices()[w], v);
        strict_support.add(std::move(coeffs), -c, Relation::Greater);
    }

    const auto &vf = nf.vertices();
    for (const auto &[a, b] : nf.edges()) {
        LinearSystem sys = strict_support;
        auto [tie, tie_c] = difference(vf[a], vf[b]);
        sys.add(std::move(tie), -tie_c, Relation::Equal);
        for (std::size_t w : nf.neighbors(a)) {
            if (w == b)
                continue;
            auto [coeffs, c] = difference(vf[w], vf[a]);
            sys.add(std::move(coeffs), -c, Relation::GreaterEqual);
        }
        auto x = solve_feasibility(sys);
        if (x && on_hypersurface(f, *x) && !on_hypersurface(g, *x))
            return x;
    }
    return std::nullopt;
}

std::optional<SlopePoint> find_witness(const Polynomial &f, const Polynomial &g,
                                       const LiftedPoint &v) {
    if (f.num_vars() != g.num_vars())
        throw DimensionError("polynomials have different numbers of variables");
    const auto nf = newton_polyhedron(f);
    const auto ng = newton_polyhedron(g);
    return find_witness(f, g, nf, ng, v);
}

Rational global_scale(const std::vector<VertexCertificate> &certs) {
    if (certs.empty())
        throw DomainError("global scale needs at least one certificate");
    Rational t0 = 1;
    for (const auto &c : certs)
        t0 = std::min(t0, c.t_max.clamped());
    return t0;
}

ContainmentReport check_containment(const Polynomial &f, const Polynomial &g,
                                    const ContainmentOptions &options) {
    if (f.num_vars() != g.num_vars())
        throw DimensionError("polynomials have different numbers of variables (" +
                             std::to_string(f.num_vars()) + " vs " +
                             std::to_string(g.num_vars()) + ")");
    const auto nf = newton_polyhedron(f);
    const auto ng = newton_polyhedron(g);
    auto inscription = totally_inscribable(nf, ng, options.all_failing);

    ContainmentReport report;
    if (inscription.totally_inscribable()) {
        report.verdict = Verdict::Contained;
        report.t0 = global_scale(inscription.certificates);
        report.certificates = std::move(inscription.certificates);
        return report;
    }
    report.verdict = Verdict::NotContained;
    report.failing_vertex = inscription.failing.front();
    if (options.all_failing)
        report.all_failing = std::move(inscription.failing);
    if (options.search_witness) {
        report.witness_searched = true;
        report.witness = find_witness(f, g, nf, ng, *report.failing_vertex);
    }
    return report;
}

} // namespace tropical
