#include "tropical/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace tropical {

bool Facet::satisfied_by(const LiftedPoint &p) const {
    const Rational s = slack(p);
    return kind == ConstraintKind::Equality ? s == 0 : s >= 0;
}

LiftedPoint lift(const Monomial &m) {
    LiftedPoint p;
    p.reserve(m.exponents.size() + 1);
    for (auto e : m.exponents)
        p.emplace_back(static_cast<long>(e));
    p.push_back(m.coefficient);
    return p;
}

namespace {

bool facet_less(const Facet &a, const Facet &b) {
    if (a.kind != b.kind)
        return a.kind == ConstraintKind::Equality;
    if (a.normal != b.normal)
        return a.normal < b.normal;
    return a.offset < b.offset;
}

} // namespace

NewtonPolyhedron newton_polyhedron(const Polynomial &f) {
    NewtonPolyhedron p;
    p.n_ = f.num_vars();
    const std::size_t dim = p.ambient_dim();
    for (const auto &m : f.monomials())
        p.apexes_.push_back(lift(m));

    // The double description reports which apexes each inequality is tight
    // on, so tight sets come without further arithmetic.
    auto hull = detail::vertical_hull(dim, p.apexes_);
    const std::size_t ne = hull.equalities.size();
    std::vector<std::size_t> order(hull.inequalities.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return facet_less(hull.inequalities[a], hull.inequalities[b]);
    });
    std::sort(hull.equalities.begin(), hull.equalities.end(), facet_less);
    p.constraints_ = std::move(hull.equalities);
    std::vector<const std::vector<std::size_t> *> incident;
    for (std::size_t i : order) {
        if (p.constraints_.size() > ne && p.constraints_.back() == hull.inequalities[i])
            continue;
        p.constraints_.push_back(std::move(hull.inequalities[i]));
        incident.push_back(&hull.incident[i]);
    }

    // Tight sets as bitmasks over the inequality constraints. Equalities hold
    // everywhere and carry no face information.
    const std::size_t nc = p.constraints_.size();
    const std::size_t words = (nc + 63) / 64;
    using Mask = std::vector<std::uint64_t>;
    auto subset = [words](const Mask &a, const Mask &b) {
        for (std::size_t w = 0; w < words; ++w)
            if ((a[w] & ~b[w]) != 0)
                return false;
        return true;
    };
    std::vector<Mask> masks(p.apexes_.size(), Mask(words, 0));
    std::vector<std::vector<std::size_t>> tights(p.apexes_.size());
    for (std::size_t a = 0; a < p.apexes_.size(); ++a)
        for (std::size_t i = 0; i < ne; ++i)
            tights[a].push_back(i);
    for (std::size_t i = ne; i < nc; ++i)
        for (std::size_t a : *incident[i - ne]) {
            tights[a].push_back(i);
            masks[a][i / 64] |= std::uint64_t{1} << (i % 64);
        }

    // An apex is a vertex iff the smallest face containing it holds no other
    // apex. Apexes are distinct since exponents are. Canonical polynomials are
    // sorted by exponent, so vertices come out in lexicographic order.
    std::vector<std::size_t> vertex_apex;
    for (std::size_t a = 0; a < p.apexes_.size(); ++a) {
        bool vertex = true;
        for (std::size_t b = 0; b < p.apexes_.size() && vertex; ++b)
            if (b != a && subset(masks[a], masks[b]))
                vertex = false;
        if (vertex) {
            vertex_apex.push_back(a);
            p.vertices_.push_back(p.apexes_[a]);
            p.tight_.push_back(std::move(tights[a]));
        }
    }

    // Two vertices span a bounded edge iff the smallest face containing both
    // has no third vertex and some constraint on it blocks the vertical ray.
    const std::size_t nv = vertex_apex.size();
    Mask common(words);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j) {
            const Mask &mi = masks[vertex_apex[i]];
            const Mask &mj = masks[vertex_apex[j]];
            bool bounded = false;
            for (std::size_t w = 0; w < words; ++w) {
                common[w] = mi[w] & mj[w];
                for (std::uint64_t bits = common[w]; bits != 0 && !bounded; bits &= bits - 1) {
                    const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                    bounded = p.constraints_[c].normal.back() > 0;
                }
            }
            if (!bounded)
                continue;
            bool edge = true;
            for (std::size_t k = 0; k < nv && edge; ++k)
                if (k != i && k != j && subset(common, masks[vertex_apex[k]]))
                    edge = false;
            if (edge)
                p.edges_.emplace_back(i, j);
        }
    return p;
}

bool NewtonPolyhedron::full_dimensional() const noexcept {
    return std::none_of(constraints_.begin(), constraints_.end(),
                        [](const Facet &c) { return c.kind == ConstraintKind::Equality; });
}

std::optional<std::size_t> NewtonPolyhedron::vertex_index(const LiftedPoint &v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::size_t> NewtonPolyhedron::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (const auto &[a, b] : edges_) {
        if (a == i)
            out.push_back(b);
        else if (b == i)
            out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> active_constraints(const NewtonPolyhedron &p, const LiftedPoint &v) {
    auto i = p.vertex_index(v);
    if (!i)
        throw DomainError("point is not a vertex of the Newton polyhedron");
    return p.tight_at_vertex(*i);
}

std::optional<Rational> support_min(const NewtonPolyhedron &p, const RationalVector &c) {
    if (c.size() != p.ambient_dim())
        throw DimensionError("functional has wrong dimension");
    if (c.back() < 0)
        return std::nullopt;
    std::optional<Rational> best;
    for (const auto &v : p.vertices()) {
        Rational val = dot(c, v);
        if (!best || val < *best)
            best = std::move(val);
    }
    return best;
}

} // namespace tropical
