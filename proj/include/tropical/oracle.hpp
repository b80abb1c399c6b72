#pragma once

#include "tropical/poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tropical {

// Criterion-free checks of containment verdicts. They only use evaluation of
// the polynomials and exact linear feasibility, never Newton polyhedra.

/// Trop(f) for one variable: strictly increasing, finite.
struct BreakpointSet {
    std::vector<Rational> points;

    bool contains(const Rational &x) const;
    bool subset_of(const BreakpointSet &other) const;
};

BreakpointSet breakpoints_1d(const Polynomial &f);

/// A point where monomials `first` and `second` both attain the minimum.
struct CellSample {
    std::size_t first;
    std::size_t second;
    SlopePoint point;
};

/// One sample per nonempty tie cell, in pair order. Relative-interior points
/// are preferred; lower-dimensional cells fall back to a non-strict system.
std::vector<CellSample> cell_points(const Polynomial &f);

/// Up to `count` points of Trop(f), deterministic in `seed`. A random line
/// with small-denominator data is intersected exactly with the hypersurface.
/// Returns fewer points only when Trop(f) is empty.
std::vector<SlopePoint> random_hypersurface_points(const Polynomial &f, std::size_t count,
                                                   std::uint64_t seed);

struct OracleVerdict {
    bool exact = false; // n == 1
    std::optional<SlopePoint> counterexample;

    bool agrees_contained() const noexcept { return !counterexample.has_value(); }
};

/// n == 1: exact breakpoint inclusion. n >= 2: one-sided, tests cell samples
/// and `extra_samples` random points of Trop(f) against Trop(g).
OracleVerdict oracle_check(const Polynomial &f, const Polynomial &g, std::size_t extra_samples = 100,
                           std::uint64_t seed = 0);

} // namespace tropical
