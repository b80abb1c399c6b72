#pragma once

#include "tropical/rational.hpp"

#include <optional>
#include <vector>

namespace tropical {

enum class Relation { GreaterEqual, Greater, Equal };

/// <coeffs, x>  relation  offset
struct LinearConstraint {
    RationalVector coeffs;
    Rational offset;
    Relation relation = Relation::GreaterEqual;

    bool satisfied_by(const RationalVector &x) const;
};

class LinearSystem {
  public:
    explicit LinearSystem(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<LinearConstraint> &constraints() const noexcept { return constraints_; }

    /// Throws DimensionError when coeffs.size() != dim().
    void add(RationalVector coeffs, Rational offset, Relation relation);
    void add(LinearConstraint c) { add(std::move(c.coeffs), std::move(c.offset), c.relation); }

    bool satisfied_by(const RationalVector &x) const;

  private:
    std::size_t dim_;
    std::vector<LinearConstraint> constraints_;
};

/// Exact Fourier-Motzkin elimination with open/closed bound tracking.
/// Equalities are substituted away first; the remaining variables are
/// eliminated from the last to the first and back-substituted in reverse.
/// Each variable is then set to the midpoint of its bounds, to floor(lo)+1 or
/// ceil(hi)-1 when only one side is bounded, or to 0 when free.
/// Returns nullopt when the system has no solution.
std::optional<RationalVector> solve_feasibility(const LinearSystem &system);

} // namespace tropical
