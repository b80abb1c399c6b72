#pragma once

#include "tropical/errors.hpp"
#include "tropical/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tropical {

using Exponents = std::vector<std::int64_t>;

/// The affine form  a_0 + a_1 x_1 + ... + a_n x_n  of a min-plus polynomial.
struct Monomial {
    Exponents exponents;
    Rational coefficient;

    friend bool operator==(const Monomial &, const Monomial &) = default;
};

/// A monomial as written by the user, before canonicalization. A missing
/// entry (nullopt) stands for +inf.
struct RawMonomial {
    std::vector<std::optional<std::int64_t>> exponents;
    std::optional<Rational> coefficient;
};

struct CanonicalizeOptions {
    // Exponents are nonnegative integers by default. The relaxed mode accepts
    // any integer; the containment code does not depend on the sign.
    bool allow_negative_exponents = false;
};

/// A point of R^n, read as the slope vector of the non-vertical hyperplane
/// {(z, <x, z>)} in the lifted space.
using SlopePoint = RationalVector;

/// Canonical min-plus polynomial: nonempty, monomials sorted by exponent
/// vector with pairwise distinct exponents, all coefficients finite.
class Polynomial {
  public:
    std::size_t num_vars() const noexcept { return n_; }
    const std::vector<Monomial> &monomials() const noexcept { return monomials_; }
    std::size_t size() const noexcept { return monomials_.size(); }

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    friend Polynomial canonicalize(std::size_t n, const std::vector<RawMonomial> &raw,
                                   const CanonicalizeOptions &options);
    friend Polynomial canonicalize(std::size_t n, std::vector<Monomial> monomials,
                                   const CanonicalizeOptions &options);

  private:
    Polynomial(std::size_t n, std::vector<Monomial> monomials)
        : n_(n), monomials_(std::move(monomials)) {}

    std::size_t n_;
    std::vector<Monomial> monomials_;
};

/// Drops every monomial with an infinite entry, merges duplicate exponent
/// vectors keeping the smallest coefficient and sorts the result.
/// Throws EmptyPolynomialError when nothing finite remains, DimensionError on
/// length mismatches and DomainError on negative exponents in strict mode.
Polynomial canonicalize(std::size_t n, const std::vector<RawMonomial> &raw,
                        const CanonicalizeOptions &options = {});
Polynomial canonicalize(std::size_t n, std::vector<Monomial> monomials,
                        const CanonicalizeOptions &options = {});

struct Evaluation {
    Rational value;
    std::vector<std::size_t> argmin; // indices into monomials(), ascending
};

Rational evaluate_monomial(const Monomial &m, const SlopePoint &x);

Evaluation evaluate(const Polynomial &f, const SlopePoint &x);

/// True iff the minimum is attained by at least two monomials.
bool on_hypersurface(const Polynomial &f, const SlopePoint &x);

/// Tropical product with a single monomial. Translates the Newton polyhedron
/// and leaves the hypersurface unchanged.
Polynomial translate_by_monomial(const Polynomial &f, const Monomial &m);

// Text and structured (JSON) formats. parse_polynomial detects the format
// from the first non-blank character ('{' means structured). When n is not
// given, the structured form supplies it and the text form uses the largest
// variable index that occurs (at least 1).
Polynomial parse_polynomial(std::string_view text, std::optional<std::size_t> n = std::nullopt,
                            const CanonicalizeOptions &options = {});
Polynomial parse_text(std::string_view text, std::optional<std::size_t> n = std::nullopt,
                      const CanonicalizeOptions &options = {});
Polynomial parse_structured(std::string_view text, std::optional<std::size_t> n = std::nullopt,
                            const CanonicalizeOptions &options = {});

/// "min(0, 1 + x1, 1/2 + 2*x1 + x2)". Re-parses to the same polynomial.
std::string to_text(const Polynomial &f);
/// {"n":..,"monomials":[{"coeff":"p/q","exp":[...]}]}
std::string to_structured(const Polynomial &f);

} // namespace tropical
