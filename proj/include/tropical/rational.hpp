#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tropical {

// Exact scalar field. mpq_class keeps values reduced with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Serializes as "p" when the denominator is 1 and "p/q" otherwise.
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

/// Parses "p", "p/q", "+p/q" or "-p/q" (decimal integers only). Returns nullopt
/// on malformed input or a zero denominator. The result is canonicalized.
std::optional<Rational> parse_rational(std::string_view text);

Rational dot(const RationalVector &a, const RationalVector &b);
Rational dot(const IntegerVector &a, const RationalVector &b);

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction (positive multiple).
IntegerVector primitive_direction(const RationalVector &v);

/// Divides by the gcd of the entries; zero vectors are returned unchanged.
void make_primitive(IntegerVector &v);

RationalVector to_rational(const IntegerVector &v);

/// Rank of a rational matrix given as rows.
std::size_t rank(std::vector<RationalVector> rows);

} // namespace tropical
