#pragma once

#include "tropical/geometry.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tropical {

struct Viewport {
    Rational xmin = -4, ymin = -4, xmax = 4, ymax = 4;

    bool valid() const { return xmin < xmax && ymin < ymax; }
};

/// "xmin,ymin,xmax,ymax" with integer, p/q or decimal entries.
std::optional<Viewport> parse_viewport(std::string_view text);

/// Piece of a planar tropical curve clipped to a viewport. An end marked
/// unbounded is where the unclipped cell runs off to infinity.
struct CurvePiece {
    std::size_t first; // monomial indices of the tie
    std::size_t second;
    RationalVector from;
    RationalVector to;
    bool from_unbounded = false;
    bool to_unbounded = false;
};

/// Cells of Trop(f), n == 2, intersected with the viewport. Cells that
/// degenerate to a point are omitted.
std::vector<CurvePiece> curve_pieces(const Polynomial &f, const Viewport &view);

/// SVG with the curve panel (n == 2) and the Newton panel (n <= 2). g, when
/// given, is overlaid in a second style. Throws DimensionError for n > 2.
std::string render_svg(const Polynomial &f, const Polynomial *g, const Viewport &view);

} // namespace tropical
