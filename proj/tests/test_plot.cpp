#include "tropical/plot.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace tropical;
using tropical::testkit::poly;
using tropical::testkit::vec;

namespace {

std::size_t count(const std::string &s, const std::string &needle) {
    std::size_t c = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1))
        ++c;
    return c;
}

} // namespace

TEST(Viewport, Parsing) {
    auto v = parse_viewport("-2,-1/2,3.5,4");
    ASSERT_TRUE(v);
    EXPECT_EQ(v->xmin, -2);
    EXPECT_EQ(v->ymin, Rational(-1, 2));
    EXPECT_EQ(v->xmax, Rational(7, 2));
    EXPECT_EQ(v->ymax, 4);
    EXPECT_FALSE(parse_viewport("1,0,0,1"));
    EXPECT_FALSE(parse_viewport("0,0,1"));
    EXPECT_FALSE(parse_viewport("0,0,1,a"));
}

TEST(CurvePieces, TropicalLineHasThreeRays) {
    auto pieces = curve_pieces(poly("min(0, x, y)"), Viewport{});
    ASSERT_EQ(pieces.size(), 3u);
    for (const auto &p : pieces) {
        // each ray starts at the origin and is unbounded on the far side
        const bool from_origin = p.from == vec({"0", "0"});
        const bool to_origin = p.to == vec({"0", "0"});
        EXPECT_TRUE(from_origin || to_origin);
        EXPECT_TRUE(from_origin ? p.to_unbounded && !p.from_unbounded
                                : p.from_unbounded && !p.to_unbounded);
    }
}

TEST(CurvePieces, PointsLieOnTheCurve) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        testkit::RandomPolySpec spec{.n = 2, .max_terms = 6, .max_exponent = 3, .max_denominator = 2,
                                     .max_numerator = 3};
        auto f = testkit::random_polynomial(rng, spec);
        for (const auto &p : curve_pieces(f, Viewport{})) {
            RationalVector mid{(p.from[0] + p.to[0]) / 2, (p.from[1] + p.to[1]) / 2};
            EXPECT_TRUE(on_hypersurface(f, mid));
        }
    }
}

TEST(RenderSvg, LineAndOverlay) {
    const auto svg = render_svg(poly("min(0, x, y)"), nullptr, Viewport{});
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    // three rays, each a solid body plus a dashed tail
    EXPECT_EQ(count(svg, "stroke-dasharray"), 3u);
    EXPECT_EQ(svg, render_svg(poly("min(0, x, y)"), nullptr, Viewport{}));

    auto g = poly("min(0, x, y, x + y)");
    const auto overlay = render_svg(poly("min(0, x, y)"), &g, Viewport{});
    EXPECT_NE(overlay.find("#c0392b"), std::string::npos);
    EXPECT_GT(count(overlay, "<line"), count(svg, "<line"));
}

TEST(RenderSvg, DimensionLimits) {
    EXPECT_NO_THROW(render_svg(poly("min(0, x, 2*x + 1)"), nullptr, Viewport{}));
    EXPECT_THROW(render_svg(poly("min(0, x, y, z)"), nullptr, Viewport{}), DimensionError);
    Viewport bad{1, 0, 0, 1};
    EXPECT_THROW(render_svg(poly("min(0, x, y)"), nullptr, bad), DomainError);
}
