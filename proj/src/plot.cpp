#include "tropical/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace tropical {

namespace {

std::optional<Rational> parse_decimal(std::string_view s) {
    if (auto q = parse_rational(s))
        return q;
    const auto dot = s.find('.');
    if (dot == std::string_view::npos)
        return std::nullopt;
    std::string digits(s.substr(0, dot));
    std::string frac(s.substr(dot + 1));
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
        return std::nullopt;
    if (digits.empty() || digits == "-" || digits == "+")
        digits += "0";
    auto whole = parse_rational(digits + frac);
    if (!whole)
        return std::nullopt;
    Rational scale(Integer(1), Integer("1" + std::string(frac.size(), '0')));
    return Rational(*whole * scale);
}

// Closed parameter interval; missing ends are infinite.
struct Interval {
    std::optional<Rational> lo, hi;
    bool empty = false;

    // alpha + s * beta >= 0
    void require(const Rational &alpha, const Rational &beta) {
        if (beta == 0) {
            if (alpha < 0)
                empty = true;
            return;
        }
        const Rational bound = -alpha / beta;
        if (beta > 0) {
            if (!lo || bound > *lo)
                lo = bound;
        } else {
            if (!hi || bound < *hi)
                hi = bound;
        }
        if (lo && hi && *lo > *hi)
            empty = true;
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000")
        s = "0.000";
    return s;
}

struct Frame {
    double left, top, size;
    double xmin, ymin, xmax, ymax;

    double px(double x) const { return left + (x - xmin) / (xmax - xmin) * size; }
    double py(double y) const { return top + (ymax - y) / (ymax - ymin) * size; }
};

constexpr double kPanel = 360.0;
constexpr double kMargin = 20.0;

struct Style {
    const char *stroke;
    const char *fill;
    double width;
};
constexpr Style kStyles[2] = {{"#1f4e9c", "#1f4e9c", 2.0}, {"#c0392b", "#c0392b", 1.5}};

void line(std::ostringstream &out, const Frame &fr, const RationalVector &a,
          const RationalVector &b, const Style &st, bool dashed) {
    out << "  <line x1=\"" << fmt(fr.px(a[0].get_d())) << "\" y1=\"" << fmt(fr.py(a[1].get_d()))
        << "\" x2=\"" << fmt(fr.px(b[0].get_d())) << "\" y2=\"" << fmt(fr.py(b[1].get_d()))
        << "\" stroke=\"" << st.stroke << "\" stroke-width=\"" << fmt(st.width) << "\"";
    if (dashed)
        out << " stroke-dasharray=\"4,3\"";
    out << "/>\n";
}

void curve_panel(std::ostringstream &out, const Polynomial &p, const Viewport &view,
                 const Frame &fr, const Style &st) {
    for (const auto &piece : curve_pieces(p, view)) {
        // the last tenth of a clipped ray is dashed
        RationalVector a = piece.from, b = piece.to;
        const Rational cut = Rational(1, 10);
        RationalVector a_in = a, b_in = b;
        if (piece.from_unbounded)
            for (std::size_t j = 0; j < 2; ++j)
                a_in[j] = a[j] + cut * (b[j] - a[j]);
        if (piece.to_unbounded)
            for (std::size_t j = 0; j < 2; ++j)
                b_in[j] = b[j] - cut * (b[j] - a[j]);
        line(out, fr, a_in, b_in, st, false);
        if (piece.from_unbounded)
            line(out, fr, a, a_in, st, true);
        if (piece.to_unbounded)
            line(out, fr, b_in, b, st, true);
    }
}

void newton_panel(std::ostringstream &out, const NewtonPolyhedron &np, const Frame &fr,
                  const Style &st) {
    // n == 2: first two coordinates are the exponent plane, where bounded
    // edges project to the regular subdivision. n == 1: exponent and height,
    // i.e. the lower hull itself.
    auto planar = [](const LiftedPoint &p) { return RationalVector{p[0], p[1]}; };
    for (const auto &[a, b] : np.edges())
        line(out, fr, planar(np.vertices()[a]), planar(np.vertices()[b]), st, false);
    for (const auto &a : np.apexes()) {
        const bool vertex = np.vertex_index(a).has_value();
        const auto q = planar(a);
        out << "  <circle cx=\"" << fmt(fr.px(q[0].get_d())) << "\" cy=\""
            << fmt(fr.py(q[1].get_d())) << "\" r=\"3\" stroke=\"" << st.stroke << "\" fill=\""
            << (vertex ? st.fill : "none") << "\"/>\n";
    }
}

Frame newton_frame(const std::vector<const NewtonPolyhedron *> &polys, double left) {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const auto *np : polys)
        for (const auto &a : np->apexes()) {
            const double x = a[0].get_d();
            const double y = a[1].get_d();
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            }
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    const double span = std::max({xmax - xmin, ymax - ymin, 1.0});
    const double pad = span * 0.1;
    const double cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;
    const double half = span / 2 + pad;
    return {left, kMargin, kPanel, cx - half, cy - half, cx + half, cy + half};
}

} // namespace

std::optional<Viewport> parse_viewport(std::string_view text) {
    std::vector<Rational> vals;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto part = text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                       : comma - start);
        while (!part.empty() && part.front() == ' ')
            part.remove_prefix(1);
        while (!part.empty() && part.back() == ' ')
            part.remove_suffix(1);
        auto q = parse_decimal(part);
        if (!q)
            return std::nullopt;
        vals.push_back(*q);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (vals.size() != 4)
        return std::nullopt;
    Viewport v{vals[0], vals[1], vals[2], vals[3]};
    if (!v.valid())
        return std::nullopt;
    return v;
}

std::vector<CurvePiece> curve_pieces(const Polynomial &f, const Viewport &view) {
    if (f.num_vars() != 2)
        throw DimensionError("curve plotting needs exactly two variables");
    const auto &ms = f.monomials();
    auto e = [&](std::size_t i, std::size_t j) { return Rational(static_cast<long>(ms[i].exponents[j])); };
    std::vector<CurvePiece> pieces;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t k = i + 1; k < ms.size(); ++k) {
            // tie line <a, x> = r, parametrized as base + s * dir
            const Rational a0 = e(i, 0) - e(k, 0), a1 = e(i, 1) - e(k, 1);
            const Rational r = ms[k].coefficient - ms[i].coefficient;
            const RationalVector dir{-a1, a0};
            const RationalVector base = a0 != 0 ? RationalVector{r / a0, 0}
                                                : RationalVector{0, r / a1};
            Interval cell;
            for (std::size_t j = 0; j < ms.size() && !cell.empty; ++j) {
                if (j == i || j == k)
                    continue;
                // M_j - M_i >= 0 along the line
                const Rational d0 = e(j, 0) - e(i, 0), d1 = e(j, 1) - e(i, 1);
                const Rational alpha =
                    d0 * base[0] + d1 * base[1] + ms[j].coefficient - ms[i].coefficient;
                const Rational beta = d0 * dir[0] + d1 * dir[1];
                cell.require(alpha, beta);
            }
            if (cell.empty || (cell.lo && cell.hi && *cell.lo == *cell.hi))
                continue;
            Interval clip = cell;
            clip.require(base[0] - view.xmin, dir[0]);
            clip.require(view.xmax - base[0], -dir[0]);
            clip.require(base[1] - view.ymin, dir[1]);
            clip.require(view.ymax - base[1], -dir[1]);
            if (clip.empty || !clip.lo || !clip.hi || *clip.lo == *clip.hi)
                continue;
            CurvePiece piece{i, k, {}, {}, !cell.lo.has_value(), !cell.hi.has_value()};
            for (std::size_t j = 0; j < 2; ++j) {
                piece.from.push_back(base[j] + *clip.lo * dir[j]);
                piece.to.push_back(base[j] + *clip.hi * dir[j]);
            }
            pieces.push_back(std::move(piece));
        }
    return pieces;
}

std::string render_svg(const Polynomial &f, const Polynomial *g, const Viewport &view) {
    const std::size_t n = f.num_vars();
    if (n > 2)
        throw DimensionError("plotting supports at most two variables");
    if (g && g->num_vars() != n)
        throw DimensionError("polynomials have different numbers of variables");
    if (!view.valid())
        throw DomainError("viewport needs xmin < xmax and ymin < ymax");

    const bool curve = n == 2;
    const double width = (curve ? 2 : 1) * (kPanel + 2 * kMargin);
    const double height = kPanel + 2 * kMargin;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";

    double left = kMargin;
    if (curve) {
        const Frame fr{left,
                       kMargin,
                       kPanel,
                       view.xmin.get_d(),
                       view.ymin.get_d(),
                       view.xmax.get_d(),
                       view.ymax.get_d()};
        out << " <g id=\"curve\">\n";
        out << "  <rect x=\"" << fmt(left) << "\" y=\"" << fmt(kMargin) << "\" width=\""
            << fmt(kPanel) << "\" height=\"" << fmt(kPanel)
            << "\" fill=\"none\" stroke=\"#999999\"/>\n";
        curve_panel(out, f, view, fr, kStyles[0]);
        if (g)
            curve_panel(out, *g, view, fr, kStyles[1]);
        out << " </g>\n";
        left += kPanel + 2 * kMargin;
    }

    const auto nf = newton_polyhedron(f);
    std::optional<NewtonPolyhedron> ng;
    std::vector<const NewtonPolyhedron *> polys{&nf};
    if (g) {
        ng = newton_polyhedron(*g);
        polys.push_back(&*ng);
    }
    const Frame fr = newton_frame(polys, left);
    out << " <g id=\"newton\">\n";
    out << "  <rect x=\"" << fmt(left) << "\" y=\"" << fmt(kMargin) << "\" width=\""
        << fmt(kPanel) << "\" height=\"" << fmt(kPanel) << "\" fill=\"none\" stroke=\"#999999\"/>\n";
    newton_panel(out, nf, fr, kStyles[0]);
    if (ng)
        newton_panel(out, *ng, fr, kStyles[1]);
    out << " </g>\n</svg>\n";
    return out.str();
}

} // namespace tropical
