#include "tropical/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace tropical::detail {

namespace {

class Bits {
  public:
    explicit Bits(std::size_t size = 0) : words_((size + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    Bits operator&(const Bits &o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] &= o.words_[i];
        return r;
    }

    bool contains(const Bits &o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((o.words_[i] & ~words_[i]) != 0)
                return false;
        return true;
    }

  private:
    std::vector<std::uint64_t> words_;
};

// Checked 64-bit integer. Double description on small data never needs more,
// and when it does the computation is redone with GMP integers.
struct Overflow {};

struct Small {
    std::int64_t v = 0;

    Small() = default;
    Small(std::int64_t x) : v(x) {}

    friend Small operator+(Small a, Small b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r))
            throw Overflow{};
        return r;
    }
    friend Small operator*(Small a, Small b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r))
            throw Overflow{};
        return r;
    }
    Small operator-() const {
        if (v == INT64_MIN)
            throw Overflow{};
        return -v;
    }
    Small &operator+=(Small o) { return *this = *this + o; }
    friend bool operator==(Small a, Small b) = default;
    friend auto operator<=>(Small a, Small b) = default;
};

int sign_of(Small x) { return (x.v > 0) - (x.v < 0); }
int sign_of(const Integer &x) { return sgn(x); }

Small from_integer(const Integer &x, Small *) {
    if (!x.fits_slong_p())
        throw Overflow{};
    return static_cast<std::int64_t>(x.get_si());
}
Integer from_integer(const Integer &x, Integer *) { return x; }

Integer to_integer(Small x) { return Integer(static_cast<long>(x.v)); }
Integer to_integer(const Integer &x) { return x; }

void make_primitive_vec(std::vector<Small> &v) {
    std::uint64_t g = 0;
    for (auto x : v)
        g = std::gcd(g, x.v < 0 ? 0 - static_cast<std::uint64_t>(x.v) : static_cast<std::uint64_t>(x.v));
    if (g > 1)
        for (auto &x : v)
            x.v /= static_cast<std::int64_t>(g);
}
void make_primitive_vec(IntegerVector &v) { make_primitive(v); }

template <class Int> struct Ray {
    std::vector<Int> w;
    Bits zero; // processed constraints tight at w
};

template <class Int> Int dot_int(const std::vector<Int> &a, const std::vector<Int> &b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != Int(0) && b[i] != Int(0))
            s += a[i] * b[i];
    return s;
}

// alpha * a + beta * b, made primitive
template <class Int>
std::vector<Int> combine(const Int &alpha, const std::vector<Int> &a, const Int &beta,
                         const std::vector<Int> &b) {
    std::vector<Int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = alpha * a[i] + beta * b[i];
    make_primitive_vec(r);
    return r;
}

struct Cone {
    std::vector<IntegerVector> lineality;
    std::vector<IntegerVector> rays;
    std::vector<Bits> zero;
};

// Generators of the cone {w : row . w >= 0 for every row}.
template <class Int> Cone dual_cone(std::size_t m, const std::vector<IntegerVector> &input) {
    std::vector<std::vector<Int>> rows;
    for (const auto &r : input) {
        std::vector<Int> row;
        for (const auto &x : r)
            row.push_back(from_integer(x, static_cast<Int *>(nullptr)));
        rows.push_back(std::move(row));
    }
    const std::size_t num_rows = rows.size();

    std::vector<std::vector<Int>> lineality;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Int> e(m, Int(0));
        e[i] = Int(1);
        lineality.push_back(std::move(e));
    }
    std::vector<Ray<Int>> rays;

    for (std::size_t idx = 0; idx < num_rows; ++idx) {
        const std::vector<Int> &a = rows[idx];

        auto pivot = std::find_if(lineality.begin(), lineality.end(),
                                  [&](const std::vector<Int> &l) { return dot_int(a, l) != Int(0); });
        if (pivot != lineality.end()) {
            std::vector<Int> l0 = std::move(*pivot);
            lineality.erase(pivot);
            Int s0 = dot_int(a, l0);
            if (sign_of(s0) < 0) {
                for (auto &x : l0)
                    x = -x;
                s0 = -s0;
            }
            for (auto &l : lineality) {
                const Int s = dot_int(a, l);
                if (s != Int(0))
                    l = combine<Int>(s0, l, -s, l0);
            }
            for (auto &r : rays) {
                const Int s = dot_int(a, r.w);
                if (s != Int(0))
                    r.w = combine<Int>(s0, r.w, -s, l0);
                r.zero.set(idx);
            }
            Ray<Int> fresh{l0, Bits(num_rows)};
            for (std::size_t j = 0; j < idx; ++j)
                fresh.zero.set(j);
            rays.push_back(std::move(fresh));
            continue;
        }

        std::vector<Int> value(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            value[i] = dot_int(a, rays[i].w);
            const int s = sign_of(value[i]);
            if (s > 0)
                pos.push_back(i);
            else if (s < 0)
                neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (value[i] == Int(0))
                    rays[i].zero.set(idx);
            continue;
        }

        // Pointed part has dimension m - |lineality|; adjacent extreme rays
        // share at least that many minus two tight constraints.
        const std::size_t pointed = m - lineality.size();
        const std::size_t need = pointed >= 2 ? pointed - 2 : 0;
        std::vector<Ray<Int>> created;
        for (std::size_t p : pos)
            for (std::size_t q : neg) {
                Bits common = rays[p].zero & rays[q].zero;
                if (common.count() < need)
                    continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && rays[r].zero.contains(common))
                        adjacent = false;
                if (!adjacent)
                    continue;
                Ray<Int> nr{combine<Int>(value[p], rays[q].w, -value[q], rays[p].w), common};
                nr.zero.set(idx);
                created.push_back(std::move(nr));
            }

        std::vector<Ray<Int>> kept;
        kept.reserve(rays.size() - neg.size() + created.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (sign_of(value[i]) < 0)
                continue;
            if (value[i] == Int(0))
                rays[i].zero.set(idx);
            kept.push_back(std::move(rays[i]));
        }
        for (auto &r : created)
            kept.push_back(std::move(r));
        rays = std::move(kept);
    }

    auto widen = [](const std::vector<Int> &v) {
        IntegerVector out;
        for (const auto &x : v)
            out.push_back(to_integer(x));
        return out;
    };
    Cone out;
    for (const auto &l : lineality)
        out.lineality.push_back(widen(l));
    for (auto &r : rays) {
        out.rays.push_back(widen(r.w));
        out.zero.push_back(std::move(r.zero));
    }
    return out;
}

// Integer generator for a point (scaled homogenized coordinates).
IntegerVector homogenize(const LiftedPoint &p) {
    RationalVector h(p);
    h.emplace_back(1);
    return primitive_direction(h);
}

// Turns a dual vector w (w . (p, 1) >= 0 or == 0) into a facet with a
// primitive normal. Returns nullopt when the normal part vanishes.
std::optional<Facet> to_facet(const RationalVector &w, ConstraintKind kind) {
    const std::size_t dim = w.size() - 1;
    RationalVector normal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(dim));
    if (std::all_of(normal.begin(), normal.end(), [](const Rational &x) { return x == 0; }))
        return std::nullopt;
    Facet f;
    f.kind = kind;
    f.normal = primitive_direction(normal);
    // normal = scale * f.normal for some positive rational scale
    std::size_t lead = 0;
    while (normal[lead] == 0)
        ++lead;
    const Rational scale = normal[lead] / f.normal[lead];
    f.offset = -w[dim] / scale;
    if (kind == ConstraintKind::Equality) {
        // canonical sign: first nonzero normal entry positive
        if (f.normal[lead] < 0) {
            for (auto &x : f.normal)
                x = -x;
            f.offset = -f.offset;
        }
    }
    return f;
}

} // namespace

HullDescription vertical_hull(std::size_t dim, const std::vector<LiftedPoint> &points) {
    const std::size_t m = dim + 1;

    // Rows of the dual system: the vertical ray first, then the points.
    std::vector<IntegerVector> rows;
    {
        IntegerVector up(m, 0);
        up[dim - 1] = 1;
        rows.push_back(std::move(up));
    }
    for (const auto &p : points)
        rows.push_back(homogenize(p));

    Cone cone;
    try {
        cone = dual_cone<Small>(m, rows);
    } catch (const Overflow &) {
        cone = dual_cone<Integer>(m, rows);
    }
    const auto &lineality = cone.lineality;

    // Lineality of the dual cone spans the affine-hull equalities. Bring it to
    // reduced row echelon form; pivots fall on exponent coordinates because
    // every equality vanishes on the vertical ray.
    std::vector<RationalVector> eq;
    for (const auto &l : lineality)
        eq.push_back(to_rational(l));
    std::vector<std::size_t> pivots;
    {
        std::size_t r = 0;
        for (std::size_t c = 0; c < m && r < eq.size(); ++c) {
            std::size_t p = r;
            while (p < eq.size() && eq[p][c] == 0)
                ++p;
            if (p == eq.size())
                continue;
            std::swap(eq[r], eq[p]);
            const Rational inv = 1 / eq[r][c];
            for (auto &x : eq[r])
                x *= inv;
            for (std::size_t i = 0; i < eq.size(); ++i) {
                if (i == r || eq[i][c] == 0)
                    continue;
                const Rational factor = eq[i][c];
                for (std::size_t j = 0; j < m; ++j)
                    eq[i][j] -= factor * eq[r][j];
            }
            pivots.push_back(c);
            ++r;
        }
        eq.resize(r);
    }

    HullDescription out;
    for (const auto &row : eq)
        if (auto f = to_facet(row, ConstraintKind::Equality))
            out.equalities.push_back(std::move(*f));
    for (std::size_t ri = 0; ri < cone.rays.size(); ++ri) {
        RationalVector w = to_rational(cone.rays[ri]);
        for (std::size_t i = 0; i < eq.size(); ++i) {
            const Rational factor = w[pivots[i]];
            if (factor == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                w[j] -= factor * eq[i][j];
        }
        // the homogenizing constraint h >= 0 reduces to a zero normal
        if (auto f = to_facet(w, ConstraintKind::Inequality)) {
            out.inequalities.push_back(std::move(*f));
            // row 0 is the vertical ray, row j + 1 is point j
            std::vector<std::size_t> tight;
            for (std::size_t j = 0; j < points.size(); ++j)
                if (cone.zero[ri].test(j + 1))
                    tight.push_back(j);
            out.incident.push_back(std::move(tight));
        }
    }
    return out;
}

} // namespace tropical::detail
