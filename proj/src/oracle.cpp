#include "tropical/oracle.hpp"

#include "tropical/feasibility.hpp"

#include <algorithm>
#include <random>

namespace tropical {

bool BreakpointSet::contains(const Rational &x) const {
    return std::binary_search(points.begin(), points.end(), x);
}

bool BreakpointSet::subset_of(const BreakpointSet &other) const {
    return std::includes(other.points.begin(), other.points.end(), points.begin(), points.end());
}

namespace {

struct AffineForm {
    Rational slope;
    Rational intercept;
};

// Parameters where the minimum of the forms is attained at least twice.
std::vector<Rational> tie_parameters(const std::vector<AffineForm> &forms) {
    std::vector<Rational> candidates;
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (std::size_t j = i + 1; j < forms.size(); ++j) {
            if (forms[i].slope == forms[j].slope)
                continue;
            candidates.push_back((forms[j].intercept - forms[i].intercept) /
                                 (forms[i].slope - forms[j].slope));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Rational> out;
    for (const auto &s : candidates) {
        std::size_t attained = 0;
        std::optional<Rational> best;
        for (const auto &form : forms) {
            Rational v = form.slope * s + form.intercept;
            if (!best || v < *best) {
                best = std::move(v);
                attained = 1;
            } else if (v == *best) {
                ++attained;
            }
        }
        if (attained >= 2)
            out.push_back(s);
    }
    return out;
}

Rational small_rational(std::mt19937_64 &rng, int max_abs_num, int max_den) {
    const auto span = static_cast<std::uint64_t>(2 * max_abs_num + 1);
    const long num = static_cast<long>(rng() % span) - max_abs_num;
    const long den = static_cast<long>(rng() % static_cast<std::uint64_t>(max_den)) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

BreakpointSet breakpoints_1d(const Polynomial &f) {
    if (f.num_vars() != 1)
        throw DimensionError("breakpoints_1d needs a univariate polynomial");
    const auto &ms = f.monomials();
    std::vector<Rational> found;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            // a_i0 + a_i1 x = a_j0 + a_j1 x; exponents are distinct
            const Rational x = (ms[j].coefficient - ms[i].coefficient) /
                               Rational(static_cast<long>(ms[i].exponents[0] - ms[j].exponents[0]));
            const Rational tie = evaluate_monomial(ms[i], {x});
            if (tie == evaluate(f, {x}).value)
                found.push_back(x);
        }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return {std::move(found)};
}

std::vector<CellSample> cell_points(const Polynomial &f) {
    const std::size_t n = f.num_vars();
    const auto &ms = f.monomials();
    auto diff = [&](std::size_t a, std::size_t b) {
        RationalVector coeffs(n);
        for (std::size_t j = 0; j < n; ++j)
            coeffs[j] = Rational(static_cast<long>(ms[a].exponents[j] - ms[b].exponents[j]));
        return coeffs;
    };
    std::vector<CellSample> out;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t k = i + 1; k < ms.size(); ++k) {
            std::optional<SlopePoint> x;
            for (Relation rel : {Relation::Greater, Relation::GreaterEqual}) {
                LinearSystem sys(n);
                sys.add(diff(i, k), ms[k].coefficient - ms[i].coefficient, Relation::Equal);
                for (std::size_t j = 0; j < ms.size(); ++j)
                    if (j != i && j != k)
                        sys.add(diff(j, i), ms[i].coefficient - ms[j].coefficient, rel);
                x = solve_feasibility(sys);
                if (x)
                    break;
            }
            if (x && on_hypersurface(f, *x))
                out.push_back({i, k, std::move(*x)});
        }
    return out;
}

std::vector<SlopePoint> random_hypersurface_points(const Polynomial &f, std::size_t count,
                                                   std::uint64_t seed) {
    std::vector<SlopePoint> out;
    if (f.size() < 2 || count == 0)
        return out;
    const std::size_t n = f.num_vars();
    const auto &ms = f.monomials();
    std::mt19937_64 rng(seed);
    const std::size_t max_attempts = 50 * count + 100;
    for (std::size_t attempt = 0; attempt < max_attempts && out.size() < count; ++attempt) {
        SlopePoint base(n);
        RationalVector dir(n);
        for (std::size_t j = 0; j < n; ++j) {
            base[j] = small_rational(rng, 12, 4);
            dir[j] = small_rational(rng, 3, 3);
        }
        std::vector<AffineForm> forms;
        forms.reserve(ms.size());
        for (const auto &m : ms) {
            AffineForm form{0, evaluate_monomial(m, base)};
            for (std::size_t j = 0; j < n; ++j)
                form.slope += Rational(static_cast<long>(m.exponents[j])) * dir[j];
            forms.push_back(std::move(form));
        }
        const auto ties = tie_parameters(forms);
        if (ties.empty())
            continue;
        const Rational &s = ties[rng() % ties.size()];
        SlopePoint x(n);
        for (std::size_t j = 0; j < n; ++j)
            x[j] = base[j] + s * dir[j];
        if (on_hypersurface(f, x))
            out.push_back(std::move(x));
    }
    return out;
}

OracleVerdict oracle_check(const Polynomial &f, const Polynomial &g, std::size_t extra_samples,
                           std::uint64_t seed) {
    if (f.num_vars() != g.num_vars())
        throw DimensionError("polynomials have different numbers of variables");
    OracleVerdict verdict;
    if (f.num_vars() == 1) {
        verdict.exact = true;
        const auto bg = breakpoints_1d(g);
        for (const auto &x : breakpoints_1d(f).points)
            if (!bg.contains(x)) {
                verdict.counterexample = SlopePoint{x};
                break;
            }
        return verdict;
    }
    for (auto &sample : cell_points(f))
        if (!on_hypersurface(g, sample.point)) {
            verdict.counterexample = std::move(sample.point);
            return verdict;
        }
    for (auto &x : random_hypersurface_points(f, extra_samples, seed))
        if (!on_hypersurface(g, x)) {
            verdict.counterexample = std::move(x);
            return verdict;
        }
    return verdict;
}

} // namespace tropical
