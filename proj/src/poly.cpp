#include "tropical/poly.hpp"

#include <algorithm>
#include <map>

namespace tropical {

Polynomial canonicalize(std::size_t n, std::vector<Monomial> monomials,
                        const CanonicalizeOptions &options) {
    if (n == 0)
        throw DimensionError("number of variables must be at least 1");
    std::map<Exponents, Rational> merged;
    for (auto &m : monomials) {
        if (m.exponents.size() != n)
            throw DimensionError("monomial has " + std::to_string(m.exponents.size()) +
                                 " exponents, expected " + std::to_string(n));
        if (!options.allow_negative_exponents)
            for (auto e : m.exponents)
                if (e < 0)
                    throw DomainError("negative exponent " + std::to_string(e));
        auto [it, inserted] = merged.try_emplace(std::move(m.exponents), m.coefficient);
        if (!inserted && m.coefficient < it->second)
            it->second = m.coefficient;
    }
    if (merged.empty())
        throw EmptyPolynomialError();
    std::vector<Monomial> out;
    out.reserve(merged.size());
    for (auto &[e, c] : merged)
        out.push_back({e, c});
    return Polynomial(n, std::move(out));
}

Polynomial canonicalize(std::size_t n, const std::vector<RawMonomial> &raw,
                        const CanonicalizeOptions &options) {
    std::vector<Monomial> finite;
    for (const auto &r : raw) {
        if (r.exponents.size() != n)
            throw DimensionError("monomial has " + std::to_string(r.exponents.size()) +
                                 " exponents, expected " + std::to_string(n));
        if (!r.coefficient)
            continue;
        if (std::any_of(r.exponents.begin(), r.exponents.end(),
                        [](const auto &e) { return !e.has_value(); }))
            continue;
        Monomial m;
        m.coefficient = *r.coefficient;
        for (const auto &e : r.exponents)
            m.exponents.push_back(*e);
        finite.push_back(std::move(m));
    }
    return canonicalize(n, std::move(finite), options);
}

Rational evaluate_monomial(const Monomial &m, const SlopePoint &x) {
    Rational v = m.coefficient;
    for (std::size_t j = 0; j < m.exponents.size(); ++j)
        if (m.exponents[j] != 0)
            v += Rational(static_cast<long>(m.exponents[j])) * x[j];
    return v;
}

Evaluation evaluate(const Polynomial &f, const SlopePoint &x) {
    if (x.size() != f.num_vars())
        throw DimensionError("point has dimension " + std::to_string(x.size()) + ", expected " +
                             std::to_string(f.num_vars()));
    Evaluation out;
    const auto &ms = f.monomials();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        Rational v = evaluate_monomial(ms[i], x);
        if (out.argmin.empty() || v < out.value) {
            out.value = std::move(v);
            out.argmin.assign(1, i);
        } else if (v == out.value) {
            out.argmin.push_back(i);
        }
    }
    return out;
}

bool on_hypersurface(const Polynomial &f, const SlopePoint &x) {
    return evaluate(f, x).argmin.size() >= 2;
}

Polynomial translate_by_monomial(const Polynomial &f, const Monomial &m) {
    if (m.exponents.size() != f.num_vars())
        throw DimensionError("translation monomial has wrong number of exponents");
    std::vector<Monomial> out = f.monomials();
    for (auto &mono : out) {
        for (std::size_t j = 0; j < mono.exponents.size(); ++j)
            mono.exponents[j] += m.exponents[j];
        mono.coefficient += m.coefficient;
    }
    // Translation may make exponents negative; the caller chose the monomial.
    return canonicalize(f.num_vars(), std::move(out), {.allow_negative_exponents = true});
}

} // namespace tropical
