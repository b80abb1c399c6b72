#include "tropical/feasibility.hpp"

#include "tropical/errors.hpp"

#include <map>

namespace tropical {

bool LinearConstraint::satisfied_by(const RationalVector &x) const {
    const Rational lhs = dot(coeffs, x);
    switch (relation) {
    case Relation::GreaterEqual:
        return lhs >= offset;
    case Relation::Greater:
        return lhs > offset;
    case Relation::Equal:
        return lhs == offset;
    }
    return false;
}

void LinearSystem::add(RationalVector coeffs, Rational offset, Relation relation) {
    if (coeffs.size() != dim_)
        throw DimensionError("constraint has " + std::to_string(coeffs.size()) +
                             " coefficients, system has " + std::to_string(dim_) + " unknowns");
    constraints_.push_back({std::move(coeffs), std::move(offset), relation});
}

bool LinearSystem::satisfied_by(const RationalVector &x) const {
    for (const auto &c : constraints_)
        if (!c.satisfied_by(x))
            return false;
    return true;
}

namespace {

struct Inequality {
    RationalVector coeffs;
    Rational offset;
    bool strict = false;
};

// Inequalities keyed by their direction, scaled so the first nonzero
// coefficient has magnitude one. Only the tightest offset per direction is
// kept; redundant parallel constraints are what makes elimination blow up.
class InequalitySet {
  public:
    // Returns false if the inequality is a constant contradiction.
    bool insert(Inequality in) {
        std::size_t lead = 0;
        while (lead < in.coeffs.size() && in.coeffs[lead] == 0)
            ++lead;
        if (lead == in.coeffs.size())
            return in.strict ? 0 > in.offset : 0 >= in.offset;
        const Rational scale = abs(in.coeffs[lead]);
        if (scale != 1) {
            for (auto &c : in.coeffs)
                c /= scale;
            in.offset /= scale;
        }
        auto [it, inserted] = by_direction_.try_emplace(in.coeffs, Bound{in.offset, in.strict});
        if (!inserted) {
            Bound &b = it->second;
            if (in.offset > b.offset || (in.offset == b.offset && in.strict))
                b = {in.offset, in.strict};
        }
        return true;
    }

    std::vector<Inequality> items() const {
        std::vector<Inequality> out;
        out.reserve(by_direction_.size());
        for (const auto &[coeffs, b] : by_direction_)
            out.push_back({coeffs, b.offset, b.strict});
        return out;
    }

  private:
    struct Bound {
        Rational offset;
        bool strict;
    };
    std::map<RationalVector, Bound> by_direction_;
};

struct Substitution {
    std::size_t var;
    RationalVector coeffs; // x_var = offset - <coeffs, x> (coeffs[var] == 0)
    Rational offset;
};

void substitute(RationalVector &coeffs, Rational &offset, const Substitution &s) {
    const Rational c = coeffs[s.var];
    if (c == 0)
        return;
    coeffs[s.var] = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (s.coeffs[j] != 0)
            coeffs[j] -= c * s.coeffs[j];
    offset -= c * s.offset;
}

// Bounds are already known to be consistent (open ends included).
Rational choose_value(const std::optional<Rational> &lo, const std::optional<Rational> &hi) {
    if (lo && hi)
        return *lo == *hi ? *lo : Rational((*lo + *hi) / 2);
    if (lo) {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
        return Rational(f + 1);
    }
    if (hi) {
        mpz_class c;
        mpz_cdiv_q(c.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
        return Rational(c - 1);
    }
    return Rational(0);
}

} // namespace

std::optional<RationalVector> solve_feasibility(const LinearSystem &system) {
    const std::size_t d = system.dim();
    std::vector<LinearConstraint> equalities;
    std::vector<Inequality> inequalities;
    for (const auto &c : system.constraints()) {
        if (c.relation == Relation::Equal)
            equalities.push_back(c);
        else
            inequalities.push_back({c.coeffs, c.offset, c.relation == Relation::Greater});
    }

    // Substitute equalities, solving each for its highest-index variable.
    std::vector<Substitution> subs;
    std::vector<bool> substituted(d, false);
    for (std::size_t e = 0; e < equalities.size(); ++e) {
        auto &eq = equalities[e];
        for (const auto &s : subs)
            substitute(eq.coeffs, eq.offset, s);
        std::size_t p = d;
        for (std::size_t j = d; j-- > 0;)
            if (eq.coeffs[j] != 0) {
                p = j;
                break;
            }
        if (p == d) {
            if (eq.offset != 0)
                return std::nullopt;
            continue;
        }
        Substitution s{p, RationalVector(d), eq.offset / eq.coeffs[p]};
        for (std::size_t j = 0; j < d; ++j)
            if (j != p)
                s.coeffs[j] = eq.coeffs[j] / eq.coeffs[p];
        substituted[p] = true;
        subs.push_back(std::move(s));
    }

    InequalitySet current;
    for (auto &in : inequalities) {
        for (const auto &s : subs)
            substitute(in.coeffs, in.offset, s);
        if (!current.insert(std::move(in)))
            return std::nullopt;
    }

    // levels[k] holds the system in which variables above order[k] are gone.
    std::vector<std::size_t> order;
    for (std::size_t j = d; j-- > 0;)
        if (!substituted[j])
            order.push_back(j);
    std::vector<std::vector<Inequality>> levels;
    for (std::size_t var : order) {
        std::vector<Inequality> items = current.items();
        levels.push_back(items);
        std::vector<const Inequality *> lower, upper;
        InequalitySet next;
        for (const auto &in : items) {
            const int sign = sgn(in.coeffs[var]);
            if (sign > 0)
                lower.push_back(&in);
            else if (sign < 0)
                upper.push_back(&in);
            else
                next.insert(in);
        }
        for (const auto *lo : lower)
            for (const auto *hi : upper) {
                const Rational a = -hi->coeffs[var];
                const Rational b = lo->coeffs[var];
                Inequality comb;
                comb.coeffs.resize(d);
                for (std::size_t j = 0; j < d; ++j)
                    comb.coeffs[j] = a * lo->coeffs[j] + b * hi->coeffs[j];
                comb.coeffs[var] = 0;
                comb.offset = a * lo->offset + b * hi->offset;
                comb.strict = lo->strict || hi->strict;
                if (!next.insert(std::move(comb)))
                    return std::nullopt;
            }
        current = std::move(next);
    }
    for (const auto &in : current.items())
        if (in.strict ? !(0 > in.offset) : !(0 >= in.offset))
            return std::nullopt;

    RationalVector x(d);
    for (std::size_t k = order.size(); k-- > 0;) {
        const std::size_t var = order[k];
        std::optional<Rational> lo, hi;
        for (const auto &in : levels[k]) {
            const Rational &c = in.coeffs[var];
            if (c == 0)
                continue;
            Rational rest = in.offset;
            for (std::size_t j = 0; j < d; ++j)
                if (j != var && in.coeffs[j] != 0)
                    rest -= in.coeffs[j] * x[j];
            const Rational bound = rest / c;
            if (c > 0) {
                if (!lo || bound > *lo)
                    lo = bound;
            } else {
                if (!hi || bound < *hi)
                    hi = bound;
            }
        }
        x[var] = choose_value(lo, hi);
    }
    for (std::size_t k = subs.size(); k-- > 0;) {
        const auto &s = subs[k];
        Rational v = s.offset;
        for (std::size_t j = 0; j < d; ++j)
            if (s.coeffs[j] != 0)
                v -= s.coeffs[j] * x[j];
        x[s.var] = v;
    }
    return x;
}

} // namespace tropical
