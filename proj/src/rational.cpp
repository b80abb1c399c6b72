#include "tropical/rational.hpp"

#include <cctype>

namespace tropical {

std::string to_string(const Rational &q) { return q.get_str(); }

std::string to_string(const Integer &z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Integer to_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num))
        return std::nullopt;
    Integer p = to_integer(num);
    Integer q = 1;
    if (slash != std::string_view::npos) {
        std::string_view den = text.substr(slash + 1);
        if (den.empty() || den.front() == '+' || den.front() == '-' || !is_integer_literal(den))
            return std::nullopt;
        q = to_integer(den);
        if (q == 0)
            return std::nullopt;
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational dot(const RationalVector &a, const RationalVector &b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational dot(const IntegerVector &a, const RationalVector &b) {
    // integral entries of b are summed in Z, which avoids most gcd work
    Integer whole = 0;
    Rational frac = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        if (mpz_cmp_ui(b[i].get_den_mpz_t(), 1) == 0)
            mpz_addmul(whole.get_mpz_t(), a[i].get_mpz_t(), b[i].get_num_mpz_t());
        else
            frac += a[i] * b[i];
    }
    return frac + whole;
}

void make_primitive(IntegerVector &v) {
    Integer g = 0;
    for (const auto &x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto &x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntegerVector primitive_direction(const RationalVector &v) {
    Integer l = 1;
    for (const auto &x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntegerVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i].get_num() * (l / v[i].get_den());
    make_primitive(out);
    return out;
}

RationalVector to_rational(const IntegerVector &v) {
    RationalVector out;
    out.reserve(v.size());
    for (const auto &x : v)
        out.emplace_back(x);
    return out;
}

std::size_t rank(std::vector<RationalVector> rows) {
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0)
                continue;
            Rational factor = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] -= factor * rows[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace tropical
