#include "tropical/poly.hpp"

#include <json.hpp>

#include <cctype>
#include <map>
#include <sstream>

namespace tropical {

namespace {

struct ParsedTerm {
    std::map<std::size_t, std::int64_t> exponents; // 1-based variable index
    Rational coefficient = 0;
    bool infinite = false;
};

class TextParser {
  public:
    explicit TextParser(std::string_view text) : s_(text) {}

    std::vector<ParsedTerm> parse() {
        std::vector<ParsedTerm> terms;
        skip_ws();
        if (s_.substr(pos_, 3) == "min" && !is_ident_char(peek_at(pos_ + 3))) {
            pos_ += 3;
            expect('(');
            terms.push_back(term());
            while (accept(','))
                terms.push_back(term());
            expect(')');
        } else {
            terms.push_back(term());
        }
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected trailing input");
        return terms;
    }

  private:
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    char peek_at(std::size_t i) const { return i < s_.size() ? s_[i] : '\0'; }

    char peek() {
        skip_ws();
        return peek_at(pos_);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    ParsedTerm term() {
        ParsedTerm t;
        summand(t);
        while (accept('+'))
            summand(t);
        return t;
    }

    void summand(ParsedTerm &t) {
        char c = peek();
        if (s_.substr(pos_, 3) == "inf" && !is_ident_char(peek_at(pos_ + 3))) {
            pos_ += 3;
            t.infinite = true;
            return;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            std::size_t var = variable();
            t.exponents[var] += 1;
            return;
        }
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            Rational value = number();
            if (accept('*')) {
                if (value.get_den() != 1)
                    throw ParseError("exponent must be an integer", start);
                if (!value.get_num().fits_slong_p())
                    throw ParseError("exponent out of range", start);
                std::size_t var = variable();
                t.exponents[var] += value.get_num().get_si();
            } else {
                t.coefficient += value;
            }
            return;
        }
        fail("expected a number, a variable or 'inf'");
    }

    Rational number() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-'))
            ++pos_;
        auto digits = [&] {
            const std::size_t d = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return pos_ > d;
        };
        if (!digits())
            fail("expected digits");
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            if (!digits())
                fail("expected denominator digits");
        }
        auto q = parse_rational(s_.substr(start, pos_ - start));
        if (!q)
            throw ParseError("invalid rational '" + std::string(s_.substr(start, pos_ - start)) + "'",
                             start);
        return *q;
    }

    std::size_t variable() {
        skip_ws();
        const std::size_t start = pos_;
        const char c = peek_at(pos_);
        if (c != 'x' && c != 'y' && c != 'z')
            fail("expected a variable");
        ++pos_;
        std::size_t d = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == d) {
            // x, y, z are shorthands for x1, x2, x3
            return static_cast<std::size_t>(c - 'x') + 1;
        }
        if (c != 'x')
            throw ParseError("only 'x' takes an index", start);
        const std::string idx(s_.substr(d, pos_ - d));
        if (idx.size() > 6)
            throw ParseError("variable index out of range", start);
        const std::size_t i = std::stoul(idx);
        if (i == 0)
            throw ParseError("variable indices are 1-based", start);
        return i;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_text(std::string_view text, std::optional<std::size_t> n,
                      const CanonicalizeOptions &options) {
    const auto terms = TextParser(text).parse();
    std::size_t used = 1;
    for (const auto &t : terms)
        if (!t.exponents.empty())
            used = std::max(used, t.exponents.rbegin()->first);
    const std::size_t dim = n.value_or(used);
    if (used > dim)
        throw DimensionError("variable x" + std::to_string(used) + " exceeds n = " +
                             std::to_string(dim));
    std::vector<RawMonomial> raw;
    for (const auto &t : terms) {
        RawMonomial r;
        r.exponents.assign(dim, std::int64_t{0});
        for (const auto &[var, e] : t.exponents)
            r.exponents[var - 1] = e;
        if (!t.infinite)
            r.coefficient = t.coefficient;
        raw.push_back(std::move(r));
    }
    return canonicalize(dim, raw, options);
}

Polynomial parse_structured(std::string_view text, std::optional<std::size_t> n,
                            const CanonicalizeOptions &options) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    auto bad = [](const std::string &msg) { return ParseError(msg, 0); };
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("monomials"))
        throw bad("structured polynomial needs fields 'n' and 'monomials'");
    if (!doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() < 1)
        throw bad("'n' must be a positive integer");
    const auto dim = doc["n"].get<std::size_t>();
    if (n && *n != dim)
        throw DimensionError("structured polynomial has n = " + std::to_string(dim) +
                             ", expected " + std::to_string(*n));
    if (!doc["monomials"].is_array())
        throw bad("'monomials' must be a list");
    std::vector<RawMonomial> raw;
    for (const auto &m : doc["monomials"]) {
        if (!m.is_object() || !m.contains("coeff") || !m.contains("exp") || !m["exp"].is_array())
            throw bad("each monomial needs 'coeff' and an 'exp' list");
        RawMonomial r;
        const auto &c = m["coeff"];
        if (c.is_string()) {
            const auto s = c.get<std::string>();
            if (s != "inf") {
                auto q = parse_rational(s);
                if (!q)
                    throw bad("invalid coefficient '" + s + "'");
                r.coefficient = *q;
            }
        } else if (c.is_number_integer()) {
            r.coefficient = Rational(Integer(std::to_string(c.get<std::int64_t>())));
        } else {
            throw bad("coefficient must be a rational string or an integer");
        }
        for (const auto &e : m["exp"]) {
            if (e.is_number_integer())
                r.exponents.emplace_back(e.get<std::int64_t>());
            else if (e.is_string() && e.get<std::string>() == "inf")
                r.exponents.emplace_back(std::nullopt);
            else
                throw bad("exponents must be integers or \"inf\"");
        }
        raw.push_back(std::move(r));
    }
    return canonicalize(dim, raw, options);
}

Polynomial parse_polynomial(std::string_view text, std::optional<std::size_t> n,
                            const CanonicalizeOptions &options) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        return parse_structured(text, n, options);
    return parse_text(text, n, options);
}

std::string to_text(const Polynomial &f) {
    std::ostringstream out;
    out << "min(";
    bool first_term = true;
    for (const auto &m : f.monomials()) {
        if (!first_term)
            out << ", ";
        first_term = false;
        bool any = false;
        const bool constant = std::all_of(m.exponents.begin(), m.exponents.end(),
                                          [](auto e) { return e == 0; });
        if (m.coefficient != 0 || constant) {
            out << to_string(m.coefficient);
            any = true;
        }
        for (std::size_t j = 0; j < m.exponents.size(); ++j) {
            const auto e = m.exponents[j];
            if (e == 0)
                continue;
            if (any)
                out << " + ";
            if (e != 1)
                out << e << '*';
            out << 'x' << (j + 1);
            any = true;
        }
    }
    out << ')';
    return out.str();
}

std::string to_structured(const Polynomial &f) {
    nlohmann::ordered_json doc;
    doc["n"] = f.num_vars();
    auto monos = nlohmann::ordered_json::array();
    for (const auto &m : f.monomials()) {
        nlohmann::ordered_json entry;
        entry["coeff"] = to_string(m.coefficient);
        entry["exp"] = m.exponents;
        monos.push_back(std::move(entry));
    }
    doc["monomials"] = std::move(monos);
    return doc.dump();
}

} // namespace tropical
