#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "monocurve/polynomial.hpp"

namespace monocurve {

/// Render one monomial as `x1^3*x3^2` (exponent 1 elided); "1" for the empty
/// monomial.
inline std::string monomial_to_text(const Ring& ring, const Exponents& mon) {
    std::string s;
    for (size_t v = 0; v < ring.size(); ++v) {
        if (mon[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.name(v);
        if (mon[v] != 1) s += "^" + std::to_string(mon[v]);
    }
    return s.empty() ? "1" : s;
}

/// Canonical text form, bit-exact for golden files: terms descending under
/// `order`, coefficient before `*`, unit coefficients elided.
inline std::string polynomial_to_text(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const Term& t : f.sorted_terms(order)) {
        Rational mag = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
        if (first) {
            if (t.coeff < 0) s += "-";
            first = false;
        } else {
            s += t.coeff < 0 ? " - " : " + ";
        }
        std::string mono = monomial_to_text(f.ring(), t.mon);
        if (mag != 1) {
            s += rational_to_string(mag);
            if (mono != "1") s += "*" + mono;
        } else {
            s += mono;
        }
    }
    return s;
}

inline std::string polynomial_to_text(const Polynomial& f) {
    return polynomial_to_text(f, MonomialOrder::degrevlex(f.ring()));
}

namespace detail {

class PolyLexer {
public:
    explicit PolyLexer(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected a number in polynomial text");
        return s_.substr(start, pos_ - start);
    }
    std::string identifier() {
        skip_ws();
        size_t start = pos_;
        if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected a variable name in polynomial text");
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace detail

/// Parse the text format produced by polynomial_to_text. Accepts any term
/// order and repeated monomials (merged on construction).
inline Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
    detail::PolyLexer lex(text);
    std::vector<Term> terms;
    bool first = true;
    while (!lex.done()) {
        int sign = 1;
        if (lex.eat('+')) {
        } else if (lex.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms");
        }
        first = false;

        Rational coeff(1);
        Exponents mon(ring.size());
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            Integer num(lex.number());
            Integer den(1);
            if (lex.eat('/')) den = Integer(lex.number());
            if (den == 0) throw ParseError("zero denominator");
            coeff = Rational(num, den);
            saw_factor = true;
            if (!lex.eat('*')) {
                terms.push_back({std::move(mon), sign < 0 ? Rational(-coeff) : coeff});
                continue;
            }
        }
        while (true) {
            std::string var = lex.identifier();
            size_t v = ring.index_of(var);  // throws on unknown variables
            int64_t exp = 1;
            if (lex.eat('^')) exp = std::stoll(lex.number());
            mon.set(v, mon[v] + exp);
            saw_factor = true;
            if (!lex.eat('*')) break;
        }
        if (!saw_factor) throw ParseError("empty term");
        terms.push_back({std::move(mon), sign < 0 ? Rational(-coeff) : coeff});
    }
    if (terms.empty()) throw ParseError("empty polynomial text");
    // A lone "0" parses as the constant 0 and normalizes away.
    return Polynomial::from_terms(ring, std::move(terms));
}

} // namespace monocurve
