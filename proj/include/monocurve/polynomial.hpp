#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "monocurve/exponent.hpp"
#include "monocurve/order.hpp"
#include "monocurve/rational.hpp"
#include "monocurve/ring.hpp"

namespace monocurve {

struct Term {
    Exponents mon;
    Rational coeff;
};

/// Canonical term comparison: degrevlex in the ring's own variable sequence.
/// Terms of every polynomial are kept sorted descending under this order so
/// the canonical leading term is O(1); other orders re-scan explicitly.
inline Ordering canonical_cmp(const Exponents& a, const Exponents& b) {
    int64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? Ordering::GT : Ordering::LT;
    for (size_t i = a.size(); i-- > 0;) {
        int64_t d = a[i] - b[i];
        if (d != 0) return d < 0 ? Ordering::GT : Ordering::LT;
    }
    return Ordering::EQ;
}

/// Exact sparse multivariate polynomial with rational coefficients over a
/// named variable list. Immutable after construction; all operations are
/// pure functions returning new values.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const Ring& ring) { return Polynomial(ring); }

    static Polynomial constant(const Ring& ring, const Rational& c) {
        Polynomial p(ring);
        if (c != 0) p.terms_.push_back({Exponents(ring.size()), c});
        return p;
    }

    static Polynomial one(const Ring& ring) { return constant(ring, 1); }

    static Polynomial monomial(const Ring& ring, Exponents e, const Rational& c = 1) {
        if (e.size() != ring.size()) throw DimensionError("monomial does not fit ring");
        Polynomial p(ring);
        if (c != 0) p.terms_.push_back({std::move(e), c});
        return p;
    }

    static Polynomial variable(const Ring& ring, const std::string& name, int64_t power = 1) {
        Exponents e(ring.size());
        e.set(ring.index_of(name), power);
        return monomial(ring, e);
    }

    /// From an arbitrary term list: merges duplicates, prunes zeros, sorts.
    static Polynomial from_terms(const Ring& ring, std::vector<Term> terms) {
        Polynomial p(ring);
        p.terms_ = std::move(terms);
        for (const Term& t : p.terms_)
            if (t.mon.size() != ring.size()) throw DimensionError("term does not fit ring");
        p.normalize();
        return p;
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_zero());
    }

    /// Nonzero constant, i.e. a unit of the polynomial ring.
    bool is_unit_constant() const { return terms_.size() == 1 && terms_[0].mon.is_zero(); }

    /// Total degree; -1 for the zero polynomial.
    int64_t degree() const {
        int64_t d = -1;
        for (const Term& t : terms_) d = std::max(d, t.mon.total_degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int64_t d = terms_[0].mon.total_degree();
        for (const Term& t : terms_)
            if (t.mon.total_degree() != d) return false;
        return true;
    }

    bool is_homogeneous_weighted(const std::vector<int64_t>& w) const {
        if (terms_.empty()) return true;
        int64_t d = terms_[0].mon.weighted_degree(w);
        for (const Term& t : terms_)
            if (t.mon.weighted_degree(w) != d) return false;
        return true;
    }

    /// Order-maximal term. Throws on the zero polynomial.
    const Term& leading_term(const MonomialOrder& order) const {
        if (terms_.empty()) throw ZeroPolynomialError("leading term of zero polynomial");
        size_t best = 0;
        for (size_t i = 1; i < terms_.size(); ++i)
            if (order.compare(terms_[i].mon, terms_[best].mon) == Ordering::GT) best = i;
        return terms_[best];
    }

    const Exponents& leading_monomial(const MonomialOrder& order) const {
        return leading_term(order).mon;
    }

    /// Terms re-sorted descending under an explicit order.
    std::vector<Term> sorted_terms(const MonomialOrder& order) const {
        std::vector<Term> ts = terms_;
        std::sort(ts.begin(), ts.end(), [&](const Term& x, const Term& y) {
            return order.compare(x.mon, y.mon) == Ordering::GT;
        });
        return ts;
    }

    Rational coefficient_of(const Exponents& mon) const {
        for (const Term& t : terms_)
            if (t.mon == mon) return t.coeff;
        return Rational(0);
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (Term& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    Polynomial operator+(const Polynomial& o) const { return combined(o, 1); }
    Polynomial operator-(const Polynomial& o) const { return combined(o, -1); }

    Polynomial operator*(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_, "polynomial multiplication");
        if (is_zero() || o.is_zero()) return zero(ring_);
        if (o.is_monomial()) return times_term(o.terms_[0]);
        if (is_monomial()) return o.times_term(terms_[0]);
        std::map<Exponents, Rational, CanonicalDesc> acc;
        for (const Term& a : terms_)
            for (const Term& b : o.terms_) {
                Exponents m = a.mon + b.mon;
                Rational prod(a.coeff * b.coeff);
                auto [it, fresh] = acc.try_emplace(std::move(m), prod);
                if (!fresh) it->second += prod;
            }
        return from_sorted_map(ring_, acc);
    }

    Polynomial scalar_mul(const Rational& c) const {
        if (c == 0) return zero(ring_);
        Polynomial r(*this);
        for (Term& t : r.terms_) t.coeff *= c;
        return r;
    }

    /// Fast path: multiply by a single term.
    Polynomial times_term(const Term& t) const {
        if (t.coeff == 0) return zero(ring_);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const Term& a : terms_)
            r.terms_.push_back({a.mon + t.mon, Rational(a.coeff * t.coeff)});
        return r;  // adding a fixed monomial preserves the canonical sort
    }

    Polynomial times_monomial(const Exponents& m) const { return times_term({m, 1}); }

    /// Divide by the leading coefficient under `order`.
    Polynomial monic(const MonomialOrder& order) const {
        if (is_zero()) return *this;
        return scalar_mul(Rational(Rational(1) / leading_term(order).coeff));
    }

    /// Substitute each variable by a monomial of the target ring (exact).
    Polynomial substitute_monomials(const Ring& target,
                                    const std::vector<Exponents>& images) const {
        if (images.size() != ring_.size())
            throw DimensionError("one image per variable required");
        std::map<Exponents, Rational, CanonicalDesc> acc;
        for (const Term& t : terms_) {
            Exponents m(target.size());
            for (size_t v = 0; v < ring_.size(); ++v) {
                for (size_t w = 0; w < target.size(); ++w) {
                    int64_t add = 0, cur = m[w];
                    if (__builtin_mul_overflow(t.mon[v], images[v][w], &add) ||
                        __builtin_add_overflow(cur, add, &cur))
                        throw OverflowError("substitution exponent overflow");
                    m.set(w, cur);
                }
            }
            auto [it, fresh] = acc.try_emplace(std::move(m), t.coeff);
            if (!fresh) it->second += t.coeff;
        }
        return from_sorted_map(target, acc);
    }

    /// Transport into another ring by matching variable names; every variable
    /// actually used must exist in the target.
    Polynomial into_ring(const Ring& target) const {
        std::vector<std::optional<size_t>> where(ring_.size());
        for (size_t v = 0; v < ring_.size(); ++v)
            if (target.has(ring_.name(v))) where[v] = target.index_of(ring_.name(v));
        Polynomial r(target);
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) {
            Exponents m(target.size());
            for (size_t v = 0; v < ring_.size(); ++v) {
                if (t.mon[v] == 0) continue;
                if (!where[v])
                    throw ContractError("variable " + ring_.name(v) + " missing in target ring");
                m.set(*where[v], t.mon[v]);
            }
            r.terms_.push_back({std::move(m), t.coeff});
        }
        r.normalize();
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mon != o.terms_[i].mon || terms_[i].coeff != o.terms_[i].coeff)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    struct CanonicalDesc {
        bool operator()(const Exponents& a, const Exponents& b) const {
            return canonical_cmp(a, b) == Ordering::GT;
        }
    };

    static Polynomial from_sorted_map(const Ring& ring,
                                      const std::map<Exponents, Rational, CanonicalDesc>& acc) {
        Polynomial r(ring);
        r.terms_.reserve(acc.size());
        for (const auto& [m, c] : acc)
            if (c != 0) r.terms_.push_back({m, c});
        return r;
    }

    Polynomial combined(const Polynomial& o, int sign) const {
        require_same_ring(ring_, o.ring_, "polynomial addition");
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            Ordering c = canonical_cmp(terms_[i].mon, o.terms_[j].mon);
            if (c == Ordering::GT) {
                r.terms_.push_back(terms_[i++]);
            } else if (c == Ordering::LT) {
                Term t = o.terms_[j++];
                if (sign < 0) t.coeff = -t.coeff;
                r.terms_.push_back(std::move(t));
            } else {
                Rational c2 = terms_[i].coeff;
                if (sign < 0)
                    c2 -= o.terms_[j].coeff;
                else
                    c2 += o.terms_[j].coeff;
                if (c2 != 0) r.terms_.push_back({terms_[i].mon, std::move(c2)});
                ++i, ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) {
            Term t = o.terms_[j];
            if (sign < 0) t.coeff = -t.coeff;
            r.terms_.push_back(std::move(t));
        }
        return r;
    }

    void normalize() {
        std::map<Exponents, Rational, CanonicalDesc> acc;
        for (Term& t : terms_) {
            auto [it, fresh] = acc.try_emplace(std::move(t.mon), t.coeff);
            if (!fresh) it->second += t.coeff;
        }
        terms_.clear();
        for (auto& [m, c] : acc)
            if (c != 0) terms_.push_back({m, c});
    }

    Ring ring_;
    std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul, ScalarMul };

/// Uniform entry point mirroring the library's operation table; the operators
/// above are the idiomatic interface.
inline Polynomial polynomial_arithmetic(ArithOp op, const Polynomial& f, const Polynomial& g) {
    switch (op) {
        case ArithOp::Add: return f + g;
        case ArithOp::Sub: return f - g;
        case ArithOp::Mul: return f * g;
        case ArithOp::ScalarMul:
            if (!g.is_constant()) throw ContractError("scalar_mul needs a constant");
            return f.scalar_mul(g.is_zero() ? Rational(0) : g.terms()[0].coeff);
    }
    throw ContractError("unknown arithmetic op");
}

inline std::pair<Rational, Exponents> leading_term(const MonomialOrder& order,
                                                   const Polynomial& f) {
    const Term& t = f.leading_term(order);
    return {t.coeff, t.mon};
}

} // namespace monocurve
