#pragma once

#include <map>
#include <memory>
#include <vector>

#include "monocurve/groebner.hpp"
#include "monocurve/polynomial.hpp"

namespace monocurve {

/// One term of a free-module element: basis component, monomial, coefficient.
struct ModTerm {
    size_t comp;
    Exponents mon;
    Rational coeff;
};

/// Monomial order on a free module: either term-over-position above a ring
/// order (ties broken toward smaller component), or a Schreyer order induced
/// by the leading terms of the previous level's basis.
class ModuleOrder {
public:
    static ModuleOrder top(MonomialOrder ring_order) {
        ModuleOrder o(std::move(ring_order));
        return o;
    }

    /// Induced order: x^a e_i > x^b e_j iff LT(x^a g_i) > LT(x^b g_j) in the
    /// parent module, ties toward smaller index. labels[i] carries
    /// (monomial of LT(g_i), component of LT(g_i)).
    static ModuleOrder schreyer(std::shared_ptr<const ModuleOrder> parent,
                                std::vector<std::pair<Exponents, size_t>> labels) {
        ModuleOrder o(parent->ring_order_);
        o.parent_ = std::move(parent);
        o.labels_ = std::move(labels);
        return o;
    }

    const MonomialOrder& ring_order() const { return ring_order_; }

    Ordering compare(size_t ca, const Exponents& ma, size_t cb, const Exponents& mb) const {
        if (!parent_) {
            Ordering c = ring_order_.compare(ma, mb);
            if (c != Ordering::EQ) return c;
            if (ca == cb) return Ordering::EQ;
            return ca < cb ? Ordering::GT : Ordering::LT;
        }
        const auto& [la, pa] = labels_.at(ca);
        const auto& [lb, pb] = labels_.at(cb);
        Ordering c = parent_->compare(pa, ma + la, pb, mb + lb);
        if (c != Ordering::EQ) return c;
        if (ca == cb) return Ordering::EQ;
        return ca < cb ? Ordering::GT : Ordering::LT;
    }

    bool greater(const ModTerm& a, const ModTerm& b) const {
        return compare(a.comp, a.mon, b.comp, b.mon) == Ordering::GT;
    }

private:
    explicit ModuleOrder(MonomialOrder ring_order) : ring_order_(std::move(ring_order)) {}

    MonomialOrder ring_order_;
    std::shared_ptr<const ModuleOrder> parent_;
    std::vector<std::pair<Exponents, size_t>> labels_;
};

/// Element of a free module R^k, kept sorted descending under the order it
/// was built with.
class ModuleElem {
public:
    ModuleElem() = default;

    static ModuleElem from_terms(std::vector<ModTerm> terms, const ModuleOrder& order) {
        ModuleElem e;
        e.terms_ = std::move(terms);
        e.normalize(order);
        return e;
    }

    static ModuleElem basis_vector(size_t comp, size_t nvars) {
        ModuleElem e;
        e.terms_.push_back({comp, Exponents(nvars), Rational(1)});
        return e;
    }

    /// Columns of a matrix as module elements (component = row).
    static ModuleElem from_column(const std::vector<Polynomial>& col, const ModuleOrder& order) {
        std::vector<ModTerm> terms;
        for (size_t r = 0; r < col.size(); ++r)
            for (const Term& t : col[r].terms()) terms.push_back({r, t.mon, t.coeff});
        return from_terms(std::move(terms), order);
    }

    std::vector<Polynomial> to_column(const Ring& ring, size_t rows) const {
        std::vector<std::vector<Term>> per(rows);
        for (const ModTerm& t : terms_) per.at(t.comp).push_back({t.mon, t.coeff});
        std::vector<Polynomial> out;
        out.reserve(rows);
        for (auto& ts : per) out.push_back(Polynomial::from_terms(ring, std::move(ts)));
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<ModTerm>& terms() const { return terms_; }

    const ModTerm& leading() const {
        if (terms_.empty()) throw ZeroPolynomialError("leading term of zero module element");
        return terms_.front();
    }

    ModuleElem scaled(const Exponents& mon, const Rational& coeff) const {
        ModuleElem e;
        e.terms_.reserve(terms_.size());
        for (const ModTerm& t : terms_)
            e.terms_.push_back({t.comp, t.mon + mon, Rational(t.coeff * coeff)});
        return e;  // multiplying by one term preserves relative order
    }

    ModuleElem monic() const {
        if (terms_.empty()) return *this;
        ModuleElem e(*this);
        Rational inv = Rational(Rational(1) / terms_.front().coeff);
        for (ModTerm& t : e.terms_) t.coeff *= inv;
        return e;
    }

    /// this - (mon, coeff) * other, re-sorted under `order`.
    ModuleElem minus_scaled(const ModuleElem& other, const Exponents& mon, const Rational& coeff,
                            const ModuleOrder& order) const {
        std::vector<ModTerm> terms = terms_;
        for (const ModTerm& t : other.terms_)
            terms.push_back({t.comp, t.mon + mon, Rational(-t.coeff * coeff)});
        return from_terms(std::move(terms), order);
    }

    void normalize(const ModuleOrder& order) {
        std::sort(terms_.begin(), terms_.end(), [&](const ModTerm& a, const ModTerm& b) {
            return order.greater(a, b);
        });
        std::vector<ModTerm> merged;
        for (ModTerm& t : terms_) {
            if (!merged.empty() && merged.back().comp == t.comp && merged.back().mon == t.mon) {
                merged.back().coeff += t.coeff;
                if (merged.back().coeff == 0) merged.pop_back();
            } else if (t.coeff != 0) {
                merged.push_back(std::move(t));
            }
        }
        terms_ = std::move(merged);
    }

private:
    std::vector<ModTerm> terms_;
};

/// Full reduction of f against basis elements; divisors are tried in list
/// order, the leading term first. Optionally records ring-polynomial
/// quotients with f = sum quotients[i]*basis[i] + remainder.
inline ModuleElem module_normal_form(const ModuleElem& f, const std::vector<ModuleElem>& basis,
                                     const ModuleOrder& order, const Ring& ring,
                                     std::vector<Polynomial>* quotients = nullptr) {
    if (quotients) quotients->assign(basis.size(), Polynomial::zero(ring));
    ModuleElem work = f;
    std::vector<ModTerm> remainder;
    while (!work.is_zero()) {
        const ModTerm& lead = work.leading();
        size_t hit = basis.size();
        for (size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].is_zero()) continue;
            const ModTerm& lt = basis[i].leading();
            if (lt.comp == lead.comp && lt.mon.divides(lead.mon)) {
                hit = i;
                break;
            }
        }
        if (hit == basis.size()) {
            remainder.push_back(lead);
            std::vector<ModTerm> rest(work.terms().begin() + 1, work.terms().end());
            work = ModuleElem::from_terms(std::move(rest), order);
            continue;
        }
        const ModTerm& lt = basis[hit].leading();
        Exponents qmon = lead.mon - lt.mon;
        Rational qc(lead.coeff / lt.coeff);
        work = work.minus_scaled(basis[hit], qmon, qc, order);
        if (quotients)
            (*quotients)[hit] = (*quotients)[hit] + Polynomial::monomial(ring, qmon, qc);
    }
    return ModuleElem::from_terms(std::move(remainder), order);
}

/// Module Groebner basis with optional transformation tracking: each output
/// element g satisfies g = sum_j reps[j] * gens[j].
struct ModuleBasis {
    std::vector<ModuleElem> elements;
    std::vector<std::vector<Polynomial>> reps;  // per element, over the input generators
};

inline ModuleBasis module_groebner(const std::vector<ModuleElem>& gens, const ModuleOrder& order,
                                   const Ring& ring, bool track = false) {
    ModuleBasis out;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        out.elements.push_back(gens[i]);
        if (track) {
            std::vector<Polynomial> rep(gens.size(), Polynomial::zero(ring));
            rep[i] = Polynomial::one(ring);
            out.reps.push_back(std::move(rep));
        }
    }

    // All same-component pairs; no coprime skip (unsound for modules).
    std::vector<std::pair<size_t, size_t>> queue;
    auto push_pairs = [&](size_t t) {
        for (size_t i = 0; i < t; ++i)
            if (out.elements[i].leading().comp == out.elements[t].leading().comp)
                queue.push_back({i, t});
    };
    for (size_t t = 0; t < out.elements.size(); ++t) push_pairs(t);

    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.erase(queue.begin());
        const ModTerm& li = out.elements[i].leading();
        const ModTerm& lj = out.elements[j].leading();
        Exponents m = lcm(li.mon, lj.mon);
        ModuleElem s = out.elements[i]
                           .scaled(m - li.mon, Rational(Rational(1) / li.coeff))
                           .minus_scaled(out.elements[j], m - lj.mon,
                                         Rational(Rational(1) / lj.coeff), order);
        std::vector<Polynomial> q;
        ModuleElem r = module_normal_form(s, out.elements, order, ring, track ? &q : nullptr);
        if (r.is_zero()) continue;
        if (track) {
            std::vector<Polynomial> rep(gens.size(), Polynomial::zero(ring));
            Polynomial ui = Polynomial::monomial(ring, m - li.mon, Rational(Rational(1) / li.coeff));
            Polynomial uj = Polynomial::monomial(ring, m - lj.mon, Rational(Rational(1) / lj.coeff));
            for (size_t k = 0; k < gens.size(); ++k)
                rep[k] = ui * out.reps[i][k] - uj * out.reps[j][k];
            for (size_t b = 0; b < out.elements.size(); ++b) {
                if (q[b].is_zero()) continue;
                for (size_t k = 0; k < gens.size(); ++k)
                    rep[k] = rep[k] - q[b] * out.reps[b][k];
            }
            // make the representation match the monic element
            Rational inv(Rational(1) / r.leading().coeff);
            for (auto& p : rep) p = p.scalar_mul(inv);
            out.reps.push_back(std::move(rep));
        }
        out.elements.push_back(r.monic());
        push_pairs(out.elements.size() - 1);
    }
    return out;
}

/// Solve D * u = w for u, where the columns of D generate a submodule of
/// R^rows containing w. Returns false when w is not in the column span.
///
/// Plain division against the columns themselves is tried first: when it
/// terminates it yields the sparsest solution, which keeps downstream users
/// (column repair) close to the stated matrix. The tracked Groebner basis is
/// the complete fallback.
inline bool solve_column_combination(const PolynomialMatrix& D, const std::vector<Polynomial>& w,
                                     std::vector<Polynomial>& u, bool direct_only = false) {
    const Ring& ring = D.ring();
    ModuleOrder order = ModuleOrder::top(MonomialOrder::degrevlex(ring));
    std::vector<ModuleElem> cols;
    for (size_t c = 0; c < D.cols(); ++c)
        cols.push_back(ModuleElem::from_column(D.column(c), order));
    ModuleElem target = ModuleElem::from_column(w, order);

    std::vector<Polynomial> q;
    ModuleElem direct = module_normal_form(target, cols, order, ring, &q);
    if (direct.is_zero()) {
        u = std::move(q);
        return true;
    }
    if (direct_only) return false;

    ModuleBasis gb = module_groebner(cols, order, ring, /*track=*/true);
    ModuleElem r = module_normal_form(target, gb.elements, order, ring, &q);
    if (!r.is_zero()) return false;
    u.assign(D.cols(), Polynomial::zero(ring));
    for (size_t b = 0; b < gb.elements.size(); ++b) {
        if (q[b].is_zero()) continue;
        for (size_t c = 0; c < D.cols(); ++c) u[c] = u[c] + q[b] * gb.reps[b][c];
    }
    return true;
}

} // namespace monocurve
