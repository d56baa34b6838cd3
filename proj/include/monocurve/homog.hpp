#pragma once

#include "monocurve/polynomial.hpp"

namespace monocurve {

/// Homogenize f with respect to `new_var` of the target ring: each term is
/// padded by new_var^(maxdeg - termdeg). Every variable of f's ring must be
/// present in the target ring.
inline Polynomial homogenize(const Polynomial& f, const Ring& target,
                             const std::string& new_var = "x0") {
    if (!target.has(new_var)) throw ContractError("unknown variable: " + new_var);
    Polynomial moved = f.into_ring(target);
    if (moved.is_zero()) return moved;
    size_t v = target.index_of(new_var);
    int64_t maxdeg = moved.degree();
    std::vector<Term> terms;
    terms.reserve(moved.term_count());
    for (const Term& t : moved.terms()) {
        if (t.mon[v] != 0)
            throw ContractError("input already involves " + new_var);
        Exponents m = t.mon;
        m.set(v, maxdeg - t.mon.total_degree());
        terms.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

/// Set `var` to 1 and drop it from the ring. Inverse of homogenize.
inline Polynomial dehomogenize(const Polynomial& f, const std::string& var) {
    const Ring& ring = f.ring();
    size_t v = ring.index_of(var);
    Ring target = ring.without(var);
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    for (const Term& t : f.terms()) {
        Exponents m(target.size());
        size_t k = 0;
        for (size_t i = 0; i < ring.size(); ++i) {
            if (i == v) continue;
            m.set(k++, t.mon[i]);
        }
        terms.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

enum class HomogMode { Homogenize, Dehomogenize };

/// Operation-table entry point; prefer homogenize()/dehomogenize() directly.
inline Polynomial homogenize_dehomogenize(const Polynomial& f, HomogMode mode,
                                          const Ring& target_or_source,
                                          const std::string& var = "x0") {
    if (mode == HomogMode::Homogenize) return homogenize(f, target_or_source, var);
    return dehomogenize(f, var);
}

} // namespace monocurve
