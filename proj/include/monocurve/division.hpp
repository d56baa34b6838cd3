#pragma once

#include <map>
#include <vector>

#include "monocurve/polynomial.hpp"

namespace monocurve {

/// Multivariate division remainder: r with f - r in <G> and no monomial of r
/// divisible by any leading monomial of G. Deterministic: the current leading
/// monomial is reduced first, divisors are tried in list order; zero members
/// of G are ignored.
///
/// When `quotients` is non-null it receives one polynomial per divisor with
/// f = sum_i quotients[i]*G[i] + r.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                              const MonomialOrder& order,
                              std::vector<Polynomial>* quotients = nullptr) {
    const Ring& ring = f.ring();
    for (const Polynomial& g : G) {
        if (!g.is_zero()) require_same_ring(ring, g.ring(), "normal_form");
    }
    if (quotients) quotients->assign(G.size(), Polynomial::zero(ring));

    struct OrderDesc {
        const MonomialOrder* o;
        bool operator()(const Exponents& a, const Exponents& b) const {
            return o->compare(a, b) == Ordering::GT;
        }
    };
    // Work representation sorted under the active order so the maximal
    // unprocessed monomial is always at the front.
    std::map<Exponents, Rational, OrderDesc> work{OrderDesc{&order}};
    for (const Term& t : f.terms()) work.emplace(t.mon, t.coeff);

    struct Divisor {
        size_t index;
        const Polynomial* g;
        const Term* lt;
    };
    std::vector<Divisor> divisors;
    for (size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero()) continue;
        divisors.push_back({i, &G[i], &G[i].leading_term(order)});
    }

    std::vector<Term> remainder;
    while (!work.empty()) {
        auto top = work.begin();
        Exponents mon = top->first;
        Rational coeff = top->second;
        work.erase(top);
        if (coeff == 0) continue;

        const Divisor* hit = nullptr;
        for (const Divisor& d : divisors) {
            if (d.lt->mon.divides(mon)) {
                hit = &d;
                break;
            }
        }
        if (!hit) {
            remainder.push_back({std::move(mon), std::move(coeff)});
            continue;
        }
        Term q{mon - hit->lt->mon, Rational(coeff / hit->lt->coeff)};
        // work -= q * (g - LT(g)); the leading term cancels by construction.
        for (const Term& t : hit->g->terms()) {
            if (&t == hit->lt) continue;
            Exponents m = t.mon + q.mon;
            Rational delta(t.coeff * q.coeff);
            auto [it, fresh] = work.try_emplace(std::move(m), Rational(-delta));
            if (!fresh) {
                it->second -= delta;
                if (it->second == 0) work.erase(it);
            }
        }
        if (quotients)
            (*quotients)[hit->index] =
                (*quotients)[hit->index] + Polynomial::monomial(ring, q.mon, q.coeff);
    }

    return Polynomial::from_terms(ring, std::move(remainder));
}

/// True when f reduces to zero against G.
inline bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& G,
                            const MonomialOrder& order) {
    return normal_form(f, G, order).is_zero();
}

} // namespace monocurve
