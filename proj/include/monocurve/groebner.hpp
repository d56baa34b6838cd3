#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "monocurve/division.hpp"
#include "monocurve/monomial_ideal.hpp"
#include "monocurve/poly_io.hpp"
#include "monocurve/polynomial.hpp"

namespace monocurve {

enum class BasisStatus { Unverified, Verified, Reduced };

/// A list of polynomials tagged with the order under which it is (claimed or
/// certified) a Groebner basis.
struct GroebnerBasis {
    std::vector<Polynomial> elements;
    MonomialOrder order;
    BasisStatus status = BasisStatus::Unverified;

    bool verified() const { return status != BasisStatus::Unverified; }
    size_t size() const { return elements.size(); }
};

/// Outcome of one S-pair during basis verification.
struct SPolyReport {
    size_t i = 0, j = 0;
    Polynomial spoly;
    bool reduced_to_zero = false;
    std::optional<std::string> skip_reason;  // "coprime-leads" only
};

/// S(f,g) = (lcm/LT(f)) f - (lcm/LT(g)) g with monic normalization; the
/// leading terms cancel.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomialError("S-polynomial of zero");
    require_same_ring(f.ring(), g.ring(), "s_polynomial");
    const Term& lf = f.leading_term(order);
    const Term& lg = g.leading_term(order);
    Exponents l = lcm(lf.mon, lg.mon);
    Polynomial a = f.times_term({l - lf.mon, Rational(Rational(1) / lf.coeff)});
    Polynomial b = g.times_term({l - lg.mon, Rational(Rational(1) / lg.coeff)});
    return a - b;
}

/// Buchberger's criterion: true iff every S-polynomial of distinct pairs
/// reduces to zero against G. Pairs with coprime leading monomials may be
/// skipped (recorded); `audit` disables the skip and reduces them anyway.
inline std::pair<bool, std::vector<SPolyReport>> is_groebner_basis(
    const std::vector<Polynomial>& G, const MonomialOrder& order, bool audit = false) {
    std::vector<const Polynomial*> elems;
    for (const Polynomial& g : G)
        if (!g.is_zero()) elems.push_back(&g);
    std::vector<Polynomial> basis;
    for (const Polynomial* g : elems) basis.push_back(*g);

    bool ok = true;
    std::vector<SPolyReport> reports;
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            SPolyReport rep;
            rep.i = i;
            rep.j = j;
            const Exponents& mi = basis[i].leading_monomial(order);
            const Exponents& mj = basis[j].leading_monomial(order);
            if (!audit && mi.is_coprime_with(mj)) {
                rep.skip_reason = "coprime-leads";
                rep.reduced_to_zero = true;
                reports.push_back(std::move(rep));
                continue;
            }
            rep.spoly = s_polynomial(basis[i], basis[j], order);
            rep.reduced_to_zero = reduces_to_zero(rep.spoly, basis, order);
            if (!rep.reduced_to_zero) ok = false;
            reports.push_back(std::move(rep));
        }
    }
    return {ok, std::move(reports)};
}

namespace detail {

struct Pair {
    size_t i, j;
    Exponents lcm_mon;
};

/// Gebauer-Moeller pair update: installs pairs (i, t) for the new element t
/// and prunes the queue with the product and chain criteria.
inline void update_pairs(std::vector<Pair>& queue, const std::vector<Polynomial>& basis,
                         const std::vector<Exponents>& lms, size_t t,
                         const MonomialOrder& order) {
    (void)basis;
    (void)order;
    const Exponents& lt = lms[t];
    struct Cand {
        size_t i;
        Exponents l;
        bool coprime;
    };
    std::vector<Cand> cands;
    cands.reserve(t);
    for (size_t i = 0; i < t; ++i)
        cands.push_back({i, lcm(lms[i], lt), lms[i].is_coprime_with(lt)});

    std::vector<Cand> kept;
    for (size_t a = 0; a < cands.size(); ++a) {
        const Cand& c = cands[a];
        bool dominated = false;
        if (!c.coprime) {
            for (size_t b = a + 1; b < cands.size() && !dominated; ++b)
                if (cands[b].l.divides(c.l)) dominated = true;
            for (const Cand& k : kept)
                if (k.l.divides(c.l)) {
                    dominated = true;
                    break;
                }
        }
        if (c.coprime || !dominated) kept.push_back(c);
    }

    std::vector<Pair> pruned;
    pruned.reserve(queue.size());
    for (const Pair& p : queue) {
        bool drop = lt.divides(p.lcm_mon) && lcm(lms[p.i], lt) != p.lcm_mon &&
                    lcm(lms[p.j], lt) != p.lcm_mon;
        if (!drop) pruned.push_back(p);
    }
    queue = std::move(pruned);
    for (const Cand& c : kept)
        if (!c.coprime) queue.push_back({c.i, t, c.l});
}

inline std::string basis_cache_key(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& order) {
    std::vector<std::string> texts;
    texts.reserve(gens.size());
    for (const Polynomial& g : gens)
        if (!g.is_zero()) texts.push_back(polynomial_to_text(g));
    std::sort(texts.begin(), texts.end());
    std::string key = order.describe() + "|";
    for (const auto& v : order.ring().names()) key += v + ",";
    key += "|";
    for (const auto& t : texts) key += t + ";";
    return key;
}

inline std::map<std::string, GroebnerBasis>& basis_cache() {
    static std::map<std::string, GroebnerBasis> cache;
    return cache;
}

inline std::mutex& basis_cache_mutex() {
    static std::mutex m;
    return m;
}

} // namespace detail

/// Buchberger completion to the unique reduced Groebner basis of <gens>.
/// Deterministic: pairs are processed by normal selection (smallest lcm under
/// the order, ties by pair index); the result is monic, auto-reduced and
/// sorted descending by leading monomial, hence independent of the input
/// generator order. Results are memoized per (generators, order) in-process.
inline GroebnerBasis buchberger_complete(const std::vector<Polynomial>& gens,
                                         const MonomialOrder& order) {
    std::string key = detail::basis_cache_key(gens, order);
    {
        std::lock_guard<std::mutex> lock(detail::basis_cache_mutex());
        auto it = detail::basis_cache().find(key);
        if (it != detail::basis_cache().end()) return it->second;
    }

    std::vector<Polynomial> basis;
    std::vector<Exponents> lms;
    std::vector<detail::Pair> queue;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        Polynomial m = g.monic(order);
        basis.push_back(m);
        lms.push_back(m.leading_monomial(order));
        detail::update_pairs(queue, basis, lms, basis.size() - 1, order);
    }

    auto pick = [&]() {
        size_t best = 0;
        for (size_t k = 1; k < queue.size(); ++k) {
            Ordering c = order.compare(queue[k].lcm_mon, queue[best].lcm_mon);
            if (c == Ordering::LT ||
                (c == Ordering::EQ && std::make_pair(queue[k].i, queue[k].j) <
                                          std::make_pair(queue[best].i, queue[best].j)))
                best = k;
        }
        detail::Pair p = queue[best];
        queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(best));
        return p;
    };

    while (!queue.empty()) {
        detail::Pair p = pick();
        Polynomial s = s_polynomial(basis[p.i], basis[p.j], order);
        Polynomial r = normal_form(s, basis, order);
        if (r.is_zero()) continue;
        r = r.monic(order);
        basis.push_back(r);
        lms.push_back(r.leading_monomial(order));
        detail::update_pairs(queue, basis, lms, basis.size() - 1, order);
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (lms[j].divides(lms[i]) && (lms[j] != lms[i] || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Tail-reduce each element against the others.
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(normal_form(minimal[i], others, order).monic(order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(a.leading_monomial(order), b.leading_monomial(order)) ==
               Ordering::GT;
    });

    GroebnerBasis out{std::move(reduced), order, BasisStatus::Reduced};
    {
        std::lock_guard<std::mutex> lock(detail::basis_cache_mutex());
        detail::basis_cache().emplace(std::move(key), out);
    }
    return out;
}

/// Leading monomials of a verified basis, reduced to the unique minimal
/// generating set of the initial ideal.
inline MonomialIdeal initial_ideal(const GroebnerBasis& G) {
    if (!G.verified())
        throw ContractError("initial_ideal requires a verified Groebner basis");
    std::vector<Exponents> lms;
    lms.reserve(G.elements.size());
    for (const Polynomial& g : G.elements)
        if (!g.is_zero()) lms.push_back(g.leading_monomial(G.order));
    return MonomialIdeal(G.order.ring(), std::move(lms));
}

/// Generators of <gens> intersected with the subring without `drop_vars`,
/// computed with a block elimination order (dropped block first). The kept
/// block is ordered by `kept_desc` when given, else by ring sequence.
inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                         const std::vector<std::string>& drop_vars,
                                         const std::vector<std::string>& kept_desc = {}) {
    if (gens.empty()) return {};
    const Ring& ring = gens.front().ring();
    MonomialOrder order = MonomialOrder::block_elimination(ring, drop_vars, kept_desc);
    GroebnerBasis gb = buchberger_complete(gens, order);

    Ring target = ring;
    for (const auto& v : drop_vars) target = target.without(v);
    std::vector<size_t> dropped;
    for (const auto& v : drop_vars) dropped.push_back(ring.index_of(v));

    std::vector<Polynomial> out;
    for (const Polynomial& g : gb.elements) {
        bool free_of_block = true;
        for (const Term& t : g.terms())
            for (size_t v : dropped)
                if (t.mon[v] != 0) free_of_block = false;
        if (free_of_block) out.push_back(g.into_ring(target));
    }
    return out;
}

/// Height of a proper ideal: (#vars) - Krull dimension of the quotient,
/// computed on the initial monomial ideal. Unit ideals are signaled by
/// UnitIdealError.
inline size_t codimension(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
    GroebnerBasis gb = buchberger_complete(gens, order);
    if (gb.size() == 1 && gb.elements[0].is_unit_constant())
        throw UnitIdealError("codimension of the unit ideal");
    MonomialIdeal in = initial_ideal(gb);
    return order.ring().size() - dimension_monomial(in);
}

} // namespace monocurve
