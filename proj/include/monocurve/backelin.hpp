#pragma once

#include <vector>

#include "monocurve/monomial_ideal.hpp"
#include "monocurve/toric.hpp"

namespace monocurve {

/// Shorthand for x1^a x2^b x3^c x4^d - x1^e x2^f x3^g x4^h.
inline Polynomial curve_binomial(const Ring& ring, const Exponents& plus,
                                 const Exponents& minus) {
    return Polynomial::monomial(ring, plus) - Polynomial::monomial(ring, minus);
}

/// The semigroup <s, s+3, s+3n+1, s+3n+2> with s = r(3n+2)+3 and its defining
/// ideal's distinguished generators: the 3n+4 binomials f1, f2_i, f3_j, f4_j,
/// f5, f6, f7, plus the exchange element g = x1^{r+2} - x2 x4^r that replaces
/// f3_{n-1} in the Groebner generating set.
struct BackelinInstance {
    int64_t n = 0, r = 0, s = 0;
    MonomialCurveSpec spec;
    Ring ring;

    Polynomial f1, f5, f6, f7, g;
    std::vector<Polynomial> f2;  // f2[i-1] for 1 <= i <= n
    std::vector<Polynomial> f3;  // f3[j]   for 0 <= j <= n-1
    std::vector<Polynomial> f4;  // f4[j]   for 0 <= j <= n-1

    /// The full minimal generating set (3n+4 binomials).
    std::vector<Polynomial> generators() const {
        std::vector<Polynomial> out{f1};
        out.insert(out.end(), f2.begin(), f2.end());
        out.insert(out.end(), f3.begin(), f3.end());
        out.insert(out.end(), f4.begin(), f4.end());
        out.push_back(f5);
        out.push_back(f6);
        out.push_back(f7);
        return out;
    }

    /// Generating set with f3_{n-1} exchanged for g; a Groebner basis under
    /// degrevlex x1 > x2 > x3 > x4.
    std::vector<Polynomial> groebner_generators() const {
        std::vector<Polynomial> out{f1};
        out.insert(out.end(), f2.begin(), f2.end());
        out.insert(out.end(), f3.begin(), f3.end() - 1);
        out.push_back(g);
        out.insert(out.end(), f4.begin(), f4.end());
        out.push_back(f5);
        out.push_back(f6);
        out.push_back(f7);
        return out;
    }

    MonomialOrder order() const { return spec.standard_order(); }

    /// Closed form of the minimal generators of the initial ideal under
    /// degrevlex x1 > x2 > x3 > x4.
    MonomialIdeal initial_ideal_closed_form() const {
        std::vector<Exponents> gens;
        gens.push_back({0, 1, 3, 0});  // x2 x3^3
        for (int64_t i = 1; i <= n; ++i) gens.push_back({n - i, 0, 3 * i - 1, 0});
        for (int64_t j = 0; j <= n - 1; ++j) gens.push_back({r - n + 3 + j, n - 1 - j, 0, 0});
        for (int64_t j = 0; j <= n - 1; ++j) gens.push_back({r - 2 * n + 3 + j, 2 * n - j, 0, 0});
        gens.push_back({r - n + 2, n, 1, 0});  // LT f5
        gens.push_back({0, n + 1, 1, 0});      // LT f6
        gens.push_back({0, 2 * n + 1, 0, 0});  // LT f7
        return MonomialIdeal(ring, std::move(gens));
    }
};

inline BackelinInstance backelin_system(int64_t n, int64_t r) {
    if (n < 2 || r < 3 * n + 2)
        throw ContractError("backelin_system needs n >= 2 and r >= 3n+2");
    int64_t s = r * (3 * n + 2) + 3;
    Ring ring = affine_ring(4);
    BackelinInstance inst{
        n, r, s,
        MonomialCurveSpec({s, s + 3, s + 3 * n + 1, s + 3 * n + 2}, CurveMode::Affine,
                          FamilyTag(BackelinFamily{n, r})),
        ring};

    auto bin = [&](std::initializer_list<int64_t> plus, std::initializer_list<int64_t> minus) {
        return curve_binomial(ring, Exponents(plus), Exponents(minus));
    };

    inst.f1 = bin({0, 1, 3, 0}, {1, 0, 0, 3});
    for (int64_t i = 1; i <= n; ++i)
        inst.f2.push_back(bin({n - i, 0, 3 * i - 1, 0}, {0, n - i + 1, 0, 3 * i - 2}));
    for (int64_t j = 0; j <= n - 1; ++j)
        inst.f3.push_back(bin({r - n + 3 + j, n - 1 - j, 0, 0}, {0, 0, 2 + 3 * j, r - 1 - 3 * j}));
    for (int64_t j = 0; j <= n - 1; ++j)
        inst.f4.push_back(bin({r - 2 * n + 3 + j, 2 * n - j, 0, 0}, {0, 0, 3 * j + 1, r + 1 - 3 * j}));
    inst.f5 = bin({r - n + 2, n, 1, 0}, {0, 0, 0, r + 2});
    inst.f6 = bin({0, n + 1, 1, 0}, {n, 0, 0, 2});
    inst.f7 = bin({0, 2 * n + 1, 0, 0}, {2 * n - 1, 0, 1, 1});
    inst.g = bin({r + 2, 0, 0, 0}, {0, 1, 0, r});
    return inst;
}

/// Hilbert-series numerator of the Backelin quotient in closed form:
///   1 - n t^{r+2} - 2 t^{r+3} + (3n+4) t^{r+4} - (2n+2) t^{r+5}
///   - t^{2n+3} + 2 t^{2n+2} - t^{2n+1} + t^{n+4} + t^{n+3} - t^{n+2}
///   - t^{n+1} - t^4 - sum_{i=2}^{n} (t^{n+2i-1} + t^{n+2i+1} - 2 t^{n+2i}).
inline HilbertNumerator backelin_hilbert_formula(int64_t n, int64_t r) {
    if (n < 2 || r < 3 * n + 2)
        throw ContractError("backelin_hilbert_formula needs n >= 2 and r >= 3n+2");
    HilbertNumerator p = HilbertNumerator::one();
    p.add_term(r + 2, -n);
    p.add_term(r + 3, -2);
    p.add_term(r + 4, 3 * n + 4);
    p.add_term(r + 5, -(2 * n + 2));
    p.add_term(2 * n + 3, -1);
    p.add_term(2 * n + 2, 2);
    p.add_term(2 * n + 1, -1);
    p.add_term(n + 4, 1);
    p.add_term(n + 3, 1);
    p.add_term(n + 2, -1);
    p.add_term(n + 1, -1);
    p.add_term(4, -1);
    for (int64_t i = 2; i <= n; ++i) {
        p.add_term(n + 2 * i - 1, -1);
        p.add_term(n + 2 * i + 1, -1);
        p.add_term(n + 2 * i, 2);
    }
    return p;
}

} // namespace monocurve
