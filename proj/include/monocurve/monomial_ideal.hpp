#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "monocurve/exponent.hpp"
#include "monocurve/poly_io.hpp"
#include "monocurve/ring.hpp"

namespace monocurve {

/// Ascending lexicographic comparison on the reversed variable list (the
/// exponent of the last ring variable is compared first). This is the
/// canonical generator arrangement and the pivot order of the Hilbert-series
/// colon recursion.
inline bool revlist_lex_less(const Exponents& a, const Exponents& b) {
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

/// A monomial ideal kept as its unique minimal generating set, sorted
/// canonically. Membership is divisibility by some generator.
class MonomialIdeal {
public:
    explicit MonomialIdeal(Ring ring, std::vector<Exponents> gens = {})
        : ring_(std::move(ring)) {
        for (const Exponents& g : gens)
            if (g.size() != ring_.size()) throw DimensionError("generator does not fit ring");
        gens_ = minimalize(std::move(gens));
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Exponents>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }
    bool is_unit_ideal() const { return gens_.size() == 1 && gens_[0].is_zero(); }

    bool contains(const Exponents& m) const {
        for (const Exponents& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    /// I : m, generated by g / gcd(g, m); minimalized.
    MonomialIdeal colon(const Exponents& m) const {
        std::vector<Exponents> out;
        out.reserve(gens_.size());
        for (const Exponents& g : gens_) out.push_back(g - gcd(g, m));
        return MonomialIdeal(ring_, std::move(out));
    }

    /// Unique minimal generating set of the ideal the monomials generate.
    static std::vector<Exponents> minimalize(std::vector<Exponents> ms) {
        std::sort(ms.begin(), ms.end(), [](const Exponents& a, const Exponents& b) {
            int64_t da = a.total_degree(), db = b.total_degree();
            if (da != db) return da < db;
            return revlist_lex_less(a, b);
        });
        std::vector<Exponents> keep;
        for (const Exponents& m : ms) {
            bool redundant = false;
            for (const Exponents& k : keep) {
                if (k.divides(m)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) keep.push_back(m);
        }
        std::sort(keep.begin(), keep.end(), revlist_lex_less);
        return keep;
    }

    std::string to_text() const {
        std::string s = "{";
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (i) s += ", ";
            s += monomial_to_text(ring_, gens_[i]);
        }
        return s + "}";
    }

private:
    Ring ring_;
    std::vector<Exponents> gens_;
};

inline MonomialIdeal minimal_generators(const Ring& ring, std::vector<Exponents> monomials) {
    return MonomialIdeal(ring, std::move(monomials));
}

inline MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Exponents& m) {
    return I.colon(m);
}

// ---------------------------------------------------------------------------
// Standard monomials
// ---------------------------------------------------------------------------

struct FiniteStandardMonomials {
    uint64_t count = 0;
    std::vector<Exponents> monomials;  // filled only on request
};

struct InfiniteStandardMonomials {
    std::string witness_variable;  // has no pure power in the ideal
};

using StandardMonomials = std::variant<FiniteStandardMonomials, InfiniteStandardMonomials>;

/// The monomials outside I. Finite exactly when every variable has a pure
/// power inside I; the finite branch counts them by a bounded staircase walk.
inline StandardMonomials standard_monomials(const MonomialIdeal& I, bool enumerate = false) {
    const Ring& ring = I.ring();
    size_t n = ring.size();
    std::vector<int64_t> bound(n, -1);  // pure power exponent per variable
    for (const Exponents& g : I.generators()) {
        size_t support_var = n;
        bool pure = true;
        for (size_t v = 0; v < n; ++v) {
            if (g[v] == 0) continue;
            if (support_var != n) {
                pure = false;
                break;
            }
            support_var = v;
        }
        if (pure && support_var < n) bound[support_var] = g[support_var];
        if (pure && support_var == n) return FiniteStandardMonomials{};  // unit ideal
    }
    for (size_t v = 0; v < n; ++v)
        if (bound[v] < 0) return InfiniteStandardMonomials{ring.name(v)};

    FiniteStandardMonomials out;
    Exponents current(n);
    // Depth-first walk over the box below the pure powers.
    auto walk = [&](auto&& self, size_t v) -> void {
        if (v == n) {
            if (!I.contains(current)) {
                ++out.count;
                if (enumerate) out.monomials.push_back(current);
            }
            return;
        }
        for (int64_t e = 0; e < bound[v]; ++e) {
            current.set(v, e);
            self(self, v + 1);
        }
        current.set(v, 0);
    };
    walk(walk, 0);
    if (enumerate) std::sort(out.monomials.begin(), out.monomials.end(), revlist_lex_less);
    return out;
}

/// Number of standard monomials in each total degree 0..max_degree; works for
/// ideals with infinitely many standard monomials too.
inline std::vector<uint64_t> standard_monomial_degree_counts(const MonomialIdeal& I,
                                                             int64_t max_degree) {
    const Ring& ring = I.ring();
    size_t n = ring.size();
    std::vector<uint64_t> counts(static_cast<size_t>(max_degree) + 1, 0);
    Exponents current(n);
    auto walk = [&](auto&& self, size_t v, int64_t used) -> void {
        if (v == n) {
            if (!I.contains(current)) ++counts[static_cast<size_t>(used)];
            return;
        }
        for (int64_t e = 0; used + e <= max_degree; ++e) {
            current.set(v, e);
            self(self, v + 1, used + e);
        }
        current.set(v, 0);
    };
    walk(walk, 0, 0);
    return counts;
}

// ---------------------------------------------------------------------------
// Hilbert-series numerator
// ---------------------------------------------------------------------------

/// Integer polynomial in t: the numerator of the Hilbert series of ring/I
/// over (1-t)^(#vars). Coefficients are checked 64-bit integers.
class HilbertNumerator {
public:
    HilbertNumerator() = default;

    static HilbertNumerator one() { return term(0, 1); }

    static HilbertNumerator term(int64_t degree, int64_t coeff) {
        HilbertNumerator p;
        if (coeff != 0) p.coeffs_[degree] = coeff;
        return p;
    }

    const std::map<int64_t, int64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    int64_t coefficient(int64_t degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? 0 : it->second;
    }

    HilbertNumerator operator+(const HilbertNumerator& o) const {
        HilbertNumerator r(*this);
        for (const auto& [d, c] : o.coeffs_) r.add_term(d, c);
        return r;
    }

    HilbertNumerator operator-(const HilbertNumerator& o) const {
        HilbertNumerator r(*this);
        for (const auto& [d, c] : o.coeffs_) {
            int64_t neg = 0;
            if (__builtin_sub_overflow(int64_t(0), c, &neg))
                throw OverflowError("Hilbert coefficient overflow");
            r.add_term(d, neg);
        }
        return r;
    }

    /// Multiply by t^k.
    HilbertNumerator shifted(int64_t k) const {
        HilbertNumerator r;
        for (const auto& [d, c] : coeffs_) r.coeffs_[d + k] = c;
        return r;
    }

    bool operator==(const HilbertNumerator& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const HilbertNumerator& o) const { return !(*this == o); }

    /// Sparse `{degree:coefficient}` pairs, ascending degree.
    std::string to_text() const {
        std::string s = "{";
        bool first = true;
        for (const auto& [d, c] : coeffs_) {
            if (!first) s += ", ";
            first = false;
            s += std::to_string(d) + ":" + std::to_string(c);
        }
        return s + "}";
    }

    /// Coefficients of the power series expansion of this/(1-t)^nvars through
    /// degree max_degree; these are the Hilbert function values of the
    /// quotient ring.
    std::vector<Integer> series_coefficients(size_t nvars, int64_t max_degree) const {
        // binom(nvars-1+k, nvars-1) for k = 0..max_degree
        std::vector<Integer> binom(static_cast<size_t>(max_degree) + 1);
        binom[0] = 1;
        for (int64_t k = 1; k <= max_degree; ++k)
            binom[k] = binom[k - 1] * (int64_t(nvars) - 1 + k) / k;
        std::vector<Integer> out(static_cast<size_t>(max_degree) + 1, Integer(0));
        for (const auto& [d, c] : coeffs_) {
            if (d > max_degree) continue;
            for (int64_t k = d < 0 ? -d : 0; d + k <= max_degree; ++k)
                out[d + k] += Integer(c) * binom[k];
        }
        return out;
    }

    void add_term(int64_t degree, int64_t coeff) {
        auto [it, fresh] = coeffs_.try_emplace(degree, coeff);
        if (!fresh) {
            if (__builtin_add_overflow(it->second, coeff, &it->second))
                throw OverflowError("Hilbert coefficient overflow");
            if (it->second == 0) coeffs_.erase(it);
        } else if (coeff == 0) {
            coeffs_.erase(it);
        }
    }

private:
    std::map<int64_t, int64_t> coeffs_;
};

/// Numerator of the Hilbert series of ring/I by the colon recursion
///   p(m1,...,mk) = p(m1) - sum_{i>=2} t^|mi| p((m1..m_{i-1}) : mi)
/// with p(0)=1, p((m))=1-t^|m|, p((1))=0. Generators are pivoted in ascending
/// lexicographic order on the reversed variable list; the result is
/// independent of the input generator order.
inline HilbertNumerator hilbert_numerator(const MonomialIdeal& I) {
    struct Memo {
        std::map<std::vector<Exponents>, HilbertNumerator> table;
    } memo;

    auto rec = [&](auto&& self, const MonomialIdeal& J) -> HilbertNumerator {
        if (J.is_zero_ideal()) return HilbertNumerator::one();
        if (J.is_unit_ideal()) return HilbertNumerator();
        const std::vector<Exponents>& gens = J.generators();
        auto hit = memo.table.find(gens);
        if (hit != memo.table.end()) return hit->second;

        HilbertNumerator p = HilbertNumerator::one() -
                             HilbertNumerator::term(gens[0].total_degree(), 1);
        for (size_t i = 1; i < gens.size(); ++i) {
            MonomialIdeal prefix(J.ring(),
                                 std::vector<Exponents>(gens.begin(), gens.begin() + i));
            HilbertNumerator q = self(self, prefix.colon(gens[i]));
            p = p - q.shifted(gens[i].total_degree());
        }
        memo.table.emplace(gens, p);
        return p;
    };
    return rec(rec, I);
}

/// Krull dimension of ring/I: the largest variable subset V such that no
/// generator is supported inside V. Throws UnitIdealError on the unit ideal.
inline size_t dimension_monomial(const MonomialIdeal& I) {
    if (I.is_unit_ideal()) throw UnitIdealError("dimension of the unit ideal");
    size_t n = I.ring().size();
    size_t best = 0;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        std::vector<bool> allowed(n, false);
        size_t card = 0;
        for (size_t v = 0; v < n; ++v) {
            if (mask & (uint64_t(1) << v)) {
                allowed[v] = true;
                ++card;
            }
        }
        if (card <= best) continue;
        bool independent = true;
        for (const Exponents& g : I.generators()) {
            if (g.supported_in(allowed)) {
                independent = false;
                break;
            }
        }
        if (independent) best = card;
    }
    return best;
}

} // namespace monocurve
