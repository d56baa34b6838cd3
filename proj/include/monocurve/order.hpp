#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "monocurve/exponent.hpp"
#include "monocurve/ring.hpp"

namespace monocurve {

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

/// A total, multiplicative, well-founded order on monomials: either degrevlex
/// over a permuted variable list, or a two-block elimination order whose first
/// block dominates (any monomial touching a first-block variable exceeds every
/// monomial free of them).
class MonomialOrder {
public:
    /// Degrevlex induced by priority[0] > priority[1] > ... (variable indices).
    static MonomialOrder degrevlex(const Ring& ring, std::vector<size_t> priority) {
        MonomialOrder o;
        o.ring_ = ring;
        o.kind_ = Kind::Degrevlex;
        o.priority_ = std::move(priority);
        o.validate_permutation(o.priority_);
        return o;
    }

    /// Degrevlex in the ring's own variable sequence.
    static MonomialOrder degrevlex(const Ring& ring) {
        std::vector<size_t> p(ring.size());
        std::iota(p.begin(), p.end(), 0);
        return degrevlex(ring, std::move(p));
    }

    /// Degrevlex induced by the named variable chain, highest first.
    static MonomialOrder degrevlex_named(const Ring& ring, const std::vector<std::string>& desc) {
        std::vector<size_t> p;
        p.reserve(desc.size());
        for (const auto& v : desc) p.push_back(ring.index_of(v));
        return degrevlex(ring, std::move(p));
    }

    /// Elimination order: first block `drop` (degrevlex within), then the
    /// remaining variables under degrevlex with priority `kept_desc` (or ring
    /// sequence when empty).
    static MonomialOrder block_elimination(const Ring& ring,
                                           const std::vector<std::string>& drop,
                                           const std::vector<std::string>& kept_desc = {}) {
        MonomialOrder o;
        o.ring_ = ring;
        o.kind_ = Kind::Block;
        for (const auto& v : drop) o.first_block_.push_back(ring.index_of(v));
        if (kept_desc.empty()) {
            for (size_t i = 0; i < ring.size(); ++i) {
                if (std::find(o.first_block_.begin(), o.first_block_.end(), i) ==
                    o.first_block_.end())
                    o.second_block_.push_back(i);
            }
        } else {
            for (const auto& v : kept_desc) o.second_block_.push_back(ring.index_of(v));
        }
        std::vector<size_t> all(o.first_block_);
        all.insert(all.end(), o.second_block_.begin(), o.second_block_.end());
        o.validate_permutation(all);
        return o;
    }

    const Ring& ring() const { return ring_; }

    bool is_block() const { return kind_ == Kind::Block; }
    const std::vector<size_t>& first_block() const { return first_block_; }

    Ordering compare(const Exponents& a, const Exponents& b) const {
        if (a.size() != ring_.size() || b.size() != ring_.size())
            throw DimensionError("monomial length does not match the order's ring");
        if (kind_ == Kind::Degrevlex) return degrevlex_cmp(a, b, priority_);
        Ordering first = degrevlex_cmp(a, b, first_block_);
        if (first != Ordering::EQ) return first;
        return degrevlex_cmp(a, b, second_block_);
    }

    bool greater(const Exponents& a, const Exponents& b) const {
        return compare(a, b) == Ordering::GT;
    }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && ring_ == o.ring_ && priority_ == o.priority_ &&
               first_block_ == o.first_block_ && second_block_ == o.second_block_;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    /// Stable text form, used for cache keys and reports.
    std::string describe() const {
        std::string s = kind_ == Kind::Degrevlex ? "degrevlex(" : "block(";
        auto names = [&](const std::vector<size_t>& idx) {
            std::string t;
            for (size_t k = 0; k < idx.size(); ++k) {
                if (k) t += ">";
                t += ring_.name(idx[k]);
            }
            return t;
        };
        if (kind_ == Kind::Degrevlex) {
            s += names(priority_);
        } else {
            s += "[" + names(first_block_) + "],[" + names(second_block_) + "]";
        }
        return s + ")";
    }

private:
    enum class Kind { Degrevlex, Block };

    void validate_permutation(const std::vector<size_t>& p) const {
        if (p.size() != ring_.size()) throw ContractError("order does not cover the ring");
        std::vector<bool> seen(ring_.size(), false);
        for (size_t i : p) {
            if (i >= ring_.size() || seen[i]) throw ContractError("order is not a permutation");
            seen[i] = true;
        }
    }

    /// Degrevlex restricted to the listed variables, highest priority first:
    /// higher total degree wins; on ties the last nonzero entry of a-b,
    /// scanning the listed variables from least to greatest, decides (negative
    /// entry means a wins).
    static Ordering degrevlex_cmp(const Exponents& a, const Exponents& b,
                                  const std::vector<size_t>& priority) {
        int64_t da = 0, db = 0;
        for (size_t v : priority) {
            da += a[v];
            db += b[v];
        }
        if (da != db) return da > db ? Ordering::GT : Ordering::LT;
        for (auto it = priority.rbegin(); it != priority.rend(); ++it) {
            int64_t d = a[*it] - b[*it];
            if (d != 0) return d < 0 ? Ordering::GT : Ordering::LT;
        }
        return Ordering::EQ;
    }

    Ring ring_;
    Kind kind_ = Kind::Degrevlex;
    std::vector<size_t> priority_;      // degrevlex only
    std::vector<size_t> first_block_;   // block only
    std::vector<size_t> second_block_;  // block only
};

inline Ordering compare_monomials(const MonomialOrder& order, const Exponents& a,
                                  const Exponents& b) {
    return order.compare(a, b);
}

/// degrevlex x1 > x2 > ... > xr on an affine ring.
inline MonomialOrder standard_affine_order(const Ring& ring) {
    return MonomialOrder::degrevlex(ring);
}

/// degrevlex x1 > x2 > ... > xr > x0 on a projective ring (x0 least).
inline MonomialOrder standard_projective_order(const Ring& ring) {
    std::vector<std::string> desc;
    for (const auto& v : ring.names())
        if (v != "x0") desc.push_back(v);
    desc.push_back("x0");
    return MonomialOrder::degrevlex_named(ring, desc);
}

} // namespace monocurve
