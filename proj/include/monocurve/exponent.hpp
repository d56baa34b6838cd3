#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "monocurve/errors.hpp"

namespace monocurve {

/// One exponent per variable of the ambient ring. Entries are machine
/// integers with checked arithmetic: desk-scale degrees never overflow, but
/// an overflow must abort rather than wrap.
class Exponents {
public:
    Exponents() = default;
    explicit Exponents(size_t n) : e_(n, 0) {}
    explicit Exponents(std::vector<int64_t> e) : e_(std::move(e)) {
        for (int64_t v : e_)
            if (v < 0) throw ContractError("negative exponent");
    }
    Exponents(std::initializer_list<int64_t> e) : Exponents(std::vector<int64_t>(e)) {}

    size_t size() const { return e_.size(); }
    int64_t operator[](size_t i) const { return e_[i]; }

    Exponents& set(size_t i, int64_t v) {
        if (v < 0) throw ContractError("negative exponent");
        e_[i] = v;
        return *this;
    }

    int64_t total_degree() const {
        int64_t sum = 0;
        for (int64_t v : e_)
            if (__builtin_add_overflow(sum, v, &sum)) throw OverflowError("degree overflow");
        return sum;
    }

    int64_t weighted_degree(const std::vector<int64_t>& weights) const {
        check_len(weights.size());
        int64_t sum = 0;
        for (size_t i = 0; i < e_.size(); ++i) {
            int64_t term = 0;
            if (__builtin_mul_overflow(e_[i], weights[i], &term) ||
                __builtin_add_overflow(sum, term, &sum))
                throw OverflowError("weighted degree overflow");
        }
        return sum;
    }

    Exponents operator+(const Exponents& o) const {
        check_len(o.size());
        Exponents r(size());
        for (size_t i = 0; i < size(); ++i)
            if (__builtin_add_overflow(e_[i], o.e_[i], &r.e_[i]))
                throw OverflowError("exponent overflow");
        return r;
    }

    /// Componentwise difference; caller guarantees divisibility.
    Exponents operator-(const Exponents& o) const {
        check_len(o.size());
        Exponents r(size());
        for (size_t i = 0; i < size(); ++i) {
            r.e_[i] = e_[i] - o.e_[i];
            if (r.e_[i] < 0) throw ContractError("non-divisible exponent subtraction");
        }
        return r;
    }

    bool divides(const Exponents& m) const {
        check_len(m.size());
        for (size_t i = 0; i < size(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    bool is_zero() const {
        for (int64_t v : e_)
            if (v != 0) return false;
        return true;
    }

    bool is_coprime_with(const Exponents& o) const {
        check_len(o.size());
        for (size_t i = 0; i < size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    /// Support contained in the variable subset `allowed`?
    bool supported_in(const std::vector<bool>& allowed) const {
        check_len(allowed.size());
        for (size_t i = 0; i < size(); ++i)
            if (e_[i] > 0 && !allowed[i]) return false;
        return true;
    }

    friend Exponents lcm(const Exponents& a, const Exponents& b) {
        a.check_len(b.size());
        Exponents r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
        return r;
    }

    friend Exponents gcd(const Exponents& a, const Exponents& b) {
        a.check_len(b.size());
        Exponents r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
        return r;
    }

    bool operator==(const Exponents& o) const { return e_ == o.e_; }
    bool operator!=(const Exponents& o) const { return e_ != o.e_; }
    /// Plain lexicographic comparison; used only for canonical bookkeeping.
    bool operator<(const Exponents& o) const { return e_ < o.e_; }

    const std::vector<int64_t>& data() const { return e_; }

private:
    void check_len(size_t n) const {
        if (e_.size() != n) throw DimensionError("exponent length mismatch");
    }

    std::vector<int64_t> e_;
};

struct ExponentsHash {
    size_t operator()(const Exponents& e) const {
        size_t h = 1469598103934665603ull;
        for (int64_t v : e.data()) {
            h ^= std::hash<int64_t>()(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace monocurve
