#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "monocurve/errors.hpp"

namespace monocurve {

/// A polynomial ring over the rationals, identified by its ordered list of
/// variable names. Rings are immutable values; copies share storage.
class Ring {
public:
    Ring() : vars_(std::make_shared<const std::vector<std::string>>()) {}

    explicit Ring(std::vector<std::string> vars)
        : vars_(std::make_shared<const std::vector<std::string>>(std::move(vars))) {
        for (size_t i = 0; i < size(); ++i)
            for (size_t j = i + 1; j < size(); ++j)
                if (name(i) == name(j))
                    throw ContractError("duplicate variable name: " + name(i));
    }

    size_t size() const { return vars_->size(); }
    const std::string& name(size_t i) const { return (*vars_)[i]; }
    const std::vector<std::string>& names() const { return *vars_; }

    bool has(const std::string& var) const {
        return std::find(vars_->begin(), vars_->end(), var) != vars_->end();
    }

    size_t index_of(const std::string& var) const {
        auto it = std::find(vars_->begin(), vars_->end(), var);
        if (it == vars_->end()) throw ContractError("unknown variable: " + var);
        return static_cast<size_t>(it - vars_->begin());
    }

    bool operator==(const Ring& other) const {
        return vars_ == other.vars_ || *vars_ == *other.vars_;
    }
    bool operator!=(const Ring& other) const { return !(*this == other); }

    /// Ring with one variable removed (used by dehomogenization).
    Ring without(const std::string& var) const {
        std::vector<std::string> kept;
        kept.reserve(size());
        for (const auto& v : names())
            if (v != var) kept.push_back(v);
        if (kept.size() == size()) throw ContractError("unknown variable: " + var);
        return Ring(std::move(kept));
    }

    /// Ring with extra variables prepended (used by elimination rings).
    Ring with_prefix(const std::vector<std::string>& extra) const {
        std::vector<std::string> vars(extra);
        vars.insert(vars.end(), names().begin(), names().end());
        return Ring(std::move(vars));
    }

private:
    std::shared_ptr<const std::vector<std::string>> vars_;
};

/// k[x1,...,xr]; the ambient ring of the affine curves.
inline Ring affine_ring(size_t r = 4) {
    std::vector<std::string> vars;
    for (size_t i = 1; i <= r; ++i) vars.push_back("x" + std::to_string(i));
    return Ring(std::move(vars));
}

/// k[x0,x1,...,xr]; the ambient ring of the projective closures.
inline Ring projective_ring(size_t r = 4) {
    std::vector<std::string> vars;
    for (size_t i = 0; i <= r; ++i) vars.push_back("x" + std::to_string(i));
    return Ring(std::move(vars));
}

inline void require_same_ring(const Ring& a, const Ring& b, const char* where) {
    if (a != b) throw RingMismatchError(std::string(where) + ": operands in different rings");
}

} // namespace monocurve
