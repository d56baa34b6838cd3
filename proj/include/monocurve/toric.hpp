#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "monocurve/groebner.hpp"
#include "monocurve/homog.hpp"
#include "monocurve/polynomial.hpp"

namespace monocurve {

struct BackelinFamily {
    int64_t n, r;
};
struct BresinskyFamily {
    int64_t h;
};
struct ArslanFamily {
    int64_t h;
};
using FamilyTag = std::variant<BackelinFamily, BresinskyFamily, ArslanFamily>;

enum class CurveMode { Affine, Projective };

/// Exponent sequence (n1,...,nr) of a monomial curve with optional family
/// metadata and affine/projective mode.
class MonomialCurveSpec {
public:
    MonomialCurveSpec(std::vector<int64_t> exponents, CurveMode mode,
                      std::optional<FamilyTag> family = std::nullopt)
        : exponents_(std::move(exponents)), mode_(mode), family_(std::move(family)) {
        if (exponents_.size() < 2) throw ContractError("need at least two exponents");
        int64_t g = 0;
        for (size_t i = 0; i < exponents_.size(); ++i) {
            if (exponents_[i] <= 0) throw ContractError("exponents must be positive");
            for (size_t j = i + 1; j < exponents_.size(); ++j)
                if (exponents_[i] == exponents_[j])
                    throw ContractError("exponents must be distinct");
            g = std::gcd(g, exponents_[i]);
        }
        if (g != 1) throw ContractError("exponents must have gcd 1");
        if (mode_ == CurveMode::Projective) {
            for (size_t i = 0; i + 1 < exponents_.size(); ++i)
                if (exponents_[i] >= exponents_.back())
                    throw ContractError("projective mode needs n_r maximal");
        }
        if (family_) validate_family();
    }

    const std::vector<int64_t>& exponents() const { return exponents_; }
    CurveMode mode() const { return mode_; }
    const std::optional<FamilyTag>& family() const { return family_; }
    size_t embedding_dim() const { return exponents_.size(); }

    Ring ambient_ring() const {
        return mode_ == CurveMode::Affine ? affine_ring(exponents_.size())
                                          : projective_ring(exponents_.size());
    }

    MonomialOrder standard_order() const {
        Ring ring = ambient_ring();
        return mode_ == CurveMode::Affine ? standard_affine_order(ring)
                                          : standard_projective_order(ring);
    }

    MonomialCurveSpec with_mode(CurveMode m) const {
        return MonomialCurveSpec(exponents_, m, family_);
    }

private:
    void validate_family() const {
        struct Check {
            const std::vector<int64_t>& e;
            void operator()(const BackelinFamily& f) const {
                if (f.n < 2 || f.r < 3 * f.n + 2)
                    throw ContractError("Backelin family needs n >= 2, r >= 3n+2");
                int64_t s = f.r * (3 * f.n + 2) + 3;
                expect({s, s + 3, s + 3 * f.n + 1, s + 3 * f.n + 2});
            }
            void operator()(const BresinskyFamily& f) const {
                if (f.h < 2) throw ContractError("Bresinsky family needs h >= 2");
                int64_t h = f.h;
                expect({(2 * h - 1) * 2 * h, (2 * h - 1) * (2 * h + 1),
                        2 * h * (2 * h + 1), 2 * h * (2 * h + 1) + 2 * h - 1});
            }
            void operator()(const ArslanFamily& f) const {
                if (f.h < 2) throw ContractError("Arslan family needs h >= 2");
                int64_t h = f.h;
                expect({h * (h + 1), h * (h + 1) + 1, (h + 1) * (h + 1),
                        (h + 1) * (h + 1) + 1});
            }
            void expect(const std::vector<int64_t>& want) const {
                if (e != want)
                    throw ContractError("family metadata inconsistent with exponents");
            }
        };
        std::visit(Check{exponents_}, *family_);
    }

    std::vector<int64_t> exponents_;
    CurveMode mode_;
    std::optional<FamilyTag> family_;
};

/// Parameter ring of the curve: k[t] in affine mode, k[t,s] in projective
/// mode.
inline Ring parameter_ring(const MonomialCurveSpec& spec) {
    return spec.mode() == CurveMode::Affine ? Ring({"t"}) : Ring({"t", "s"});
}

/// Substitute the curve parametrization into f: affine x_i -> t^{n_i};
/// projective x_i -> t^{n_i} s^{n_r-n_i} and x0 -> s^{n_r}. The image is zero
/// exactly when f lies in the defining ideal.
inline Polynomial eval_parametrization(const Polynomial& f, const MonomialCurveSpec& spec) {
    Ring ambient = spec.ambient_ring();
    require_same_ring(f.ring(), ambient, "eval_parametrization");
    Ring params = parameter_ring(spec);
    const auto& n = spec.exponents();
    std::vector<Exponents> images;
    images.reserve(ambient.size());
    if (spec.mode() == CurveMode::Affine) {
        for (int64_t ni : n) images.push_back(Exponents({ni}));
    } else {
        int64_t nr = n.back();
        images.push_back(Exponents({0, nr}));  // x0 -> s^{n_r}
        for (int64_t ni : n) images.push_back(Exponents({ni, nr - ni}));
    }
    return f.substitute_monomials(params, images);
}

/// Fast arithmetic test for binomials x^u - x^v: membership in the toric
/// ideal is equivalent to equal weighted degrees on both sides.
inline bool binomial_vanishes_by_degree(const Polynomial& f, const MonomialCurveSpec& spec) {
    if (f.term_count() != 2) throw ContractError("binomial expected");
    const Term& a = f.terms()[0];
    const Term& b = f.terms()[1];
    if (a.coeff != -b.coeff) return false;
    Ring ambient = spec.ambient_ring();
    require_same_ring(f.ring(), ambient, "binomial_vanishes_by_degree");
    const auto& n = spec.exponents();
    std::vector<int64_t> tw, sw;
    if (spec.mode() == CurveMode::Affine) {
        tw = n;
    } else {
        int64_t nr = n.back();
        tw.push_back(0);
        sw.push_back(nr);
        for (int64_t ni : n) {
            tw.push_back(ni);
            sw.push_back(nr - ni);
        }
    }
    if (a.mon.weighted_degree(tw) != b.mon.weighted_degree(tw)) return false;
    if (spec.mode() == CurveMode::Projective &&
        a.mon.weighted_degree(sw) != b.mon.weighted_degree(sw))
        return false;
    return true;
}

inline constexpr int64_t kToricEliminationMaxExponent = 300;

/// Reduced Groebner basis of the defining ideal under the spec's standard
/// order, computed by eliminating the parameters from the graph ideal
/// (affine {x_i - t^{n_i}}; projective {x_i - t^{n_i} s^{n_r-n_i}, x0 -
/// s^{n_r}}). Refuses exponents beyond the elimination scale guard.
inline GroebnerBasis toric_ideal(const MonomialCurveSpec& spec) {
    for (int64_t ni : spec.exponents())
        if (ni > kToricEliminationMaxExponent)
            throw ScaleGuardError(
                "toric_ideal: exponent beyond elimination scale guard (" +
                std::to_string(kToricEliminationMaxExponent) +
                "); use gastinger_verify against a candidate basis instead");

    Ring ambient = spec.ambient_ring();
    Ring params = parameter_ring(spec);
    Ring graph = ambient.with_prefix(params.names());
    const auto& n = spec.exponents();

    std::vector<Polynomial> gens;
    auto var = [&](const std::string& name) { return Polynomial::variable(graph, name); };
    auto power = [&](const std::string& name, int64_t e) {
        return Polynomial::variable(graph, name, e);
    };
    if (spec.mode() == CurveMode::Affine) {
        for (size_t i = 0; i < n.size(); ++i)
            gens.push_back(var(ambient.name(i)) - power("t", n[i]));
    } else {
        int64_t nr = n.back();
        gens.push_back(var("x0") - power("s", nr));
        for (size_t i = 0; i < n.size(); ++i) {
            Polynomial image = power("t", n[i]) * power("s", nr - n[i]);
            gens.push_back(var("x" + std::to_string(i + 1)) - image);
        }
    }

    // Keep the standard order on the ambient block so the eliminated basis is
    // already a basis for it.
    std::vector<std::string> kept_desc;
    for (size_t i = 1; i <= n.size(); ++i) kept_desc.push_back("x" + std::to_string(i));
    if (spec.mode() == CurveMode::Projective) kept_desc.push_back("x0");

    std::vector<Polynomial> kernel = eliminate(gens, params.names(), kept_desc);
    return buchberger_complete(kernel, spec.standard_order());
}

/// Gastinger's generating-set certificate for a candidate subideal J of the
/// defining ideal: J equals the ideal iff dim_k A/(J + (x_i)) = n_i.
struct GastingerCertificate {
    std::vector<Polynomial> candidate;
    size_t variable_index = 0;            // 1-based
    std::optional<uint64_t> count;        // standard monomial count, if finite
    int64_t target = 0;                   // n_i
    bool all_vanish = false;
    std::optional<std::string> infinite_witness;
    bool verdict = false;
};

inline GastingerCertificate gastinger_verify(const std::vector<Polynomial>& J,
                                             const MonomialCurveSpec& spec,
                                             size_t variable_index) {
    if (spec.mode() != CurveMode::Affine)
        throw ContractError("gastinger_verify expects an affine spec");
    if (variable_index < 1 || variable_index > spec.exponents().size())
        throw ContractError("variable index out of range");
    if (J.empty()) throw ContractError("gastinger_verify needs a nonzero candidate");

    GastingerCertificate cert;
    cert.candidate = J;
    cert.variable_index = variable_index;
    cert.target = spec.exponents()[variable_index - 1];

    cert.all_vanish = true;
    for (const Polynomial& f : J) {
        if (f.is_zero() || !eval_parametrization(f, spec).is_zero()) cert.all_vanish = false;
    }

    Ring ambient = spec.ambient_ring();
    std::vector<Polynomial> augmented = J;
    augmented.push_back(Polynomial::variable(ambient, ambient.name(variable_index - 1)));
    GroebnerBasis gb = buchberger_complete(augmented, spec.standard_order());
    StandardMonomials sm = standard_monomials(initial_ideal(gb));
    if (std::holds_alternative<InfiniteStandardMonomials>(sm)) {
        cert.infinite_witness = std::get<InfiniteStandardMonomials>(sm).witness_variable;
        cert.verdict = false;
        return cert;
    }
    cert.count = std::get<FiniteStandardMonomials>(sm).count;
    cert.verdict = cert.all_vanish && static_cast<int64_t>(*cert.count) == cert.target;
    return cert;
}

/// Cohen-Macaulayness of the projective closure, read off the affine initial
/// ideal: ACM exactly when the last variable divides no minimal generator.
/// Returns the offending monomial as witness otherwise.
inline std::pair<bool, std::optional<Exponents>> acm_from_basis(const GroebnerBasis& affine_gb) {
    if (!affine_gb.verified())
        throw ContractError("acm test requires a verified Groebner basis");
    const Ring& ring = affine_gb.order.ring();
    size_t last = ring.size() - 1;
    MonomialIdeal in = initial_ideal(affine_gb);
    for (const Exponents& g : in.generators())
        if (g[last] > 0) return {false, g};
    return {true, std::nullopt};
}

/// Elementwise homogenization of a reduced affine basis; by the extension
/// lemma for degrevlex with the new variable least, the result is the reduced
/// basis of the homogenized ideal and the initial ideal extends verbatim.
inline GroebnerBasis projective_closure_basis(const GroebnerBasis& affine_gb) {
    if (affine_gb.status != BasisStatus::Reduced)
        throw ContractError("projective_closure_basis requires a reduced basis");
    const Ring& ring = affine_gb.order.ring();
    if (ring.has("x0")) throw ContractError("affine ring already contains x0");
    Ring target = ring.with_prefix({"x0"});
    MonomialOrder order = standard_projective_order(target);

    std::vector<Polynomial> hom;
    hom.reserve(affine_gb.size());
    for (const Polynomial& f : affine_gb.elements) hom.push_back(homogenize(f, target, "x0"));

    // in(I^H) = in(I) extended: leading monomials must match elementwise.
    for (size_t i = 0; i < hom.size(); ++i) {
        Exponents lifted = affine_gb.elements[i].leading_monomial(affine_gb.order);
        Exponents expect(target.size());
        for (size_t v = 0; v < ring.size(); ++v)
            expect.set(target.index_of(ring.name(v)), lifted[v]);
        if (hom[i].leading_monomial(order) != expect)
            throw ContractError("homogenization changed a leading monomial");
    }
    return GroebnerBasis{std::move(hom), order, BasisStatus::Reduced};
}

} // namespace monocurve
