#pragma once

// Umbrella header for the three curve families.

#include "monocurve/arslan.hpp"
#include "monocurve/backelin.hpp"
#include "monocurve/bresinsky.hpp"

namespace monocurve {

/// Affine Groebner basis of a family curve from its closed-form constructor,
/// or by elimination for specs without family metadata (scale permitting).
inline GroebnerBasis family_affine_groebner(const MonomialCurveSpec& spec) {
    if (spec.family()) {
        if (const auto* b = std::get_if<BackelinFamily>(&*spec.family())) {
            BackelinInstance inst = backelin_system(b->n, b->r);
            return buchberger_complete(inst.groebner_generators(), inst.order());
        }
        if (const auto* b = std::get_if<BresinskyFamily>(&*spec.family())) {
            BresinskyInstance inst = bresinsky_system(b->h);
            return buchberger_complete(inst.affine_groebner(), inst.order());
        }
        if (const auto* a = std::get_if<ArslanFamily>(&*spec.family())) {
            ArslanInstance inst = arslan_system(a->h);
            return buchberger_complete(inst.affine_basis(), inst.order());
        }
    }
    return toric_ideal(spec.with_mode(CurveMode::Affine));
}

/// ACM test for the projective closure: true iff no minimal generator of the
/// affine initial ideal is divisible by the last variable.
inline std::pair<bool, std::optional<Exponents>> acm_test(const MonomialCurveSpec& spec) {
    return acm_from_basis(family_affine_groebner(spec));
}

} // namespace monocurve
