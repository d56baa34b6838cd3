#pragma once

#include <vector>

#include "monocurve/backelin.hpp"
#include "monocurve/matrix.hpp"

namespace monocurve {

/// The curve C(h(h+1), h(h+1)+1, (h+1)^2, (h+1)^2+1): the 2h+3 element
/// projective Groebner basis {w, g_0..g_h, q_0..q_h} and the two higher
/// differentials of the length-3 resolution of the projective ideal.
struct ArslanInstance {
    int64_t h = 0;
    MonomialCurveSpec spec;       // affine
    Ring ring;                    // affine x1..x4
    Ring proj_ring;               // x0..x4

    Polynomial w;                 // in the projective ring
    std::vector<Polynomial> g;    // g[i] for 0 <= i <= h
    std::vector<Polynomial> q;    // q[j] for 0 <= j <= h

    PolynomialMatrix A1, A2, A3;
    std::vector<std::string> assembly_notes;

    /// The projective basis in first-differential order: w, g_0..g_h,
    /// q_0..q_h.
    std::vector<Polynomial> projective_basis() const {
        std::vector<Polynomial> out{w};
        out.insert(out.end(), g.begin(), g.end());
        out.insert(out.end(), q.begin(), q.end());
        return out;
    }

    /// Dehomogenized basis, generating (and a Groebner basis of) the affine
    /// ideal.
    std::vector<Polynomial> affine_basis() const {
        std::vector<Polynomial> out;
        for (const Polynomial& f : projective_basis()) out.push_back(dehomogenize(f, "x0"));
        return out;
    }

    MonomialOrder proj_order() const { return standard_projective_order(proj_ring); }
    MonomialOrder order() const { return standard_affine_order(ring); }

    std::vector<PolynomialMatrix> differentials() const { return {A1, A2, A3}; }

    /// Grade certificates for the Buchsbaum-Eisenbud check.
    LevelCertificates certificates() const {
        int64_t h_ = h;
        auto range = [](int64_t a, int64_t b) {
            std::vector<size_t> v;
            for (int64_t k = a; k <= b; ++k) v.push_back(static_cast<size_t>(k));
            return v;
        };
        auto join = [](std::vector<size_t> a, const std::vector<size_t>& b) {
            a.insert(a.end(), b.begin(), b.end());
            return a;
        };

        LevelCertificates certs;
        certs[1] = {MinorSpec{{1}, {1}}};

        MinorSpec D21;
        D21.rows = join({1}, range(3, 2 * h_ + 3));
        D21.cols = range(1, 2 * h_ + 2);
        MinorSpec D22;
        D22.rows = range(2, 2 * h_ + 3);
        D22.cols = join({1, 2}, range(2 * h_ + 2, 4 * h_ + 1));
        certs[2] = {D21, D22};

        MinorSpec D31;
        D31.rows = join(range(2, h_), range(2 * h_ + 2, 3 * h_ + 1));
        D31.cols = range(1, 2 * h_ - 1);
        MinorSpec D32;
        D32.rows = range(2, 2 * h_);
        D32.cols = range(1, 2 * h_ - 1);
        MinorSpec D33;
        D33.rows = join(range(h_ + 2, 2 * h_ + 1), range(3 * h_ + 2, 4 * h_));
        D33.cols = range(1, 2 * h_ - 1);
        certs[3] = {D31, D32, D33};
        return certs;
    }
};

inline ArslanInstance arslan_system(int64_t h) {
    if (h < 2) throw ContractError("arslan_system needs h >= 2");
    Ring ring = affine_ring(4);
    Ring proj = projective_ring(4);
    std::vector<int64_t> e{h * (h + 1), h * (h + 1) + 1, (h + 1) * (h + 1),
                           (h + 1) * (h + 1) + 1};
    ArslanInstance inst{h,
                        MonomialCurveSpec(e, CurveMode::Affine, FamilyTag(ArslanFamily{h})),
                        ring,
                        proj,
                        {},
                        {},
                        {},
                        PolynomialMatrix(proj, 1, 1), PolynomialMatrix(proj, 1, 1),
                        PolynomialMatrix(proj, 1, 1),
                        {}};

    auto bin = [&](std::initializer_list<int64_t> plus, std::initializer_list<int64_t> minus) {
        // exponents over (x0,x1,x2,x3,x4)
        return curve_binomial(proj, Exponents(plus), Exponents(minus));
    };

    inst.w = bin({0, 0, 1, 1, 0}, {0, 1, 0, 0, 1});
    for (int64_t i = 0; i <= h - 1; ++i)
        inst.g.push_back(bin({0, i, 0, h - i + 1, 0}, {0, 0, i + 1, 0, h - i}));
    inst.g.push_back(bin({0, 0, h + 1, 0, 0}, {0, h, 0, 1, 0}));
    for (int64_t j = 0; j <= h; ++j)
        inst.q.push_back(bin({0, j + 1, h - j, 0, 0}, {1, 0, 0, j, h - j}));

    auto mono = [&](std::initializer_list<int64_t> ex5) {
        return Polynomial::monomial(proj, Exponents(ex5));
    };
    auto x = [&](int var, int64_t e5 = 1) {
        Exponents m(5);
        m.set(static_cast<size_t>(var), e5);
        return Polynomial::monomial(proj, m);
    };

    std::vector<Polynomial> basis = inst.projective_basis();
    {
        MatrixBuilder b(proj, 1, static_cast<size_t>(2 * h + 3));
        for (size_t c = 0; c < basis.size(); ++c) b.put(1, c + 1, basis[c]);
        inst.A1 = b.take();
    }

    {
        // Rows: 1 -> w, 2..h+2 -> g_0..g_h, h+3..2h+3 -> q_0..q_h.
        MatrixBuilder b(proj, static_cast<size_t>(2 * h + 3), static_cast<size_t>(4 * h + 1));
        b.put(h + 2, 1, x(1));
        b.put(h + 3, 1, -x(2));
        b.put(2 * h + 3, 1, x(3));
        b.put(2, 1, x(0));

        for (int64_t i = 0; i <= h - 1; ++i) {
            b.put(1, 2 + i, mono({1, 0, 0, i, h - i - 1}));
            b.put(h + 3 + i, 2 + i, -x(1));
            b.put(h + 4 + i, 2 + i, x(2));
        }
        for (int64_t i = 0; i <= h - 2; ++i) {
            b.put(1, h + 2 + i, mono({0, 0, i + 1, 0, h - i - 1}));
            b.put(2 + i, h + 2 + i, -x(1));
            b.put(3 + i, h + 2 + i, x(3));
        }
        b.put(1, 2 * h + 1, x(2, h));
        b.put(h + 1, 2 * h + 1, -x(1));
        b.put(h + 2, 2 * h + 1, -x(3));

        for (int64_t i = 0; i <= h - 2; ++i) {
            b.put(1, 2 * h + 2 + i, mono({0, i, 0, h - i, 0}));
            b.put(2 + i, 2 * h + 2 + i, -x(2));
            b.put(3 + i, 2 * h + 2 + i, x(4));
        }
        b.put(1, 3 * h + 1, mono({0, h - 1, 0, 1, 0}));
        b.put(h + 1, 3 * h + 1, -x(2));
        b.put(h + 2, 3 * h + 1, -x(4));

        for (int64_t i = 0; i <= h - 1; ++i) {
            b.put(1, 3 * h + 2 + i, mono({0, i + 1, h - i - 1, 0, 0}));
            b.put(h + 3 + i, 3 * h + 2 + i, -x(3));
            b.put(h + 4 + i, 3 * h + 2 + i, x(4));
        }
        inst.A2 = b.take();
    }

    {
        // Rows index the columns of A2.
        MatrixBuilder b(proj, static_cast<size_t>(4 * h + 1), static_cast<size_t>(2 * h - 1));
        for (int64_t i = 0; i <= h - 2; ++i) {
            b.put(2 * h + 2 + i, 1 + i, x(1));
            b.put(h + 2 + i, 1 + i, -x(2));
            b.put(2 * h + 3 + i, 1 + i, -x(3));
            b.put(h + 3 + i, 1 + i, x(4));
        }
        for (int64_t i = 0; i <= h - 2; ++i) {
            b.put(3 * h + 2 + i, h + i, x(1));
            b.put(3 * h + 3 + i, h + i, -x(2));
            b.put(2 + i, h + i, -x(3));
            b.put(3 + i, h + i, x(4));
        }
        b.put(3 * h + 1, 2 * h - 1, x(1, 2));
        b.put(2 * h + 1, 2 * h - 1, -(x(1) * x(2)));
        b.put(3 * h + 2, 2 * h - 1, x(2, 2));
        b.put(4 * h + 1, 2 * h - 1, -(x(1) * x(3)));
        b.put(1, 2 * h - 1, x(1) * x(4) - x(2) * x(3));
        b.put(h + 1, 2 * h - 1, x(3, 2));
        b.put(2, 2 * h - 1, -(x(2) * x(4)));
        b.put(2 * h + 2, 2 * h - 1, -(x(0) * x(3)));
        b.put(h + 2, 2 * h - 1, x(0) * x(4));
        b.note("the printed last column assigns cell (1,2h-1) twice, -x2 x3 and +x1 x4; the "
               "entries are merged as the binomial x1 x4 - x2 x3, which completes the syzygy");
        inst.A3 = b.take();
        for (const auto& n : b.notes()) inst.assembly_notes.push_back("A3: " + n);
    }

    return inst;
}

} // namespace monocurve
