#pragma once

#include <vector>

#include "monocurve/backelin.hpp"
#include "monocurve/matrix.hpp"

namespace monocurve {

/// The curve C((2h-1)2h, (2h-1)(2h+1), 2h(2h+1), 2h(2h+1)+2h-1): affine
/// Groebner basis, the 4h+3 projective generators, and the four differential
/// matrices of the length-4 free resolution of the projective ideal.
///
/// Two source-text reconciliations are baked into the affine basis and noted
/// on every instance: p7 reads x1 x2^{2h-1} x4 - x3^{2h} (forced by the
/// identity S(p1,p2) = -p7), and p3_j uses exponent 2h-j on both tails. The
/// p6 family, which the reductions use as divisors, is a member of the basis.
struct BresinskyInstance {
    int64_t h = 0;
    MonomialCurveSpec spec;
    Ring ring;       // affine x1..x4
    Ring proj_ring;  // x0..x4

    Polynomial p1, p2, p5, p7, p8;
    std::vector<Polynomial> p3;  // p3[j]   for 0 <= j <= 2h-1
    std::vector<Polynomial> p4;  // p4[i-1] for 1 <= i <= 2h
    std::vector<Polynomial> p6;  // p6[i]   for 0 <= i <= 2h-3

    PolynomialMatrix B1, B2, B3, B4;
    std::vector<std::string> assembly_notes;

    /// Minimal generating set of the affine ideal (4h+3 elements); these are
    /// the dehomogenized projective generators.
    std::vector<Polynomial> affine_generators() const {
        std::vector<Polynomial> out{p1, p2};
        out.insert(out.end(), p3.begin(), p3.end());
        out.insert(out.end(), p4.begin(), p4.end());
        out.push_back(p5);
        return out;
    }

    /// The full affine Groebner basis under degrevlex x1 > x2 > x3 > x4
    /// (6h+3 elements, the p6 family included).
    std::vector<Polynomial> affine_groebner() const {
        std::vector<Polynomial> out = affine_generators();
        out.insert(out.end(), p6.begin(), p6.end());
        out.push_back(p7);
        out.push_back(p8);
        return out;
    }

    /// The basis as printed without the p6 family (completion rediscovers
    /// exactly the missing leading monomials).
    std::vector<Polynomial> affine_groebner_without_p6() const {
        std::vector<Polynomial> out = affine_generators();
        out.push_back(p7);
        out.push_back(p8);
        return out;
    }

    /// The 4h+3 generators of the projective ideal, in the order of the first
    /// differential: p1^H, p2^H, p3_j^H, p4_i^H, p5^H.
    std::vector<Polynomial> projective_generators() const {
        std::vector<Polynomial> out;
        for (const Polynomial& f : affine_generators())
            out.push_back(homogenize(f, proj_ring, "x0"));
        return out;
    }

    MonomialOrder order() const { return standard_affine_order(ring); }
    MonomialOrder proj_order() const { return standard_projective_order(proj_ring); }

    std::vector<PolynomialMatrix> differentials() const { return {B1, B2, B3, B4}; }

    /// The exhibited grade certificates for the Buchsbaum-Eisenbud check,
    /// one minor list per homological level.
    LevelCertificates certificates() const {
        int64_t h_ = h;
        auto range = [](int64_t a, int64_t b) {  // {a..b}, 1-based inclusive
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

        MinorSpec L21;
        L21.rows = join({1}, range(3, 4 * h_ + 3));
        L21.cols = join(join(range(4 * h_ + 1, 8 * h_ - 2), {size_t(8 * h_)}),
                        range(8 * h_ + 2, 8 * h_ + 4));
        MinorSpec L22;
        L22.rows = range(2, 4 * h_ + 3);
        L22.cols = join(join(join({1}, range(3, 4 * h_)), {size_t(8 * h_ + 1), size_t(8 * h_ + 2)}),
                        {size_t(8 * h_ + 4)});
        certs[2] = {L21, L22};

        MinorSpec L31;
        L31.rows = join(join({1}, range(4 * h_ + 1, 8 * h_ - 3)),
                        {size_t(8 * h_ - 1), size_t(8 * h_), size_t(8 * h_ + 3), size_t(8 * h_ + 4)});
        L31.cols = join(range(1, 4 * h_ + 1), {size_t(4 * h_ + 3)});
        MinorSpec L32;
        L32.rows = join(range(1, 4 * h_), {size_t(8 * h_ + 1), size_t(8 * h_ + 2)});
        L32.cols = range(1, 4 * h_ + 2);
        MinorSpec L33;
        L33.rows = join(join(join(range(3, 2 * h_ + 1), {size_t(4 * h_ + 1)}),
                             range(6 * h_, 8 * h_)),
                        {size_t(8 * h_ + 3)});
        L33.cols = range(1, 4 * h_ + 2);
        certs[3] = {L31, L32, L33};

        certs[4] = {MinorSpec{{size_t(4 * h_)}, {1}}, MinorSpec{{size_t(4 * h_ + 1)}, {1}},
                    MinorSpec{{size_t(4 * h_ + 2)}, {1}}, MinorSpec{{size_t(4 * h_ + 3)}, {1}}};
        return certs;
    }
};

inline BresinskyInstance bresinsky_system(int64_t h) {
    if (h < 2) throw ContractError("bresinsky_system needs h >= 2");
    Ring ring = affine_ring(4);
    Ring proj = projective_ring(4);
    std::vector<int64_t> e{(2 * h - 1) * 2 * h, (2 * h - 1) * (2 * h + 1),
                           2 * h * (2 * h + 1), 2 * h * (2 * h + 1) + 2 * h - 1};
    BresinskyInstance inst{h,
                           MonomialCurveSpec(e, CurveMode::Affine, FamilyTag(BresinskyFamily{h})),
                           ring,
                           proj,
                           {}, {}, {}, {}, {},
                           {}, {}, {},
                           PolynomialMatrix(proj, 1, 1), PolynomialMatrix(proj, 1, 1),
                           PolynomialMatrix(proj, 1, 1), PolynomialMatrix(proj, 1, 1),
                           {}};

    auto bin = [&](std::initializer_list<int64_t> plus, std::initializer_list<int64_t> minus) {
        return curve_binomial(ring, Exponents(plus), Exponents(minus));
    };

    inst.p1 = bin({0, 1, 1, 0}, {1, 0, 0, 1});
    inst.p2 = bin({0, 2 * h, 0, 0}, {0, 0, 2 * h - 1, 0});
    for (int64_t j = 0; j <= 2 * h - 1; ++j)
        inst.p3.push_back(bin({j + 1, 0, 2 * h - j, 0}, {0, j, 0, 2 * h - j}));
    for (int64_t i = 1; i <= 2 * h; ++i)
        inst.p4.push_back(bin({i + 1, 2 * h - i, 0, 0}, {0, 0, i - 1, 2 * h - i}));
    inst.p5 = bin({0, 0, 4 * h, 0}, {0, 2 * h - 1, 0, 2 * h + 1});
    for (int64_t i = 0; i <= 2 * h - 3; ++i)
        inst.p6.push_back(bin({2 + i, 2 * h - 2 - i, 0, 2 + i}, {0, 0, 2 * h + 1 + i, 0}));
    inst.p7 = bin({1, 2 * h - 1, 0, 1}, {0, 0, 2 * h, 0});
    inst.p8 = bin({2 * h, 0, 0, 2 * h}, {0, 0, 4 * h - 1, 0});

    // --- differentials ------------------------------------------------------
    auto mono = [&](std::initializer_list<int64_t> ex5) {
        return Polynomial::monomial(proj, Exponents(ex5));  // (x0,x1,x2,x3,x4)
    };
    auto x = [&](int var, int64_t e5 = 1) {
        Exponents m(5);
        m.set(static_cast<size_t>(var), e5);
        return Polynomial::monomial(proj, m);
    };

    std::vector<Polynomial> gens = inst.projective_generators();
    {
        MatrixBuilder b(proj, 1, static_cast<size_t>(4 * h + 3));
        for (size_t c = 0; c < gens.size(); ++c) b.put(1, c + 1, gens[c]);
        inst.B1 = b.take();
    }

    {
        // Rows index the generators (1: p1^H, 2: p2^H, 2+j+1: p3_j^H,
        // 2h+2+i: p4_i^H, 4h+3: p5^H); columns are the first syzygies.
        MatrixBuilder b(proj, static_cast<size_t>(4 * h + 3), static_cast<size_t>(8 * h + 4));
        b.put(2, 1, mono({1, 0, 0, 0, 1}));           // x0 x4
        b.put(2 * h + 2, 1, x(2));
        b.put(4 * h + 1, 1, -x(3));

        b.put(2, 2, x(1, 2));
        b.put(4, 2, x(2));  // source text value; composition repair resolves it
        b.put(2 * h + 3, 2, -x(2));

        for (int64_t l = 0; l <= 2 * h - 2; ++l) {
            b.put(1, 3 + l, mono({1, 0, l, 0, 2 * h - 1 - l}));
            b.put(3 + l, 3 + l, -x(1));
            b.put(4 + l, 3 + l, x(3));
        }
        for (int64_t l = 1; l <= 2 * h - 1; ++l) {
            b.put(1, 2 * h + 1 + l, mono({2, 0, 0, l - 1, 2 * h - 1 - l}));
            b.put(2 * h + 2 + l, 2 * h + 1 + l, -x(1));
            b.put(2 * h + 3 + l, 2 * h + 1 + l, x(2));
        }
        for (int64_t l = 0; l <= 2 * h - 2; ++l) {
            b.put(1, 4 * h + 1 + l, mono({0, l + 1, 0, 2 * h - 1 - l, 0}));
            b.put(3 + l, 4 * h + 1 + l, -x(2));
            b.put(4 + l, 4 * h + 1 + l, x(4));
        }
        for (int64_t l = 1; l <= 2 * h - 1; ++l) {
            b.put(1, 6 * h - 1 + l, mono({0, l + 1, 2 * h - 1 - l, 0, 0}));
            b.put(2 * h + 2 + l, 6 * h - 1 + l, -x(3));
            b.put(2 * h + 3 + l, 6 * h - 1 + l, x(4));
        }
        b.put(1, 8 * h - 1, gens[1]);   // p2^H
        b.put(2, 8 * h - 1, -gens[0]);  // -p1^H

        b.put(1, 8 * h, mono({0, 1, 2 * h - 1, 0, 0}));
        b.put(2, 8 * h, -(x(1) * x(3)));
        b.put(3, 8 * h, -x(0));
        b.put(2 * h + 3, 8 * h, x(4));

        b.put(1, 8 * h + 1, mono({1, 0, 2 * h - 1, 0, 0}));
        b.put(2, 8 * h + 1, -(x(0) * x(3)));
        b.put(2 * h + 2, 8 * h + 1, -x(1));
        b.put(4 * h + 2, 8 * h + 1, x(3));

        b.put(1, 8 * h + 2, mono({0, 0, 2 * h - 1, 0, 2 * h}));
        b.put(2, 8 * h + 2, -(x(3) * x(4)));  // source text value; repaired to -x3 x4^{2h}
        b.put(3, 8 * h + 2, mono({0, 0, 0, 2 * h, 0}));
        b.put(4 * h + 3, 8 * h + 2, -x(1));

        b.put(1, 8 * h + 3, mono({0, 0, 0, 4 * h - 1, 0}));
        b.put(2, 8 * h + 3, -x(4, 2 * h + 1));
        b.put(3, 8 * h + 3, mono({0, 0, 0, 2 * h - 1, 1}));
        b.put(4 * h + 3, 8 * h + 3, -x(2));

        b.put(1, 8 * h + 4, mono({0, 0, 2 * h - 1, 2 * h, 0}));
        b.put(2, 8 * h + 4, -x(3, 2 * h + 1));
        b.put(3, 8 * h + 4, mono({0, 0, 2 * h - 1, 0, 1}));
        b.put(4 * h + 3, 8 * h + 4, -x(0));
        b.note("second-syzygy rule for the last column targets column 8h+4; the printed cell "
               "(4h+3,8h+3) collides with the previous rule and is read as (4h+3,8h+4)");
        inst.B2 = b.take();
        for (const auto& n : b.notes()) inst.assembly_notes.push_back("B2: " + n);
    }

    {
        // Rows index the columns of B2.
        MatrixBuilder b(proj, static_cast<size_t>(8 * h + 4), static_cast<size_t>(4 * h + 3));
        for (int64_t l = 0; l <= 2 * h - 3; ++l) {
            b.put(4 * h + 1 + l, l + 1, x(1));
            b.put(3 + l, l + 1, -x(2));
            b.put(4 * h + 2 + l, l + 1, -x(3));
            b.put(4 + l, l + 1, x(4));
        }
        b.note("first rule block rows read as 4h+1+l and 4h+2+l (printed 4h+l, 4h+l+1 point "
               "one short of the x4-block and fail composition for every l)");

        b.put(6 * h - 1, 2 * h - 1, x(1));
        b.put(2 * h + 1, 2 * h - 1, -x(2));
        b.put(8 * h - 2, 2 * h - 1, -x(3));
        b.put(1, 2 * h - 1, x(3));
        b.put(8 * h + 1, 2 * h - 1, x(4));

        for (int64_t l = 1; l <= 2 * h - 2; ++l) {
            b.put(6 * h - 1 + l, 2 * h - 1 + l, x(1));
            b.put(6 * h + l, 2 * h - 1 + l, -x(2));
            b.put(2 * h + 1 + l, 2 * h - 1 + l, -x(3));
            b.put(2 * h + 2 + l, 2 * h - 1 + l, x(4));
        }

        b.put(3, 4 * h - 2, x(0));
        b.put(8 * h, 4 * h - 2, -x(1));
        b.put(6 * h, 4 * h - 2, x(2));
        b.put(2, 4 * h - 2, -x(3));
        b.put(2 * h + 2, 4 * h - 2, -x(4));

        b.put(4 * h + 1, 4 * h - 1, x(0));
        b.put(8 * h - 1, 4 * h - 1, x(1));
        b.put(8 * h, 4 * h - 1, -x(2));
        b.put(2, 4 * h - 1, -x(4));

        b.put(8 * h - 1, 4 * h, x(0));
        b.put(1, 4 * h, -x(1));
        b.put(8 * h + 1, 4 * h, -x(2));
        b.put(4 * h, 4 * h, x(3));

        b.put(4 * h + 1, 4 * h + 1, x(3, 2 * h));
        b.put(3, 4 * h + 1, -mono({0, 0, 0, 2 * h - 1, 1}));
        b.put(8 * h - 1, 4 * h + 1, -x(4, 2 * h));
        b.put(8 * h + 3, 4 * h + 1, -x(1));
        b.put(8 * h + 2, 4 * h + 1, x(2));

        b.put(8 * h - 1, 4 * h + 2, x(3, 2 * h));
        for (int64_t i = 0; i <= 2 * h - 2; ++i)
            b.put(4 * h + 1 + i, 4 * h + 2, -mono({0, 0, 2 * h - 1 - i, 0, i + 1}));
        b.put(8 * h, 4 * h + 2, mono({0, 0, 0, 2 * h - 1, 1}));
        for (int64_t j = 1; j <= 2 * h - 2; ++j)
            b.put(6 * h - 1 + j, 4 * h + 2, mono({0, 0, 0, 2 * h - 1 - j, j + 1}));
        b.put(1, 4 * h + 2, x(4, 2 * h));
        b.put(8 * h + 3, 4 * h + 2, x(0));
        b.put(8 * h + 4, 4 * h + 2, -x(2));
        b.note("column 4h+2 head entry read at row 8h-1 (printed transposed as (4h+2,8h-1), "
               "which is out of range); block parameters run i=0..2h-2 and j=1..2h-2 per the "
               "zero-fill exception list");

        b.put(8 * h, 4 * h + 3, x(3, 2 * h));
        b.put(3, 4 * h + 3, -mono({0, 0, 2 * h - 1, 0, 1}));
        for (int64_t i = 1; i <= 2 * h - 2; ++i)
            b.put(4 * h + 1 + i, 4 * h + 3, -mono({0, 0, 2 * h - 1 - i, 1, i}));
        for (int64_t i = 1; i <= 2 * h - 2; ++i)
            b.put(6 * h - 1 + i, 4 * h + 3, mono({0, 0, 0, 2 * h - i, i}));
        b.put(1, 4 * h + 3, mono({0, 0, 0, 1, 2 * h - 1}));
        b.put(8 * h + 2, 4 * h + 3, x(0));
        b.put(8 * h + 4, 4 * h + 3, -x(1));
        b.note("column 4h+3 block parameters run i=1..2h-2 on both blocks (unstated in the "
               "source; i=0 in the first block double-counts the row-3 entry)");
        inst.B3 = b.take();
        for (const auto& n : b.notes()) inst.assembly_notes.push_back("B3: " + n);
    }

    {
        MatrixBuilder b(proj, static_cast<size_t>(4 * h + 3), 1);
        for (int64_t m = 1; m <= 2 * h - 1; ++m)
            b.put(m, 1, -mono({0, 0, 2 * h - m, 0, m}));
        for (int64_t nn = 1; nn <= 2 * h - 2; ++nn)
            b.put(2 * h - 1 + nn, 1, mono({0, 0, 0, 2 * h - 1 - nn, nn + 1}));
        b.put(4 * h - 2, 1, -mono({0, 0, 0, 2 * h - 1, 1}));
        b.put(4 * h - 1, 1, x(3, 2 * h));
        b.put(4 * h, 1, -x(4, 2 * h));
        b.put(4 * h + 1, 1, -x(0));
        b.put(4 * h + 2, 1, -x(1));
        b.put(4 * h + 3, 1, x(2));
        inst.B4 = b.take();
    }

    return inst;
}

} // namespace monocurve
