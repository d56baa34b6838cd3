#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monocurve/matrix.hpp"
#include "monocurve/module.hpp"
#include "monocurve/poly_io.hpp"

namespace monocurve {

/// A finite complex of free modules                                        //
///   0 -> F_L -> ... -> F_1 -> F_0,   d[i] : F_{i+1} -> F_i  (0-based list)
/// with the Buchsbaum-Eisenbud expected ranks derived from the shapes.
struct FreeComplex {
    Ring ring;
    std::vector<PolynomialMatrix> d;  // d[0] = first differential (rows = rank F_0)

    FreeComplex(Ring ring_, std::vector<PolynomialMatrix> diffs)
        : ring(std::move(ring_)), d(std::move(diffs)) {
        if (d.empty()) throw ContractError("complex needs at least one differential");
        for (size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i + 1].rows() != d[i].cols())
                throw DimensionError("complex differentials have incompatible shapes");
    }

    size_t length() const { return d.size(); }

    /// r_i = sum_{j >= i} (-1)^{j-i} rank F_j, the rank each differential
    /// must attain in an exact complex.
    std::vector<size_t> expected_ranks() const {
        std::vector<int64_t> r(d.size());
        r[d.size() - 1] = static_cast<int64_t>(d.back().cols());
        for (size_t i = d.size() - 1; i-- > 0;)
            r[i] = static_cast<int64_t>(d[i].cols()) - r[i + 1];
        std::vector<size_t> out;
        for (int64_t v : r) {
            if (v < 0) throw ContractError("negative expected rank; shapes cannot be exact");
            out.push_back(static_cast<size_t>(v));
        }
        return out;
    }
};

/// True iff every consecutive product vanishes; the failing cells (level,
/// row, col), 1-based level, are reported otherwise.
inline std::pair<bool, std::vector<std::tuple<size_t, size_t, size_t>>> compose_check(
    const FreeComplex& C) {
    std::vector<std::tuple<size_t, size_t, size_t>> bad;
    for (size_t i = 0; i + 1 < C.d.size(); ++i) {
        PolynomialMatrix prod = C.d[i].product(C.d[i + 1]);
        for (const auto& [rc, v] : prod.entries())
            bad.emplace_back(i + 1, rc.first, rc.second);
    }
    return {bad.empty(), std::move(bad)};
}

/// One repaired column: the cells whose stated entry had to change to make
/// the column a genuine syzygy of the previous differential.
struct RepairRecord {
    size_t level = 0;   // 1-based differential index that was repaired
    size_t column = 0;  // 0-based column
    struct Cell {
        size_t row;
        std::string stated;
        std::string repaired;
    };
    std::vector<Cell> cells;
};

/// Replace every failing column v of d_{i+1} by v - u where d_i u = d_i v,
/// so the complex composes to zero. The first differential is never altered.
/// Lifting is exact (tracked module Groebner bases), so each repaired column
/// is a true syzygy; all changes are reported.
inline std::vector<RepairRecord> repair_complex(FreeComplex& C) {
    std::vector<RepairRecord> repairs;
    for (size_t i = 0; i + 1 < C.d.size(); ++i) {
        const PolynomialMatrix& D = C.d[i];
        PolynomialMatrix& N = C.d[i + 1];
        for (size_t j = 0; j < N.cols(); ++j) {
            std::vector<Polynomial> col = N.column(j);
            std::vector<Polynomial> w(D.rows(), Polynomial::zero(C.ring));
            bool nonzero = false;
            for (size_t r = 0; r < D.rows(); ++r) {
                Polynomial acc = Polynomial::zero(C.ring);
                for (size_t k = 0; k < D.cols(); ++k) {
                    if (!D.has_entry(r, k) || col[k].is_zero()) continue;
                    acc = acc + D.at(r, k) * col[k];
                }
                w[r] = acc;
                if (!acc.is_zero()) nonzero = true;
            }
            if (!nonzero) continue;
            // Prefer a lift supported on the rows the stated column already
            // uses; that keeps the repair inside the column's footprint.
            std::vector<size_t> support;
            for (size_t k = 0; k < col.size(); ++k)
                if (!col[k].is_zero()) support.push_back(k);
            std::vector<Polynomial> u;
            bool solved = false;
            if (support.size() < D.cols()) {
                std::vector<size_t> all_rows(D.rows());
                std::iota(all_rows.begin(), all_rows.end(), size_t(0));
                PolynomialMatrix restricted = D.submatrix(all_rows, support);
                std::vector<Polynomial> u_restricted;
                if (solve_column_combination(restricted, w, u_restricted, /*direct_only=*/true)) {
                    u.assign(D.cols(), Polynomial::zero(C.ring));
                    for (size_t k = 0; k < support.size(); ++k) u[support[k]] = u_restricted[k];
                    solved = true;
                }
            }
            if (!solved && !solve_column_combination(D, w, u))
                throw ContractError("repair failed: residual not in the image");
            RepairRecord rec;
            rec.level = i + 2;
            rec.column = j;
            for (size_t r = 0; r < N.rows(); ++r) {
                Polynomial fixed = col[r] - u[r];
                if (fixed != col[r]) {
                    rec.cells.push_back({r, polynomial_to_text(col[r]), polynomial_to_text(fixed)});
                    N.set(r, j, fixed);
                }
            }
            repairs.push_back(std::move(rec));
        }
    }
    return repairs;
}

/// Grade evidence for one homological level: the minors used, and the
/// codimension their ideal achieves.
struct LevelGradeReport {
    std::vector<MinorSpec> minors;
    std::vector<Polynomial> minor_values;
    size_t codim = 0;
    bool ok = false;
};

struct ExactnessVerdict {
    bool composition_ok = false;
    std::vector<size_t> ranks;
    std::vector<size_t> expected;
    std::vector<bool> rank_ok;
    std::vector<LevelGradeReport> grades;  // per level, 0-based storage
    bool verdict = false;
    std::vector<RepairRecord> repairs;
};

namespace detail {

/// Deterministic search for nonzero minors of size r when no certificate is
/// supplied: seeded random row/column subsets, bounded attempts.
inline std::vector<MinorSpec> search_minors(const PolynomialMatrix& M, size_t r, size_t want,
                                            uint64_t seed) {
    std::mt19937_64 rng(seed ^ (0xabcdefull + M.rows() * 1315423911ull));
    std::vector<MinorSpec> found;
    std::vector<size_t> all_rows(M.rows()), all_cols(M.cols());
    std::iota(all_rows.begin(), all_rows.end(), size_t(1));
    std::iota(all_cols.begin(), all_cols.end(), size_t(1));
    for (int attempt = 0; attempt < 200 && found.size() < want; ++attempt) {
        std::shuffle(all_rows.begin(), all_rows.end(), rng);
        std::shuffle(all_cols.begin(), all_cols.end(), rng);
        MinorSpec spec;
        spec.rows.assign(all_rows.begin(), all_rows.begin() + static_cast<std::ptrdiff_t>(r));
        spec.cols.assign(all_cols.begin(), all_cols.begin() + static_cast<std::ptrdiff_t>(r));
        std::sort(spec.rows.begin(), spec.rows.end());
        std::sort(spec.cols.begin(), spec.cols.end());
        bool dup = false;
        for (const MinorSpec& f : found)
            if (f.rows == spec.rows && f.cols == spec.cols) dup = true;
        if (dup) continue;
        if (!minor_determinant_1based(M, spec).is_zero()) found.push_back(std::move(spec));
    }
    return found;
}

} // namespace detail

/// Buchsbaum-Eisenbud acyclicity: the complex is exact iff every differential
/// attains its expected rank and the ideal of its expected-rank minors has
/// grade >= the homological position. Grade lower bounds are certified by
/// codimension of the exhibited minors (a subideal of I_{r_i} with
/// codimension >= i forces grade(I_{r_i}) >= i over a polynomial ring).
/// Supplied certificate minors that vanish raise CertificateError.
inline ExactnessVerdict buchsbaum_eisenbud_verify(const FreeComplex& C,
                                                  const LevelCertificates& certs = {},
                                                  uint64_t seed = 0) {
    ExactnessVerdict v;
    auto [comp_ok, bad] = compose_check(C);
    v.composition_ok = comp_ok;
    if (!comp_ok)
        throw ContractError("buchsbaum_eisenbud_verify requires a complex (repair first)");

    v.expected = C.expected_ranks();
    bool all_ok = true;
    MonomialOrder order = MonomialOrder::degrevlex(C.ring);
    for (size_t i = 0; i < C.d.size(); ++i) {
        size_t rank = matrix_rank(C.d[i], seed);
        v.ranks.push_back(rank);
        bool rok = rank == v.expected[i];
        v.rank_ok.push_back(rok);
        if (!rok) all_ok = false;

        size_t level = i + 1;
        LevelGradeReport rep;
        auto it = certs.find(level);
        if (it != certs.end()) {
            rep.minors = it->second;
        } else {
            rep.minors = detail::search_minors(C.d[i], v.expected[i], level + 1, seed + level);
        }
        for (const MinorSpec& spec : rep.minors) {
            if (spec.rows.size() != v.expected[i])
                throw CertificateError("certificate minor size differs from expected rank");
            Polynomial m = minor_determinant_1based(C.d[i], spec);
            if (m.is_zero())
                throw CertificateError("certificate minor vanishes at level " +
                                       std::to_string(level));
            rep.minor_values.push_back(std::move(m));
        }
        if (rep.minor_values.empty()) {
            rep.ok = false;
        } else {
            try {
                rep.codim = codimension(rep.minor_values, order);
            } catch (const UnitIdealError&) {
                rep.codim = C.ring.size();  // unit ideal of minors: grade is maximal
            }
            rep.ok = rep.codim >= level;
        }
        if (!rep.ok) all_ok = false;
        v.grades.push_back(std::move(rep));
    }
    v.verdict = all_ok;
    return v;
}

// ---------------------------------------------------------------------------
// Schreyer resolution and Betti numbers
// ---------------------------------------------------------------------------

namespace detail {

/// Sort a module basis so iterated Schreyer steps strip variables: within a
/// component, leading monomials in descending lexicographic order.
inline void schreyer_sort(std::vector<ModuleElem>& basis) {
    std::sort(basis.begin(), basis.end(), [](const ModuleElem& a, const ModuleElem& b) {
        const ModTerm& la = a.leading();
        const ModTerm& lb = b.leading();
        if (la.comp != lb.comp) return la.comp < lb.comp;
        for (size_t v = 0; v < la.mon.size(); ++v)
            if (la.mon[v] != lb.mon[v]) return la.mon[v] > lb.mon[v];
        return false;
    });
}

/// Drop basis elements whose leading term another element's leading term
/// divides (same component); the rest still generate and stay a basis.
inline void minimalize_module_basis(std::vector<ModuleElem>& basis) {
    std::vector<ModuleElem> keep;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const ModTerm& li = basis[i].leading();
            const ModTerm& lj = basis[j].leading();
            if (li.comp == lj.comp && lj.mon.divides(li.mon) && (lj.mon != li.mon || j < i))
                redundant = true;
        }
        if (!redundant) keep.push_back(basis[i]);
    }
    basis = std::move(keep);
}

/// One Schreyer step: the syzygies of a Groebner basis, which are themselves
/// a Groebner basis under the induced order.
inline std::vector<ModuleElem> schreyer_syzygies(const std::vector<ModuleElem>& G,
                                                 const ModuleOrder& order,
                                                 std::shared_ptr<const ModuleOrder>& next_order,
                                                 const Ring& ring) {
    std::vector<std::pair<Exponents, size_t>> labels;
    for (const ModuleElem& g : G) labels.push_back({g.leading().mon, g.leading().comp});
    auto shared_parent = std::make_shared<const ModuleOrder>(order);
    auto next = std::make_shared<const ModuleOrder>(
        ModuleOrder::schreyer(shared_parent, std::move(labels)));

    std::vector<ModuleElem> syz;
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = i + 1; j < G.size(); ++j) {
            const ModTerm& li = G[i].leading();
            const ModTerm& lj = G[j].leading();
            if (li.comp != lj.comp) continue;
            Exponents m = lcm(li.mon, lj.mon);
            Exponents ui = m - li.mon;
            Exponents uj = m - lj.mon;
            ModuleElem s = G[i]
                               .scaled(ui, Rational(Rational(1) / li.coeff))
                               .minus_scaled(G[j], uj, Rational(Rational(1) / lj.coeff), order);
            std::vector<Polynomial> q;
            ModuleElem r = module_normal_form(s, G, order, ring, &q);
            if (!r.is_zero())
                throw ContractError("schreyer step applied to a non-Groebner basis");
            std::vector<ModTerm> terms{{i, ui, Rational(Rational(1) / li.coeff)},
                                       {j, uj, Rational(Rational(-1) / lj.coeff)}};
            for (size_t b = 0; b < G.size(); ++b)
                for (const Term& t : q[b].terms()) terms.push_back({b, t.mon, Rational(-t.coeff)});
            syz.push_back(ModuleElem::from_terms(std::move(terms), *next));
        }
    }
    next_order = next;
    return syz;
}

inline PolynomialMatrix basis_to_matrix(const std::vector<ModuleElem>& basis, size_t rows,
                                        const Ring& ring) {
    PolynomialMatrix m(ring, rows, basis.size());
    for (size_t c = 0; c < basis.size(); ++c) m.set_column(c, basis[c].to_column(ring, rows));
    return m;
}

enum class SweepOrder { RowMajor, Reverse };

/// Split off one unit entry of mats[level] at (k, l): clear its row and
/// column by basis changes, then delete the split summand from the three
/// adjacent matrices.
inline void cancel_unit(std::vector<PolynomialMatrix>& mats, size_t level, size_t k, size_t l) {
    PolynomialMatrix& A = mats[level];
    const Ring& ring = A.ring();
    Rational u = A.at(k, l).terms()[0].coeff;

    std::vector<Polynomial> colL = A.column(l);
    // Column operations clearing row k (mirrored on the next differential's
    // rows), then the basis change on F_i clearing column l (mirrored on the
    // previous differential's columns).
    for (size_t j = 0; j < A.cols(); ++j) {
        if (j == l) continue;
        Polynomial akj = A.at(k, j);
        if (akj.is_zero()) continue;
        Polynomial c = akj.scalar_mul(Rational(Rational(1) / u));
        for (size_t r = 0; r < A.rows(); ++r)
            A.set(r, j, A.at(r, j) - c * colL[r]);
        if (level + 1 < mats.size()) {
            PolynomialMatrix& B = mats[level + 1];
            for (size_t col = 0; col < B.cols(); ++col)
                B.set(l, col, B.at(l, col) + c * B.at(j, col));
        }
    }
    if (level > 0) {
        PolynomialMatrix& C = mats[level - 1];
        for (size_t r2 = 0; r2 < A.rows(); ++r2) {
            if (r2 == k) continue;
            Polynomial arl = A.at(r2, l);
            if (arl.is_zero()) continue;
            Polynomial g = arl.scalar_mul(Rational(Rational(1) / u));
            for (size_t row = 0; row < C.rows(); ++row)
                C.set(row, k, C.at(row, k) + g * C.at(row, r2));
        }
    }

    auto drop = [&](const PolynomialMatrix& M, std::optional<size_t> drow,
                    std::optional<size_t> dcol) {
        PolynomialMatrix out(ring, M.rows() - (drow ? 1 : 0), M.cols() - (dcol ? 1 : 0));
        for (const auto& [rc, v] : M.entries()) {
            if (drow && rc.first == *drow) continue;
            if (dcol && rc.second == *dcol) continue;
            size_t r = rc.first - (drow && rc.first > *drow ? 1 : 0);
            size_t c = rc.second - (dcol && rc.second > *dcol ? 1 : 0);
            out.set(r, c, v);
        }
        return out;
    };
    if (level + 1 < mats.size()) {
        // exactness forces the cleared row of the next differential to vanish
        for (size_t col = 0; col < mats[level + 1].cols(); ++col)
            if (!mats[level + 1].at(l, col).is_zero())
                throw ContractError("minimization: split row did not vanish");
        mats[level + 1] = drop(mats[level + 1], l, std::nullopt);
    }
    if (level > 0) {
        for (size_t row = 0; row < mats[level - 1].rows(); ++row)
            if (!mats[level - 1].at(row, k).is_zero())
                throw ContractError("minimization: split column did not vanish");
        mats[level - 1] = drop(mats[level - 1], std::nullopt, k);
    }
    mats[level] = drop(A, k, l);
}

inline bool find_unit(const PolynomialMatrix& M, SweepOrder sweep, size_t& k, size_t& l) {
    auto is_unit = [&](size_t r, size_t c) {
        return M.has_entry(r, c) && M.at(r, c).is_unit_constant();
    };
    if (sweep == SweepOrder::RowMajor) {
        for (size_t r = 0; r < M.rows(); ++r)
            for (size_t c = 0; c < M.cols(); ++c)
                if (is_unit(r, c)) {
                    k = r;
                    l = c;
                    return true;
                }
    } else {
        for (size_t r = M.rows(); r-- > 0;)
            for (size_t c = M.cols(); c-- > 0;)
                if (is_unit(r, c)) {
                    k = r;
                    l = c;
                    return true;
                }
    }
    return false;
}

/// Cancel unit entries until every differential maps into the maximal ideal.
inline void minimize_resolution(std::vector<PolynomialMatrix>& mats, SweepOrder sweep) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t level = 0; level < mats.size(); ++level) {
            size_t k = 0, l = 0;
            if (find_unit(mats[level], sweep, k, l)) {
                cancel_unit(mats, level, k, l);
                progress = true;
                break;
            }
        }
        // drop empty tail modules
        while (!mats.empty() && mats.back().cols() == 0) mats.pop_back();
    }
}

} // namespace detail

inline constexpr size_t kBettiMaxVariables = 6;
inline constexpr size_t kBettiMaxGenerators = 48;

/// Graded Betti numbers (beta_0 = 1, beta_1, ...) of ring/<gens> via iterated
/// Schreyer syzygies on Groebner bases followed by minimization. Input must
/// be homogeneous: under the standard grading, or under `weights` when given
/// (affine curve ideals are homogeneous for the semigroup weights).
inline std::vector<size_t> betti_via_schreyer(
    const std::vector<Polynomial>& gens, const MonomialOrder& order,
    const std::optional<std::vector<int64_t>>& weights = std::nullopt,
    detail::SweepOrder sweep = detail::SweepOrder::RowMajor) {
    if (gens.empty()) throw ContractError("betti_via_schreyer needs generators");
    const Ring& ring = gens.front().ring();
    if (ring.size() > kBettiMaxVariables || gens.size() > kBettiMaxGenerators)
        throw ScaleGuardError("betti_via_schreyer: input beyond the desk-scale guard");
    for (const Polynomial& f : gens) {
        bool homog = weights ? f.is_homogeneous_weighted(*weights) : f.is_homogeneous();
        if (!homog) throw ContractError("betti_via_schreyer needs homogeneous input");
    }

    GroebnerBasis gb = buchberger_complete(gens, order);
    auto base = std::make_shared<const ModuleOrder>(ModuleOrder::top(order));
    std::vector<ModuleElem> level;
    for (const Polynomial& g : gb.elements) {
        std::vector<ModTerm> terms;
        for (const Term& t : g.terms()) terms.push_back({0, t.mon, t.coeff});
        level.push_back(ModuleElem::from_terms(std::move(terms), *base));
    }
    detail::schreyer_sort(level);

    std::vector<PolynomialMatrix> mats;
    mats.push_back(detail::basis_to_matrix(level, 1, ring));

    std::shared_ptr<const ModuleOrder> order_k = base;
    for (size_t depth = 0; depth <= ring.size() + 1; ++depth) {
        std::shared_ptr<const ModuleOrder> next;
        std::vector<ModuleElem> syz = detail::schreyer_syzygies(level, *order_k, next, ring);
        detail::minimalize_module_basis(syz);
        detail::schreyer_sort(syz);
        if (syz.empty()) break;
        mats.push_back(detail::basis_to_matrix(syz, level.size(), ring));
        level = std::move(syz);
        order_k = next;
        if (depth == ring.size() + 1)
            throw ContractError("schreyer resolution failed to terminate");
    }

    detail::minimize_resolution(mats, sweep);
    std::vector<size_t> betti{1};
    for (const PolynomialMatrix& m : mats) betti.push_back(m.cols());
    while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
    return betti;
}

} // namespace monocurve
