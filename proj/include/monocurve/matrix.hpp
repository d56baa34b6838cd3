#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "monocurve/division.hpp"
#include "monocurve/polynomial.hpp"

namespace monocurve {

/// Exact quotient f/d for exactly divisible polynomials.
inline Polynomial divide_exact(const Polynomial& f, const Polynomial& d) {
    if (d.is_zero()) throw ZeroPolynomialError("division by zero polynomial");
    if (f.is_zero()) return f;
    std::vector<Polynomial> quotients;
    Polynomial r = normal_form(f, {d}, MonomialOrder::degrevlex(f.ring()), &quotients);
    if (!r.is_zero()) throw ContractError("divide_exact: not exactly divisible");
    return quotients[0];
}

/// Sparse matrix of polynomials between graded free modules. Indices are
/// 0-based; absent entries are zero.
class PolynomialMatrix {
public:
    PolynomialMatrix(Ring ring, size_t rows, size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols) {}

    const Ring& ring() const { return ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    void set(size_t r, size_t c, Polynomial v) {
        check(r, c);
        if (v.is_zero())
            entries_.erase({r, c});
        else
            entries_[{r, c}] = std::move(v);
    }

    Polynomial at(size_t r, size_t c) const {
        check(r, c);
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Polynomial::zero(ring_) : it->second;
    }

    bool has_entry(size_t r, size_t c) const { return entries_.count({r, c}) > 0; }

    const std::map<std::pair<size_t, size_t>, Polynomial>& entries() const { return entries_; }

    bool is_zero() const { return entries_.empty(); }

    PolynomialMatrix product(const PolynomialMatrix& o) const {
        require_same_ring(ring_, o.ring_, "matrix product");
        if (cols_ != o.rows_) throw DimensionError("matrix shape mismatch in product");
        PolynomialMatrix out(ring_, rows_, o.cols_);
        std::map<std::pair<size_t, size_t>, Polynomial> acc;
        for (const auto& [rc, a] : entries_) {
            for (size_t j = 0; j < o.cols_; ++j) {
                auto it = o.entries_.find({rc.second, j});
                if (it == o.entries_.end()) continue;
                Polynomial prod = a * it->second;
                auto [slot, fresh] = acc.try_emplace({rc.first, j}, prod);
                if (!fresh) slot->second = slot->second + prod;
            }
        }
        for (auto& [rc, v] : acc)
            if (!v.is_zero()) out.entries_.emplace(rc, std::move(v));
        return out;
    }

    std::vector<Polynomial> column(size_t c) const {
        std::vector<Polynomial> out(rows_, Polynomial::zero(ring_));
        for (const auto& [rc, v] : entries_)
            if (rc.second == c) out[rc.first] = v;
        return out;
    }

    void set_column(size_t c, const std::vector<Polynomial>& col) {
        if (col.size() != rows_) throw DimensionError("column length mismatch");
        for (size_t r = 0; r < rows_; ++r) set(r, c, col[r]);
    }

    PolynomialMatrix submatrix(const std::vector<size_t>& rows,
                               const std::vector<size_t>& cols) const {
        PolynomialMatrix out(ring_, rows.size(), cols.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) {
                auto it = entries_.find({rows[i], cols[j]});
                if (it != entries_.end()) out.entries_[{i, j}] = it->second;
            }
        return out;
    }

    /// Every nonzero entry lies in the irrelevant maximal ideal, i.e. no
    /// nonzero constant entries. Differentials of minimal resolutions must
    /// satisfy this.
    bool entries_in_maximal_ideal() const {
        for (const auto& [rc, v] : entries_)
            if (v.is_unit_constant()) return false;
        return true;
    }

private:
    void check(size_t r, size_t c) const {
        if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
    }

    Ring ring_;
    size_t rows_, cols_;
    std::map<std::pair<size_t, size_t>, Polynomial> entries_;
};

namespace detail {

/// Dense fraction-free (Bareiss) elimination. Entries after step k are, up to
/// sign, (k+1)-minors of the input, so quotients by the previous pivot are
/// exact. Row/column swaps only permute which minors appear.
class Bareiss {
public:
    explicit Bareiss(std::vector<std::vector<Polynomial>> m, Ring ring)
        : m_(std::move(m)), ring_(std::move(ring)) {}

    /// Determinant of a square matrix.
    Polynomial determinant() {
        size_t n = m_.size();
        if (n == 0) return Polynomial::one(ring_);
        int sign = 1;
        Polynomial prev = Polynomial::one(ring_);
        for (size_t k = 0; k + 1 < n; ++k) {
            size_t piv = n;
            for (size_t i = k; i < n; ++i) {
                if (m_[i][k].is_zero()) continue;
                if (piv == n || better_pivot(m_[i][k], m_[piv][k])) piv = i;
            }
            if (piv == n) return Polynomial::zero(ring_);
            if (piv != k) {
                std::swap(m_[piv], m_[k]);
                sign = -sign;
            }
            step(k, n, prev);
            prev = m_[k][k];
        }
        Polynomial det = m_[n - 1][n - 1];
        return sign < 0 ? -det : det;
    }

    /// Rank of a rectangular matrix (full pivoting).
    size_t rank() {
        size_t rows = m_.size();
        size_t cols = rows == 0 ? 0 : m_[0].size();
        size_t r = 0;
        Polynomial prev = Polynomial::one(ring_);
        while (r < rows && r < cols) {
            size_t pi = rows, pj = cols;
            for (size_t i = r; i < rows; ++i)
                for (size_t j = r; j < cols; ++j) {
                    if (m_[i][j].is_zero()) continue;
                    if (pi == rows || better_pivot(m_[i][j], m_[pi][pj])) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == rows) break;
            std::swap(m_[pi], m_[r]);
            if (pj != r)
                for (auto& row : m_) std::swap(row[pj], row[r]);
            step(r, rows, prev);
            prev = m_[r][r];
            ++r;
        }
        return r;
    }

private:
    static bool better_pivot(const Polynomial& a, const Polynomial& b) {
        if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
        return a.degree() < b.degree();
    }

    void step(size_t k, size_t rows, const Polynomial& prev) {
        size_t cols = m_[0].size();
        for (size_t i = k + 1; i < rows; ++i) {
            for (size_t j = k + 1; j < cols; ++j) {
                Polynomial num = m_[k][k] * m_[i][j] - m_[i][k] * m_[k][j];
                m_[i][j] = num.is_zero() ? num : divide_exact(num, prev);
            }
            m_[i][k] = Polynomial::zero(ring_);
        }
    }

    std::vector<std::vector<Polynomial>> m_;
    Ring ring_;
};

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

inline uint64_t rational_mod(const Rational& q, uint64_t p) {
    Integer num = boost::multiprecision::numerator(q);
    Integer den = boost::multiprecision::denominator(q);
    bool neg = num < 0;
    if (neg) num = -num;
    uint64_t n = static_cast<uint64_t>(num % p);
    uint64_t d = static_cast<uint64_t>(den % p);
    if (d == 0) throw ContractError("denominator vanishes mod sampling prime");
    uint64_t v = mulmod(n, invmod(d, p), p);
    return neg ? (p - v) % p : v;
}

/// Rank of the matrix evaluated at seeded random points mod a large prime; a
/// lower bound for the symbolic rank, almost surely equal to it.
inline size_t modular_rank(const PolynomialMatrix& M, uint64_t seed) {
    constexpr uint64_t p = 2305843009213693951ull;  // 2^61 - 1
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<uint64_t> dist(1, p - 1);
    size_t nvars = M.ring().size();
    std::vector<uint64_t> point(nvars);
    for (auto& v : point) v = dist(rng);

    std::vector<std::vector<uint64_t>> a(M.rows(), std::vector<uint64_t>(M.cols(), 0));
    for (const auto& [rc, poly] : M.entries()) {
        uint64_t val = 0;
        for (const Term& t : poly.terms()) {
            uint64_t m = rational_mod(t.coeff, p);
            for (size_t v = 0; v < nvars; ++v)
                if (t.mon[v]) m = mulmod(m, powmod(point[v], static_cast<uint64_t>(t.mon[v]), p), p);
            val = (val + m) % p;
        }
        a[rc.first][rc.second] = val;
    }

    size_t r = 0;
    for (size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        size_t piv = r;
        while (piv < M.rows() && a[piv][c] == 0) ++piv;
        if (piv == M.rows()) continue;
        std::swap(a[piv], a[r]);
        uint64_t inv = invmod(a[r][c], p);
        for (size_t i = r + 1; i < M.rows(); ++i) {
            if (a[i][c] == 0) continue;
            uint64_t f = mulmod(a[i][c], inv, p);
            for (size_t j = c; j < M.cols(); ++j)
                a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
        }
        ++r;
    }
    return r;
}

} // namespace detail

/// Exact determinant of the submatrix selected by strictly increasing row and
/// column index lists (0-based). The empty minor is 1.
inline Polynomial minor_determinant(const PolynomialMatrix& M, const std::vector<size_t>& rows,
                                    const std::vector<size_t>& cols) {
    if (rows.size() != cols.size()) throw DimensionError("minor needs |rows| = |cols|");
    for (size_t k = 0; k + 1 < rows.size(); ++k)
        if (rows[k] >= rows[k + 1] || cols[k] >= cols[k + 1])
            throw ContractError("minor index lists must be strictly increasing");
    if (!rows.empty() && (rows.back() >= M.rows() || cols.back() >= M.cols()))
        throw DimensionError("minor index out of range");
    if (rows.empty()) return Polynomial::one(M.ring());
    PolynomialMatrix sub = M.submatrix(rows, cols);
    std::vector<std::vector<Polynomial>> dense(
        rows.size(), std::vector<Polynomial>(cols.size(), Polynomial::zero(M.ring())));
    for (const auto& [rc, v] : sub.entries()) dense[rc.first][rc.second] = v;
    return detail::Bareiss(std::move(dense), M.ring()).determinant();
}

/// Exact rank over the fraction field, by fraction-free elimination. A seeded
/// modular evaluation provides a lower bound first; the symbolic answer is
/// checked against it and returned.
inline size_t matrix_rank(const PolynomialMatrix& M, uint64_t seed = 0) {
    if (M.is_zero()) return 0;
    size_t lower = detail::modular_rank(M, seed);
    std::vector<std::vector<Polynomial>> dense(
        M.rows(), std::vector<Polynomial>(M.cols(), Polynomial::zero(M.ring())));
    for (const auto& [rc, v] : M.entries()) dense[rc.first][rc.second] = v;
    size_t exact = detail::Bareiss(std::move(dense), M.ring()).rank();
    if (exact < lower) throw ContractError("rank elimination lost a pivot");
    return exact;
}

/// Assembles a matrix from sparse 1-based entry rules, enforcing one writer
/// per cell. Index disambiguations applied while transcribing the rules are
/// collected as notes for the provenance report.
class MatrixBuilder {
public:
    MatrixBuilder(Ring ring, size_t rows, size_t cols)
        : m_(std::move(ring), rows, cols) {}

    MatrixBuilder& put(size_t row1, size_t col1, Polynomial v) {
        if (row1 == 0 || col1 == 0 || row1 > m_.rows() || col1 > m_.cols())
            throw AssemblyError("entry (" + std::to_string(row1) + "," + std::to_string(col1) +
                                ") out of range for " + std::to_string(m_.rows()) + "x" +
                                std::to_string(m_.cols()));
        if (m_.has_entry(row1 - 1, col1 - 1))
            throw AssemblyError("cell (" + std::to_string(row1) + "," + std::to_string(col1) +
                                ") written twice");
        if (!v.is_zero()) m_.set(row1 - 1, col1 - 1, std::move(v));
        return *this;
    }

    MatrixBuilder& note(std::string text) {
        notes_.push_back(std::move(text));
        return *this;
    }

    const std::vector<std::string>& notes() const { return notes_; }
    PolynomialMatrix take() { return std::move(m_); }

private:
    PolynomialMatrix m_;
    std::vector<std::string> notes_;
};

/// One exhibited minor of a differential, by 1-based row/column index lists.
struct MinorSpec {
    std::vector<size_t> rows;  // 1-based, strictly increasing
    std::vector<size_t> cols;  // 1-based, strictly increasing
};

/// Certificate minors per homological level (1-based level -> minors).
using LevelCertificates = std::map<size_t, std::vector<MinorSpec>>;

inline Polynomial minor_determinant_1based(const PolynomialMatrix& M, const MinorSpec& spec) {
    std::vector<size_t> r, c;
    for (size_t v : spec.rows) {
        if (v == 0) throw ContractError("minor indices are 1-based");
        r.push_back(v - 1);
    }
    for (size_t v : spec.cols) {
        if (v == 0) throw ContractError("minor indices are 1-based");
        c.push_back(v - 1);
    }
    return minor_determinant(M, r, c);
}

} // namespace monocurve
