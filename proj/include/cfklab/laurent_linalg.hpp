#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "cfklab/matrix.hpp"

namespace cfklab {

/// Smith normal form data over GF(2)[t, t^-1]:
///   left * input * right == diag(invariants), with left/right invertible and
///   left_inv, right_inv their inverses. Invariants are unit-normalized to
///   lowest exponent 0 and form a divisibility chain.
struct SnfResult {
    std::vector<LaurentPoly> invariants;
    LaurentMatrix left, right, left_inv, right_inv;

    int rank() const { return static_cast<int>(invariants.size()); }

    LaurentMatrix diagonal(int rows, int cols) const {
        LaurentMatrix d(rows, cols);
        for (int i = 0; i < rank(); ++i) d.set(i, i, invariants[static_cast<std::size_t>(i)]);
        return d;
    }
};

namespace detail {

class SnfWorker {
public:
    explicit SnfWorker(const LaurentMatrix& input)
        : rows_(input.rows()), cols_(input.cols()),
          m_(static_cast<std::size_t>(rows_), LaurentVec(static_cast<std::size_t>(cols_))) {
        for (const auto& [idx, v] : input.entries())
            m_[static_cast<std::size_t>(idx.first)][static_cast<std::size_t>(idx.second)] = v;
        l_ = dense_identity(rows_);
        linv_ = dense_identity(rows_);
        r_ = dense_identity(cols_);
        rinv_ = dense_identity(cols_);
    }

    SnfResult run() {
        int t = 0;
        const int bound = std::min(rows_, cols_);
        while (t < bound && move_pivot(t)) {
            clear_cross(t);
            enforce_divisibility(t);
            normalize_pivot(t);
            ++t;
        }
        SnfResult out;
        for (int i = 0; i < t; ++i) out.invariants.push_back(at(i, i));
        out.left = to_sparse(l_, rows_, rows_);
        out.left_inv = to_sparse(linv_, rows_, rows_);
        out.right = to_sparse(r_, cols_, cols_);
        out.right_inv = to_sparse(rinv_, cols_, cols_);
        return out;
    }

private:
    using Dense = std::vector<LaurentVec>;

    static Dense dense_identity(int n) {
        Dense d(static_cast<std::size_t>(n), LaurentVec(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = LaurentPoly::one();
        return d;
    }
    static LaurentMatrix to_sparse(const Dense& d, int rows, int cols) {
        LaurentMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                const LaurentPoly& v = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (!v.is_zero()) m.set(i, j, v);
            }
        return m;
    }

    LaurentPoly& at(int i, int j) { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    // Elementary operations, mirrored into the transform accumulators. Note
    // that over GF(2) every elementary addition is its own inverse.
    void row_add(int i, int j, const LaurentPoly& f) { // row_i += f * row_j
        for (int c = 0; c < cols_; ++c) at(i, c) += f * at(j, c);
        for (int c = 0; c < rows_; ++c)
            l_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] +=
                f * l_[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
        for (int rr = 0; rr < rows_; ++rr)
            linv_[static_cast<std::size_t>(rr)][static_cast<std::size_t>(j)] +=
                f * linv_[static_cast<std::size_t>(rr)][static_cast<std::size_t>(i)];
    }
    void col_add(int j, int i, const LaurentPoly& f) { // col_j += f * col_i
        for (int rr = 0; rr < rows_; ++rr) at(rr, j) += f * at(rr, i);
        for (int rr = 0; rr < cols_; ++rr)
            r_[static_cast<std::size_t>(rr)][static_cast<std::size_t>(j)] +=
                f * r_[static_cast<std::size_t>(rr)][static_cast<std::size_t>(i)];
        for (int c = 0; c < cols_; ++c)
            rinv_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] +=
                f * rinv_[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
    }
    void row_swap(int i, int j) {
        if (i == j) return;
        std::swap(m_[static_cast<std::size_t>(i)], m_[static_cast<std::size_t>(j)]);
        std::swap(l_[static_cast<std::size_t>(i)], l_[static_cast<std::size_t>(j)]);
        for (int rr = 0; rr < rows_; ++rr)
            std::swap(linv_[static_cast<std::size_t>(rr)][static_cast<std::size_t>(i)],
                      linv_[static_cast<std::size_t>(rr)][static_cast<std::size_t>(j)]);
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int rr = 0; rr < rows_; ++rr)
            std::swap(m_[static_cast<std::size_t>(rr)][static_cast<std::size_t>(i)],
                      m_[static_cast<std::size_t>(rr)][static_cast<std::size_t>(j)]);
        for (int rr = 0; rr < cols_; ++rr)
            std::swap(r_[static_cast<std::size_t>(rr)][static_cast<std::size_t>(i)],
                      r_[static_cast<std::size_t>(rr)][static_cast<std::size_t>(j)]);
        std::swap(rinv_[static_cast<std::size_t>(i)], rinv_[static_cast<std::size_t>(j)]);
    }
    void row_scale(int i, int shift) { // multiply row by the unit t^shift
        for (int c = 0; c < cols_; ++c) at(i, c) = at(i, c).shifted(shift);
        for (int c = 0; c < rows_; ++c)
            l_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
                l_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].shifted(shift);
        for (int rr = 0; rr < rows_; ++rr)
            linv_[static_cast<std::size_t>(rr)][static_cast<std::size_t>(i)] =
                linv_[static_cast<std::size_t>(rr)][static_cast<std::size_t>(i)].shifted(-shift);
    }

    /// Moves a minimal-width nonzero entry of the trailing submatrix to (t, t).
    /// Ties break to the lowest (row, col). Returns false if the submatrix is zero.
    bool move_pivot(int t) {
        int bi = -1, bj = -1, bw = -1;
        for (int i = t; i < rows_; ++i)
            for (int j = t; j < cols_; ++j) {
                const LaurentPoly& v = at(i, j);
                if (v.is_zero()) continue;
                if (bw < 0 || v.width() < bw) { bw = v.width(); bi = i; bj = j; }
            }
        if (bi < 0) return false;
        row_swap(t, bi);
        col_swap(t, bj);
        return true;
    }

    /// Clears row t and column t outside the pivot. Whenever a division leaves
    /// a remainder, the remainder has smaller width and is swapped into the
    /// pivot slot; the loop terminates because pivot width strictly drops.
    void clear_cross(int t) {
        for (;;) {
            bool again = false;
            for (int i = t + 1; i < rows_ && !again; ++i) {
                if (at(i, t).is_zero()) continue;
                auto [q, rem] = LaurentPoly::divmod(at(i, t), at(t, t));
                row_add(i, t, q);
                if (!rem.is_zero()) { row_swap(t, i); again = true; }
            }
            if (again) continue;
            for (int j = t + 1; j < cols_ && !again; ++j) {
                if (at(t, j).is_zero()) continue;
                auto [q, rem] = LaurentPoly::divmod(at(t, j), at(t, t));
                col_add(j, t, q);
                if (!rem.is_zero()) { col_swap(t, j); again = true; }
            }
            if (!again) break;
        }
    }

    /// Makes the pivot divide every entry of the trailing submatrix by folding
    /// an offending row into the pivot row and re-clearing.
    void enforce_divisibility(int t) {
        for (;;) {
            int bad = -1;
            for (int i = t + 1; i < rows_ && bad < 0; ++i)
                for (int j = t + 1; j < cols_; ++j)
                    if (!LaurentPoly::divides(at(t, t), at(i, j))) { bad = i; break; }
            if (bad < 0) return;
            row_add(t, bad, LaurentPoly::one());
            clear_cross(t);
        }
    }

    void normalize_pivot(int t) {
        const int v = at(t, t).min_exp();
        if (v != 0) row_scale(t, -v);
    }

    int rows_, cols_;
    Dense m_, l_, linv_, r_, rinv_;
};

} // namespace detail

inline SnfResult laurent_snf(const LaurentMatrix& m) {
    return detail::SnfWorker(m).run();
}

inline int laurent_rank(const LaurentMatrix& m) { return laurent_snf(m).rank(); }

/// Basis of the right kernel over GF(2)[t, t^-1]: the trailing columns of the
/// right transform beyond the rank.
inline std::vector<LaurentVec> laurent_kernel_basis(const LaurentMatrix& m,
                                                    const SnfResult& snf) {
    std::vector<LaurentVec> basis;
    for (int c = snf.rank(); c < m.cols(); ++c) basis.push_back(snf.right.column(c));
    return basis;
}

inline std::vector<LaurentVec> laurent_kernel_basis(const LaurentMatrix& m) {
    return laurent_kernel_basis(m, laurent_snf(m));
}

/// Solves m x = v over GF(2)[t, t^-1], or nullopt when v is not in the column span.
inline std::optional<LaurentVec> laurent_membership(const LaurentMatrix& m,
                                                    const LaurentVec& v,
                                                    const SnfResult& snf) {
    if (static_cast<int>(v.size()) != m.rows())
        throw std::invalid_argument("membership vector length mismatch");
    LaurentVec w = snf.left.apply(v);
    LaurentVec y(static_cast<std::size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        const LaurentPoly& wi = w[static_cast<std::size_t>(i)];
        if (i < snf.rank()) {
            const LaurentPoly& d = snf.invariants[static_cast<std::size_t>(i)];
            if (!LaurentPoly::divides(d, wi)) return std::nullopt;
            if (i < m.cols()) y[static_cast<std::size_t>(i)] = LaurentPoly::exact_div(wi, d);
        } else if (!wi.is_zero()) {
            return std::nullopt;
        }
    }
    return snf.right.apply(y);
}

inline std::optional<LaurentVec> laurent_membership(const LaurentMatrix& m, const LaurentVec& v) {
    return laurent_membership(m, v, laurent_snf(m));
}

inline bool laurent_in_column_span(const LaurentMatrix& m, const LaurentVec& v) {
    return laurent_membership(m, v).has_value();
}

} // namespace cfklab
