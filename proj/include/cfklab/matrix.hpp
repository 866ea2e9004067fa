#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cfklab/laurent.hpp"

namespace cfklab {

/// The field with two elements.
struct F2 {
    unsigned char bit = 0;
    F2() = default;
    F2(int b) : bit(static_cast<unsigned char>(b & 1)) {}

    bool is_zero() const { return bit == 0; }
    static F2 one() { return F2(1); }

    friend F2 operator+(F2 a, F2 b) { return F2(a.bit ^ b.bit); }
    friend F2 operator*(F2 a, F2 b) { return F2(a.bit & b.bit); }
    F2& operator+=(F2 b) { bit ^= b.bit; return *this; }
    friend bool operator==(F2, F2) = default;
};

inline F2 ring_one(F2) { return F2::one(); }
inline LaurentPoly ring_one(const LaurentPoly&) { return LaurentPoly::one(); }

/// Sparse rows x cols matrix over a ring R (used with F2 and LaurentPoly).
/// Zero-extent matrices (0 x n, n x 0) are legal and behave as expected.
template <class R>
class SparseMatrix {
public:
    using Index = std::pair<int, int>; // (row, col)

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix extent");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    R get(int r, int c) const {
        check_index(r, c);
        auto it = entries_.find({r, c});
        return it == entries_.end() ? R() : it->second;
    }

    void set(int r, int c, const R& v) {
        check_index(r, c);
        if (v.is_zero())
            entries_.erase({r, c});
        else
            entries_[{r, c}] = v;
    }

    void add_at(int r, int c, const R& v) { set(r, c, get(r, c) + v); }

    const std::map<Index, R>& entries() const { return entries_; }

    bool is_zero() const { return entries_.empty(); }

    static SparseMatrix identity(int n) {
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, ring_one(R()));
        return m;
    }

    SparseMatrix transpose() const {
        SparseMatrix t(cols_, rows_);
        for (const auto& [idx, v] : entries_) t.set(idx.second, idx.first, v);
        return t;
    }

    std::vector<R> apply(const std::vector<R>& x) const {
        if (static_cast<int>(x.size()) != cols_)
            throw std::invalid_argument("matrix/vector size mismatch");
        std::vector<R> y(static_cast<std::size_t>(rows_));
        for (const auto& [idx, v] : entries_) {
            const R& xi = x[static_cast<std::size_t>(idx.second)];
            if (!xi.is_zero()) y[static_cast<std::size_t>(idx.first)] += v * xi;
        }
        return y;
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
        SparseMatrix c(a.rows_, b.cols_);
        for (const auto& [ia, va] : a.entries_)
            for (const auto& [ib, vb] : b.entries_)
                if (ia.second == ib.first) c.add_at(ia.first, ib.second, va * vb);
        return c;
    }

    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum size mismatch");
        SparseMatrix c = a;
        for (const auto& [idx, v] : b.entries_) c.add_at(idx.first, idx.second, v);
        return c;
    }

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

    /// Submatrix picking the given rows and columns, in the given order.
    SparseMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        SparseMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        std::map<int, int> rpos, cpos;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) rpos[rows[i]] = i;
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) cpos[cols[j]] = j;
        for (const auto& [idx, v] : entries_) {
            auto ri = rpos.find(idx.first);
            auto cj = cpos.find(idx.second);
            if (ri != rpos.end() && cj != cpos.end()) s.set(ri->second, cj->second, v);
        }
        return s;
    }

    std::vector<R> column(int c) const {
        check_col(c);
        std::vector<R> v(static_cast<std::size_t>(rows_));
        for (const auto& [idx, val] : entries_)
            if (idx.second == c) v[static_cast<std::size_t>(idx.first)] = val;
        return v;
    }

private:
    void check_index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix index out of range");
    }
    void check_col(int c) const {
        if (c < 0 || c >= cols_) throw std::out_of_range("matrix column out of range");
    }

    int rows_ = 0, cols_ = 0;
    std::map<Index, R> entries_;
};

using F2Matrix = SparseMatrix<F2>;
using LaurentMatrix = SparseMatrix<LaurentPoly>;
using F2Vec = std::vector<F2>;
using LaurentVec = std::vector<LaurentPoly>;

} // namespace cfklab
