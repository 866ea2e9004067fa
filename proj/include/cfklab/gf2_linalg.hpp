#pragma once

#include <optional>
#include <vector>

#include "cfklab/matrix.hpp"

namespace cfklab {

struct GaussResult {
    int rank = 0;
    /// Basis of the right kernel, as length-cols vectors.
    std::vector<F2Vec> kernel_basis;
    /// Basis of the column space, as length-rows vectors (pivot columns of the input).
    std::vector<F2Vec> image_basis;
};

namespace detail {

inline std::vector<std::vector<unsigned char>> to_dense(const F2Matrix& m) {
    std::vector<std::vector<unsigned char>> d(
        static_cast<std::size_t>(m.rows()),
        std::vector<unsigned char>(static_cast<std::size_t>(m.cols()), 0));
    for (const auto& [idx, v] : m.entries())
        d[static_cast<std::size_t>(idx.first)][static_cast<std::size_t>(idx.second)] = v.bit;
    return d;
}

} // namespace detail

/// Row reduction over GF(2): rank, kernel basis and image basis.
inline GaussResult gf2_gauss(const F2Matrix& m) {
    auto a = detail::to_dense(m);
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_row_of_col(static_cast<std::size_t>(cols), -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(r)]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || !a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) continue;
            for (int j = c; j < cols; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ^=
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        pivot_col_of_row.push_back(c);
        pivot_row_of_col[static_cast<std::size_t>(c)] = r;
        ++r;
    }

    GaussResult out;
    out.rank = r;
    for (int c = 0; c < cols; ++c) {
        if (pivot_row_of_col[static_cast<std::size_t>(c)] >= 0) {
            out.image_basis.push_back(m.column(c));
            continue;
        }
        F2Vec k(static_cast<std::size_t>(cols));
        k[static_cast<std::size_t>(c)] = F2(1);
        for (int i = 0; i < r; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)])
                k[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(i)])] = F2(1);
        out.kernel_basis.push_back(std::move(k));
    }
    return out;
}

inline int gf2_rank(const F2Matrix& m) { return gf2_gauss(m).rank; }

/// Solves m x = v over GF(2); returns a solution (free variables set to 0) or
/// nullopt when v is outside the column span.
inline std::optional<F2Vec> image_membership(const F2Matrix& m, const F2Vec& v) {
    if (static_cast<int>(v.size()) != m.rows())
        throw std::invalid_argument("membership vector length mismatch");
    auto a = detail::to_dense(m);
    std::vector<unsigned char> b(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) b[i] = v[i].bit;
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col_of_row;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(r)]);
        std::swap(b[static_cast<std::size_t>(p)], b[static_cast<std::size_t>(r)]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || !a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) continue;
            for (int j = c; j < cols; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ^=
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
            b[static_cast<std::size_t>(i)] ^= b[static_cast<std::size_t>(r)];
        }
        pivot_col_of_row.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (b[static_cast<std::size_t>(i)]) return std::nullopt;
    F2Vec x(static_cast<std::size_t>(cols));
    for (int i = 0; i < r; ++i)
        if (b[static_cast<std::size_t>(i)])
            x[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(i)])] = F2(1);
    return x;
}

inline bool in_column_span(const F2Matrix& m, const F2Vec& v) {
    return image_membership(m, v).has_value();
}

} // namespace cfklab
