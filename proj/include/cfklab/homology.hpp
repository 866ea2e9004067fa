#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cfklab/cone.hpp"
#include "cfklab/gf2_linalg.hpp"
#include "cfklab/laurent_linalg.hpp"
#include "cfklab/rational.hpp"

namespace cfklab {

inline std::vector<F2Vec> matrix_kernel(const F2Matrix& m) {
    return gf2_gauss(m).kernel_basis;
}
inline std::vector<LaurentVec> matrix_kernel(const LaurentMatrix& m) {
    return laurent_kernel_basis(m);
}
inline bool matrix_in_span(const F2Matrix& m, const F2Vec& v) {
    return in_column_span(m, v);
}
inline bool matrix_in_span(const LaurentMatrix& m, const LaurentVec& v) {
    return laurent_in_column_span(m, v);
}

namespace homology_detail {

template <class R>
std::vector<int> sorted_gradings(const GradedChainComplex<R>& x) {
    std::set<int> s(x.grading2.begin(), x.grading2.end());
    return {s.begin(), s.end()};
}

/// Cycles at grading g2, as global coordinate vectors.
template <class R>
std::vector<std::vector<R>> cycles_at(const GradedChainComplex<R>& x, int g2) {
    const auto cols = x.slice(g2);
    const auto rows = x.slice(g2 - 2);
    const auto local = matrix_kernel(x.d.submatrix(rows, cols));
    std::vector<std::vector<R>> global;
    for (const auto& k : local) {
        std::vector<R> v(static_cast<std::size_t>(x.size()));
        for (std::size_t j = 0; j < cols.size(); ++j)
            v[static_cast<std::size_t>(cols[j])] = k[j];
        global.push_back(std::move(v));
    }
    return global;
}

/// Columns of the boundary landing in grading g2, restricted to that slice.
template <class R>
SparseMatrix<R> boundaries_into(const GradedChainComplex<R>& x, int g2) {
    const auto rows = x.slice(g2);
    const auto cols = x.slice(g2 + 2);
    return x.d.submatrix(rows, cols);
}

template <class R>
std::vector<R> restrict_to(const std::vector<R>& v, const std::vector<int>& idx,
                           bool& supported_elsewhere) {
    std::vector<R> out;
    out.reserve(idx.size());
    std::set<int> in_slice(idx.begin(), idx.end());
    supported_elsewhere = false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero() && !in_slice.count(static_cast<int>(i))) supported_elsewhere = true;
    for (int i : idx) out.push_back(v[static_cast<std::size_t>(i)]);
    return out;
}

/// Representatives at grading g2 of homology classes in the image of u^k:
/// u^k applied to the cycles at grading g2 + 4k, in slice coordinates.
template <class R>
std::vector<std::vector<R>> stable_class_reps(const GradedChainComplex<R>& x, int g2, int k) {
    std::vector<std::vector<R>> reps;
    const auto slice = x.slice(g2);
    for (auto z : cycles_at(x, g2 + 4 * k)) {
        for (int step = 0; step < k; ++step) z = x.u.apply(z);
        bool stray = false;
        auto w = restrict_to(z, slice, stray);
        if (stray)
            throw std::logic_error("u-power image escaped its grading slice");
        reps.push_back(std::move(w));
    }
    return reps;
}

} // namespace homology_detail

/// True when the image of u^k on homology is nonzero in grading g2: some cycle
/// from grading g2 + 4k pushes down to a class not killed by the boundaries.
template <class R>
bool tower_at(const GradedChainComplex<R>& x, int g2, int k) {
    const auto bnd = homology_detail::boundaries_into(x, g2);
    for (const auto& w : homology_detail::stable_class_reps(x, g2, k))
        if (!matrix_in_span(bnd, w)) return true;
    return false;
}

/// Minimal doubled grading carrying a u^k-stable homology class.
template <class R>
std::optional<int> min_tower_grading2(const GradedChainComplex<R>& x, int k) {
    for (int g2 : homology_detail::sorted_gradings(x))
        if (tower_at(x, g2, k)) return g2;
    return std::nullopt;
}

/// Per-grading homology description of a cone complex, plus the bottoms of
/// the U-towers it supports.
struct GradedModuleSummary {
    CoefficientMode mode = CoefficientMode::twisted;
    /// GF(2) dimension per doubled grading (finite part; twisted entries with
    /// free rank > 0 report -1).
    std::map<int, int> dim_by_grading2;
    /// Twisted mode only: invariant factors of the homology presentation.
    std::map<int, std::vector<LaurentPoly>> invariants_by_grading2;
    std::map<int, int> free_rank_by_grading2;
    std::vector<Rational> tower_bottoms;
};

namespace homology_detail {

inline void summarize_grading(GradedModuleSummary& out, const GradedChainComplex<F2>& x, int g2) {
    const auto slice = x.slice(g2);
    const int n = static_cast<int>(slice.size());
    const int rank_out = gf2_rank(x.d.submatrix(x.slice(g2 - 2), slice));
    const int rank_in = gf2_rank(boundaries_into(x, g2));
    out.dim_by_grading2[g2] = n - rank_out - rank_in;
}

inline void summarize_grading(GradedModuleSummary& out, const GradedChainComplex<LaurentPoly>& x,
                              int g2) {
    const auto slice = x.slice(g2);
    const auto out_m = x.d.submatrix(x.slice(g2 - 2), slice);
    const SnfResult out_snf = laurent_snf(out_m);
    const int n_cycles = static_cast<int>(slice.size()) - out_snf.rank();

    // Relations: boundary columns from above, written in kernel coordinates
    // (the trailing right-transform coordinates of the outgoing SNF).
    const auto in_m = boundaries_into(x, g2);
    LaurentMatrix relations(n_cycles, in_m.cols());
    for (int j = 0; j < in_m.cols(); ++j) {
        const LaurentVec y = out_snf.right_inv.apply(in_m.column(j));
        for (int i = 0; i < n_cycles; ++i) {
            const LaurentPoly& coeff = y[static_cast<std::size_t>(out_snf.rank() + i)];
            if (!coeff.is_zero()) relations.set(i, j, coeff);
        }
        for (int i = 0; i < out_snf.rank(); ++i)
            if (!y[static_cast<std::size_t>(i)].is_zero())
                throw std::logic_error("boundary class is not a cycle");
    }
    const SnfResult rel_snf = laurent_snf(relations);
    out.invariants_by_grading2[g2] = rel_snf.invariants;
    const int free_rank = n_cycles - rel_snf.rank();
    out.free_rank_by_grading2[g2] = free_rank;
    if (free_rank > 0) {
        out.dim_by_grading2[g2] = -1;
    } else {
        int dim = 0;
        for (const auto& inv : rel_snf.invariants) dim += inv.width();
        out.dim_by_grading2[g2] = dim;
    }
}

template <class R>
GradedModuleSummary summarize(const GradedChainComplex<R>& x, CoefficientMode mode, int k) {
    GradedModuleSummary out;
    out.mode = mode;
    const auto gradings = sorted_gradings(x);
    const int top = gradings.empty() ? 0 : gradings.back();
    std::map<int, bool> has_tower;
    for (int g2 : gradings) {
        summarize_grading(out, x, g2);
        if (g2 + 4 * k <= top) has_tower[g2] = tower_at(x, g2, k);
    }
    for (const auto& [g2, present] : has_tower) {
        if (!present) continue;
        auto below = has_tower.find(g2 - 4);
        if (below == has_tower.end() || !below->second)
            out.tower_bottoms.push_back(Rational(g2, 2));
    }
    return out;
}

} // namespace homology_detail

/// Homology summary of a surgery mapping cone; the probe depth for tower
/// detection is half the truncation level.
inline GradedModuleSummary cone_homology(const ConeComplex& cone) {
    const int k = cone.pieces.a.truncation / 2;
    if (cone.mode == CoefficientMode::twisted)
        return homology_detail::summarize(cone_twisted_complex(cone), cone.mode, k);
    return homology_detail::summarize(cone_untwisted_complex(cone), cone.mode, k);
}

} // namespace cfklab
