#pragma once

#include <vector>

#include "cfklab/laurent_linalg.hpp"
#include "cfklab/truncated.hpp"

namespace cfklab {

enum class CoefficientMode { untwisted, twisted };

/// Grading-sliced chain complex over R (GF(2) or the Laurent ring), with a
/// degree -2 U-action. Gradings are doubled, so d shifts grading2 by -2 and
/// u by -4.
template <class R>
struct GradedChainComplex {
    std::vector<int> grading2;
    SparseMatrix<R> d;
    SparseMatrix<R> u;

    int size() const { return static_cast<int>(grading2.size()); }
    std::vector<int> slice(int g2) const {
        std::vector<int> idx;
        for (int i = 0; i < size(); ++i)
            if (grading2[static_cast<std::size_t>(i)] == g2) idx.push_back(i);
        return idx;
    }
};

/// Mapping cone of v + t*h from the s-indexed complex to the target complex,
/// over GF(2)[t, t^-1]. The source part carries a +1/2 grading offset and the
/// target part -1/2. Setting t = 1 gives the untwisted cone over GF(2).
struct ConeComplex {
    SurgeryPieces pieces;
    CoefficientMode mode = CoefficientMode::twisted;
    LaurentMatrix connecting; // entry 1 from v, t from h, on the t != 1 form

    int a_size() const { return pieces.a.size(); }
    int b_size() const { return pieces.b.size(); }
    int size() const { return a_size() + b_size(); }
};

inline ConeComplex build_cone(const CfkComplex& c, int s, CoefficientMode mode, int n) {
    ConeComplex cone;
    cone.mode = mode;
    cone.pieces = maps_v_h(c, s, n);
    cone.connecting = LaurentMatrix(cone.pieces.b.size(), cone.pieces.a.size());
    for (const auto& [idx, val] : cone.pieces.v.entries())
        cone.connecting.add_at(idx.first, idx.second, LaurentPoly::one());
    for (const auto& [idx, val] : cone.pieces.h.entries())
        cone.connecting.add_at(idx.first, idx.second, LaurentPoly::monomial(1));
    return cone;
}

namespace cone_detail {

inline std::vector<int> cone_grading2(const ConeComplex& cone) {
    std::vector<int> g2;
    g2.reserve(static_cast<std::size_t>(cone.size()));
    for (int g : cone.pieces.a.grading2) g2.push_back(g + 1);
    for (int g : cone.pieces.b.grading2) g2.push_back(g - 1);
    return g2;
}

template <class R, class EntryFn>
GradedChainComplex<R> flatten(const ConeComplex& cone, EntryFn lift) {
    GradedChainComplex<R> x;
    x.grading2 = cone_grading2(cone);
    const int na = cone.a_size(), nb = cone.b_size(), n = cone.size();
    x.d = SparseMatrix<R>(n, n);
    x.u = SparseMatrix<R>(n, n);
    for (const auto& [idx, v] : cone.pieces.a.boundary.entries())
        x.d.set(idx.first, idx.second, lift(LaurentPoly::one()));
    for (const auto& [idx, v] : cone.pieces.b.boundary.entries())
        x.d.set(na + idx.first, na + idx.second, lift(LaurentPoly::one()));
    for (const auto& [idx, v] : cone.connecting.entries())
        x.d.add_at(na + idx.first, idx.second, lift(v));
    for (const auto& [idx, v] : cone.pieces.a.u_action.entries())
        x.u.set(idx.first, idx.second, lift(LaurentPoly::one()));
    for (const auto& [idx, v] : cone.pieces.b.u_action.entries())
        x.u.set(na + idx.first, na + idx.second, lift(LaurentPoly::one()));
    return x;
}

} // namespace cone_detail

/// The cone as a Laurent-coefficient complex (totally twisted coefficients).
inline GradedChainComplex<LaurentPoly> cone_twisted_complex(const ConeComplex& cone) {
    return cone_detail::flatten<LaurentPoly>(cone, [](const LaurentPoly& p) { return p; });
}

/// The cone at t = 1 as a GF(2)-coefficient complex (untwisted coefficients).
inline GradedChainComplex<F2> cone_untwisted_complex(const ConeComplex& cone) {
    return cone_detail::flatten<F2>(cone, [](const LaurentPoly& p) { return F2(p.eval_at_one()); });
}

/// GF(2) view of a truncated complex, for the shared homology machinery.
inline GradedChainComplex<F2> as_graded(const TruncatedComplex& t) {
    return {t.grading2, t.boundary, t.u_action};
}

} // namespace cfklab
