#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "cfklab/complex.hpp"
#include "cfklab/matrix.hpp"

namespace cfklab {

/// Finite GF(2) model of a sub-quotient of CFK-infinity. Basis elements are
/// U-translates (generator, i); the translate (x, i) sits at filtration
/// position (i, A(x) + i) with Maslov grading M(x) + 2i. Gradings are stored
/// doubled so that half-integer offsets elsewhere stay integral.
struct TruncatedComplex {
    std::vector<std::pair<int, int>> basis; // (generator index, i)
    std::vector<int> grading2;              // 2 * Maslov grading per basis element
    F2Matrix boundary;                      // columns index sources
    F2Matrix u_action;
    int truncation = 0;

    int size() const { return static_cast<int>(basis.size()); }
    int index_of(int gen, int i) const {
        auto it = index_.find({gen, i});
        return it == index_.end() ? -1 : it->second;
    }

    std::map<std::pair<int, int>, int> index_;
};

/// Smallest truncation level guaranteed safe for every operation on c:
/// twice the Alexander spread plus U-power reach, padded, and even so that
/// half of it is a usable tower-probe depth.
inline int auto_truncation(const CfkComplex& c) {
    return 2 * (c.max_abs_alexander() + c.max_upower()) + 4;
}

namespace trunc_detail {

/// Builds the sub-quotient with basis { (x, i) : 0 <= region(x, i) <= N }
/// where region is max(i, A(x) + i - s) for the s-indexed complex and plain i
/// for the target complex. The differential is inherited: terms landing
/// outside the region are dropped (quotient below, subcomplex above).
template <class RegionFn>
TruncatedComplex build_region(const CfkComplex& c, int n, RegionFn region) {
    if (n < auto_truncation(c))
        throw CfkError("truncation", "truncation level " + std::to_string(n) +
                                         " is below the safe floor " +
                                         std::to_string(auto_truncation(c)));
    TruncatedComplex t;
    t.truncation = n;
    const int span = n + c.max_abs_alexander() + 2;
    for (int g = 0; g < static_cast<int>(c.generators.size()); ++g) {
        for (int i = -span; i <= span; ++i) {
            const int m = region(g, i);
            if (m < 0 || m > n) continue;
            t.index_[{g, i}] = static_cast<int>(t.basis.size());
            t.basis.push_back({g, i});
            const auto& gen = c.generators[static_cast<std::size_t>(g)];
            t.grading2.push_back(static_cast<int>(2 * gen.maslov.num() + 4 * i));
        }
    }
    const int sz = t.size();
    t.boundary = F2Matrix(sz, sz);
    t.u_action = F2Matrix(sz, sz);
    for (int col = 0; col < sz; ++col) {
        const auto [g, i] = t.basis[static_cast<std::size_t>(col)];
        const std::string& id = c.generators[static_cast<std::size_t>(g)].id;
        for (const auto& term : c.differential) {
            if (term.from != id) continue;
            const int tgt = t.index_of(c.index_of(term.to), i - term.upower);
            if (tgt >= 0) t.boundary.add_at(tgt, col, F2(1));
        }
        const int below = t.index_of(g, i - 1);
        if (below >= 0) t.u_action.set(below, col, F2(1));
    }
    return t;
}

} // namespace trunc_detail

/// A_s^+ truncated at level n: basis positions with 0 <= max(i, A+i-s) <= n.
inline TruncatedComplex build_A_plus(const CfkComplex& c, int s, int n) {
    return trunc_detail::build_region(c, n, [&c, s](int g, int i) {
        const int j = c.generators[static_cast<std::size_t>(g)].alexander + i;
        return std::max(i, j - s);
    });
}

/// B^+ truncated at level n: basis positions with 0 <= i <= n.
inline TruncatedComplex build_B_plus(const CfkComplex& c, int n) {
    return trunc_detail::build_region(c, n, [](int, int i) { return i; });
}

/// The two surgery-formula chain maps out of A_s^+, as matrices from the
/// A-basis to the B-basis. v is the i >= 0 projection; h projects to j >= s,
/// multiplies by U^s and applies the flip isomorphism.
struct SurgeryPieces {
    TruncatedComplex a, b;
    F2Matrix v, h;
};

inline SurgeryPieces maps_v_h(const CfkComplex& c, int s, int n) {
    SurgeryPieces p;
    p.a = build_A_plus(c, s, n);
    p.b = build_B_plus(c, n);
    p.v = F2Matrix(p.b.size(), p.a.size());
    p.h = F2Matrix(p.b.size(), p.a.size());
    for (int col = 0; col < p.a.size(); ++col) {
        const auto [g, i] = p.a.basis[static_cast<std::size_t>(col)];
        const auto& gen = c.generators[static_cast<std::size_t>(g)];
        if (i >= 0) {
            const int tgt = p.b.index_of(g, i);
            if (tgt >= 0) p.v.set(tgt, col, F2(1));
        }
        const int j = gen.alexander + i;
        if (j - s >= 0) {
            const int sg = c.index_of(c.flip.at(gen.id));
            const int tgt = p.b.index_of(sg, j - s);
            if (tgt >= 0) p.h.set(tgt, col, F2(1));
        }
    }
    return p;
}

/// True when the s-indexed complex coincides with the target complex on the
/// nose (basis, boundary and U-action), as happens for s at or above the
/// Alexander spread.
inline bool a_equals_b(const TruncatedComplex& a, const TruncatedComplex& b) {
    return a.basis == b.basis && a.boundary == b.boundary && a.u_action == b.u_action;
}

} // namespace cfklab
