#pragma once

#include <string>
#include <vector>

#include "cfklab/surgery.hpp"

namespace cfklab {

/// Correction terms of the zero-surgery on a knot modeled by c, for both
/// orientations (minus entries describe the reversed manifold, i.e. the
/// zero-surgery on the mirror) and both coefficient systems, together with
/// the even-integer normalizations dtilde.
struct ZeroSurgeryProfile {
    std::string name;
    int v0 = 0;        // V_0 of the complex
    int v0_mirror = 0; // V_0 of the mirror complex
    Rational d_untwisted_plus, d_twisted_plus;
    Rational d_untwisted_minus, d_twisted_minus;
    Rational dtilde_untwisted_plus, dtilde_twisted_plus;
    Rational dtilde_untwisted_minus, dtilde_twisted_minus;
};

/// Zero-surgery correction terms from the V_0 pair:
///   d(untwisted) = -2 V_0 + 1/2,  d(twisted) = 2 V_0(mirror) - 1/2,
/// and the reversed manifold swaps the roles. The dtilde values shift by the
/// half-integer offsets and land in the even integers.
inline ZeroSurgeryProfile zero_surgery_profile(const CfkComplex& c, const ComputeOptions& opts = {}) {
    ZeroSurgeryProfile p;
    p.name = c.name;
    p.v0 = compute_V(c, 0, opts);
    p.v0_mirror = compute_V(mirror(c), 0, opts);
    const Rational half(1, 2);
    p.d_untwisted_plus = Rational(-2 * p.v0) + half;
    p.d_twisted_plus = Rational(2 * p.v0_mirror) - half;
    p.d_untwisted_minus = Rational(-2 * p.v0_mirror) + half;
    p.d_twisted_minus = Rational(2 * p.v0) - half;
    p.dtilde_untwisted_plus = p.d_untwisted_plus - half;
    p.dtilde_twisted_plus = p.d_twisted_plus + half;
    p.dtilde_untwisted_minus = p.d_untwisted_minus - half;
    p.dtilde_twisted_minus = p.d_twisted_minus + half;
    return p;
}

/// d-invariant of +1 or -1 surgery on the knot modeled by c.
inline Rational pm_one_surgery_d(const CfkComplex& c, int sign, const ComputeOptions& opts = {}) {
    if (sign == 1) return Rational(-2 * compute_V(c, 0, opts));
    if (sign == -1) return Rational(2 * compute_V(mirror(c), 0, opts));
    throw CfkError("usage", "surgery sign must be +1 or -1");
}

struct CheckEntry {
    std::string name;
    bool passed = false;
    std::string lhs, rhs;
};

struct CheckReport {
    std::vector<CheckEntry> entries;
    bool all_passed() const {
        for (const auto& e : entries)
            if (!e.passed) return false;
        return true;
    }
};

/// Independent cross-checks of a profile: the twisted cone route must agree
/// with the V_0 formula route for both orientations, the dtilde values must be
/// even integers, and the two reversal inequalities must hold.
inline CheckReport crosscheck_profile(const CfkComplex& c, const ComputeOptions& opts = {}) {
    const ZeroSurgeryProfile p = zero_surgery_profile(c, opts);
    CheckReport rep;
    auto add = [&rep](const std::string& name, bool passed, const std::string& lhs,
                      const std::string& rhs) {
        rep.entries.push_back({name, passed, lhs, rhs});
    };

    const Rational cone_plus = d_totally_twisted_zero_surgery(c, opts);
    add("twisted_cone_matches_formula", cone_plus == p.d_twisted_plus, cone_plus.str(),
        p.d_twisted_plus.str());
    const Rational cone_minus = d_totally_twisted_zero_surgery(mirror(c), opts);
    add("twisted_cone_matches_formula_reversed", cone_minus == p.d_twisted_minus, cone_minus.str(),
        p.d_twisted_minus.str());

    for (const auto& [name, value] :
         {std::pair<std::string, Rational>{"dtilde_untwisted_even", p.dtilde_untwisted_plus},
          {"dtilde_twisted_even", p.dtilde_twisted_plus},
          {"dtilde_untwisted_reversed_even", p.dtilde_untwisted_minus},
          {"dtilde_twisted_reversed_even", p.dtilde_twisted_minus}})
        add(name, value.is_even_integer(), value.str(), "even integer");

    const Rational twisted_sum = p.dtilde_twisted_plus + p.dtilde_twisted_minus;
    add("reversal_twisted_sum_nonnegative", twisted_sum >= Rational(0), twisted_sum.str(), ">= 0");
    const Rational untwisted_sum = p.dtilde_untwisted_plus + p.dtilde_untwisted_minus;
    add("reversal_untwisted_sum_nonpositive", untwisted_sum <= Rational(0), untwisted_sum.str(),
        "<= 0");
    return rep;
}

/// True when every zero-surgery correction term is orientation-symmetric,
/// equivalently V_0 vanishes for the complex and its mirror.
inline bool is_d_symmetric_zero_surgery(const CfkComplex& c, const ComputeOptions& opts = {}) {
    return compute_V(c, 0, opts) == 0 && compute_V(mirror(c), 0, opts) == 0;
}

/// The four correction terms of a 2-knot: the knot itself, its reverse, its
/// mirror, and its reversed mirror.
struct TwoKnotInvariants {
    Rational d_sigma, d_sigma_r, d_sigma_bar, d_sigma_bar_r;
};

/// Fibered 2-knot with fiber boundary of first Betti number b1: dp and dm are
/// the bottom-tower correction terms of the fiber boundary and its reverse.
inline TwoKnotInvariants fibered_two_knot(const Rational& dp, const Rational& dm, int b1) {
    const Rational shift(b1, 2);
    return {dp + shift, dm + shift, dp + shift, dm + shift};
}

/// 2-knot whose fiber is a rational homology sphere with correction term d.
inline TwoKnotInvariants qhs_fiber_two_knot(const Rational& d) {
    return {d, -d, d, -d};
}

struct ObstructionFlag {
    bool obstructed = false;
    std::string identity; // the symmetry identity being tested
    std::string lhs, rhs;
};

/// Obstructions read off a 2-knot invariant quadruple. Each flag is true when
/// the stated identity fails, i.e. the corresponding property is ruled out.
struct ObstructionReport {
    ObstructionFlag reversible;
    ObstructionFlag positive_amphichiral;
    ObstructionFlag negative_amphichiral;
    ObstructionFlag ribbon;
    ObstructionFlag d_symmetric_seifert;
    ObstructionFlag qhs_seifert;
};

inline ObstructionReport obstruction_report(const TwoKnotInvariants& q) {
    ObstructionReport rep;
    auto quad = [&q]() {
        return "(" + q.d_sigma.str() + ", " + q.d_sigma_r.str() + ", " + q.d_sigma_bar.str() +
               ", " + q.d_sigma_bar_r.str() + ")";
    };
    rep.reversible = {!(q.d_sigma == q.d_sigma_r), "d(K) = d(reverse K)", q.d_sigma.str(),
                      q.d_sigma_r.str()};
    rep.positive_amphichiral = {!(q.d_sigma == q.d_sigma_bar), "d(K) = d(mirror K)",
                                q.d_sigma.str(), q.d_sigma_bar.str()};
    rep.negative_amphichiral = {!(q.d_sigma == q.d_sigma_bar_r), "d(K) = d(reversed mirror K)",
                                q.d_sigma.str(), q.d_sigma_bar_r.str()};
    const bool all_zero = q.d_sigma == Rational(0) && q.d_sigma_r == Rational(0) &&
                          q.d_sigma_bar == Rational(0) && q.d_sigma_bar_r == Rational(0);
    rep.ribbon = {!all_zero, "all four invariants vanish", quad(), "(0, 0, 0, 0)"};
    const bool dsym = q.d_sigma == -q.d_sigma_bar_r && q.d_sigma_r == -q.d_sigma_bar;
    rep.d_symmetric_seifert = {!dsym, "d(K) = -d(reversed mirror K) and d(reverse K) = -d(mirror K)",
                               quad(), "antisymmetric quadruple"};
    const bool qhs = q.d_sigma_r == -q.d_sigma && q.d_sigma_bar == q.d_sigma &&
                     q.d_sigma_bar_r == -q.d_sigma;
    rep.qhs_seifert = {!qhs, "quadruple has the form (d, -d, d, -d)", quad(),
                       "(d, -d, d, -d)"};
    return rep;
}

/// Published reference values shipped for comparison; not computed here.
struct ReferenceEntry {
    std::string name;
    TwoKnotInvariants values;
    std::string note;
};

inline const std::vector<ReferenceEntry>& reference_constants() {
    static const std::vector<ReferenceEntry> table = {
        {"five_twist_spin_trefoil",
         {Rational(2), Rational(-2), Rational(2), Rational(-2)},
         "fiber is the Poincare sphere; obstructs reversibility and negative amphichirality"},
        {"six_twist_spin_trefoil",
         {Rational(0), Rational(-2), Rational(0), Rational(-2)},
         "fiber boundary is zero-surgery on the trefoil; rules out an orientation-symmetric "
         "correction-term Seifert solid torus"},
        {"yanagawa_ribbon_sphere",
         {Rational(0), Rational(0), Rational(0), Rational(0)},
         "ribbon 2-knot; all four invariants vanish"},
    };
    return table;
}

} // namespace cfklab
