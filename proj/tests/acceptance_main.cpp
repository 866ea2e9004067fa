// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "cfklab/gf2_linalg.hpp"
#include "cfklab/homology.hpp"
#include "cfklab/invariants.hpp"
#include "cfklab/laurent_linalg.hpp"

using namespace cfklab;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << note << "\n";
    if (!ok) ++failures;
}

bool trefoil_table() {
    const auto p = zero_surgery_profile(catalog_get("trefoil_right"));
    return p.d_untwisted_plus == Rational(-3, 2) && p.dtilde_untwisted_plus == Rational(-2) &&
           p.d_twisted_plus == Rational(-1, 2) && p.dtilde_twisted_plus == Rational(0) &&
           p.d_untwisted_minus == Rational(1, 2) && p.dtilde_untwisted_minus == Rational(0) &&
           p.d_twisted_minus == Rational(3, 2) && p.dtilde_twisted_minus == Rational(2);
}

bool unknot_table() {
    const auto p = zero_surgery_profile(catalog_get("unknot"));
    return p.d_untwisted_plus == Rational(1, 2) && p.d_twisted_plus == Rational(-1, 2) &&
           p.dtilde_untwisted_plus == Rational(0) && p.dtilde_twisted_plus == Rational(0) &&
           p.dtilde_untwisted_minus == Rational(0) && p.dtilde_twisted_minus == Rational(0);
}

bool v0_values() {
    return compute_V(catalog_get("trefoil_right"), 0) == 1 &&
           compute_V(catalog_get("trefoil_left"), 0) == 0 &&
           compute_V(catalog_get("unknot"), 0) == 0 &&
           compute_V(catalog_get("whitehead_double_trefoil_model"), 0) == 1 &&
           compute_V(mirror(catalog_get("whitehead_double_trefoil_model")), 0) == 0;
}

bool whitehead_matches_trefoil() {
    auto a = zero_surgery_profile(catalog_get("whitehead_double_trefoil_model"));
    auto b = zero_surgery_profile(catalog_get("trefoil_right"));
    return a.v0 == b.v0 && a.v0_mirror == b.v0_mirror &&
           a.d_untwisted_plus == b.d_untwisted_plus && a.d_twisted_plus == b.d_twisted_plus &&
           a.d_untwisted_minus == b.d_untwisted_minus && a.d_twisted_minus == b.d_twisted_minus &&
           a.dtilde_untwisted_plus == b.dtilde_untwisted_plus &&
           a.dtilde_twisted_plus == b.dtilde_twisted_plus &&
           a.dtilde_untwisted_minus == b.dtilde_untwisted_minus &&
           a.dtilde_twisted_minus == b.dtilde_twisted_minus;
}

bool cone_vs_formula() {
    for (const auto& name : catalog_names()) {
        const CfkComplex c = catalog_get(name);
        for (const CfkComplex& side : {c, mirror(c)}) {
            const Rational cone = d_totally_twisted_zero_surgery(side);
            const Rational formula = Rational(2 * compute_V(mirror(side), 0)) - Rational(1, 2);
            if (cone != formula) return false;
        }
    }
    return true;
}

bool figure1_regression() {
    return twisted_complex_d(twisted_example_complex()) == Rational(-1, 2);
}

bool parity_and_reversal() {
    for (const auto& name : catalog_names()) {
        const auto p = zero_surgery_profile(catalog_get(name));
        for (const Rational& v : {p.dtilde_untwisted_plus, p.dtilde_twisted_plus,
                                  p.dtilde_untwisted_minus, p.dtilde_twisted_minus})
            if (!v.is_even_integer()) return false;
        if (!(p.dtilde_twisted_plus + p.dtilde_twisted_minus >= Rational(0))) return false;
        if (!(p.dtilde_untwisted_plus + p.dtilde_untwisted_minus <= Rational(0))) return false;
    }
    return true;
}

bool twist_spin_pipeline() {
    const Rational d = pm_one_surgery_d(catalog_get("trefoil_left"), -1);
    if (d != Rational(2)) return false;
    const auto q = qhs_fiber_two_knot(d);
    if (!(q.d_sigma == Rational(2) && q.d_sigma_r == Rational(-2) &&
          q.d_sigma_bar == Rational(2) && q.d_sigma_bar_r == Rational(-2)))
        return false;
    const auto rep = obstruction_report(q);
    return rep.reversible.obstructed && rep.negative_amphichiral.obstructed;
}

bool d_symmetric_criteria() {
    if (!is_d_symmetric_zero_surgery(catalog_get("unknot"))) return false;
    if (!is_d_symmetric_zero_surgery(catalog_get("figure8"))) return false;
    if (is_d_symmetric_zero_surgery(catalog_get("trefoil_right"))) return false;
    const auto rep =
        obstruction_report({Rational(0), Rational(-2), Rational(0), Rational(-2)});
    return rep.d_symmetric_seifert.obstructed;
}

std::vector<int> random_steps(std::mt19937& rng) {
    std::uniform_int_distribution<int> half_len(1, 3), step(1, 3);
    const int n = half_len(rng);
    std::vector<int> half;
    for (int i = 0; i < n; ++i) half.push_back(step(rng));
    std::vector<int> steps = half;
    for (int i = n - 1; i >= 0; --i) steps.push_back(half[static_cast<std::size_t>(i)]);
    return steps;
}

LaurentMatrix random_laurent_matrix(std::mt19937& rng, int rows, int cols) {
    std::uniform_int_distribution<int> lo(-2, 1), width(0, 3);
    std::bernoulli_distribution keep(0.6), coin(0.5);
    LaurentMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (!keep(rng)) continue;
            const int a = lo(rng);
            std::vector<int> exps;
            for (int e = a; e <= a + width(rng); ++e)
                if (coin(rng)) exps.push_back(e);
            const LaurentPoly p = LaurentPoly::from_exponents(exps);
            if (!p.is_zero()) m.set(i, j, p);
        }
    return m;
}

bool property_suite() {
    std::mt19937 rng(1234567u);
    int cases = 0;

    // SNF reassembly on random Laurent matrices.
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 30; ++trial, ++cases) {
        const int rows = dim(rng), cols = dim(rng);
        const LaurentMatrix m = random_laurent_matrix(rng, rows, cols);
        const auto s = laurent_snf(m);
        if (!(s.left * m * s.right == s.diagonal(rows, cols))) return false;
        if (!(s.left_inv * s.diagonal(rows, cols) * s.right_inv == m)) return false;
    }

    // Staircases and tensor products: validity, mirror, V_0 >= 0, stability.
    for (int trial = 0; trial < 40; ++trial, ++cases) {
        const CfkComplex c = staircase(random_steps(rng));
        if (!validate(c).ok() || !validate(mirror(c)).ok()) return false;
        if (compute_V(c, 0) < 0 || compute_V(mirror(c), 0) < 0) return false;
    }
    for (int trial = 0; trial < 10; ++trial, ++cases) {
        std::uniform_int_distribution<int> step(1, 2);
        const int s = step(rng);
        const CfkComplex t = tensor(staircase({s, s}), mirror(catalog_get("trefoil_right")));
        if (!validate(t).ok()) return false;
        if (compute_V(t, 0) < 0) return false;
    }

    // Stable-window shape of the cone homology.
    for (int trial = 0; trial < 20; ++trial, ++cases) {
        const CfkComplex c = staircase(random_steps(rng));
        const int n = auto_truncation(c);
        const int k = n / 2;
        const auto tw = cone_homology(build_cone(c, 0, CoefficientMode::twisted, n));
        if (tw.tower_bottoms.size() != 1) return false;
        const int bottom2 = static_cast<int>((tw.tower_bottoms[0] * Rational(2)).num());
        for (int g2 = bottom2 + 1; g2 <= bottom2 + 4 * (k - 1); ++g2) {
            const auto it = tw.dim_by_grading2.find(g2);
            const int d = it == tw.dim_by_grading2.end() ? 0 : it->second;
            if (d != ((g2 - bottom2) % 4 == 0 ? 1 : 0)) return false;
        }
        const auto un = cone_homology(build_cone(c, 0, CoefficientMode::untwisted, n));
        if (un.tower_bottoms.empty()) return false;
        const int tb2 = static_cast<int>((un.tower_bottoms.back() * Rational(2)).num());
        for (int g2 = tb2; g2 <= tb2 + 4 * (k - 1); ++g2) {
            const auto it = un.dim_by_grading2.find(g2);
            if ((it == un.dim_by_grading2.end() ? 0 : it->second) > 2) return false;
        }
    }

    // N-doubling stability certificates on the catalog.
    for (const auto& name : catalog_names()) {
        ++cases;
        const CfkComplex c = catalog_get(name);
        ComputeOptions opts;
        opts.stability_rounds = 3;
        d_totally_twisted_zero_surgery(c, opts); // throws if any round disagrees
    }

    return cases >= 100;
}

} // namespace

int main() {
    criterion(1, "right trefoil zero-surgery correction-term table", trefoil_table);
    criterion(2, "unknot zero-surgery (product manifold) values", unknot_table);
    criterion(3, "V_0 values across the catalog", v0_values);
    criterion(4, "acyclic summand leaves the profile unchanged", whitehead_matches_trefoil);
    criterion(5, "mapping-cone route agrees with the V_0 formula route", cone_vs_formula);
    criterion(6, "worked twisted-complex example returns -1/2", figure1_regression);
    criterion(7, "even-integer parity and reversal inequalities", parity_and_reversal);
    criterion(8, "twist-spin pipeline obstructs reversibility", twist_spin_pipeline);
    criterion(9, "d-symmetric predicate and Seifert obstruction", d_symmetric_criteria);
    criterion(10, "randomized property suite (>= 100 cases)", property_suite);
    return failures == 0 ? 0 : 1;
}
