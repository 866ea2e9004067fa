#include <doctest.h>

#include <algorithm>

#include "cfklab/homology.hpp"
#include "cfklab/surgery.hpp"

using namespace cfklab;

namespace {

bool has_bottom(const GradedModuleSummary& s, const Rational& r) {
    return std::find(s.tower_bottoms.begin(), s.tower_bottoms.end(), r) != s.tower_bottoms.end();
}

} // namespace

TEST_CASE("V_0 values for the catalog") {
    CHECK(compute_V(catalog_get("unknot"), 0) == 0);
    CHECK(compute_V(catalog_get("trefoil_right"), 0) == 1);
    CHECK(compute_V(catalog_get("trefoil_left"), 0) == 0);
    CHECK(compute_V(catalog_get("figure8"), 0) == 0);
    CHECK(compute_V(catalog_get("whitehead_double_trefoil_model"), 0) == 1);
    CHECK(compute_V(mirror(catalog_get("whitehead_double_trefoil_model")), 0) == 0);
}

TEST_CASE("V_s vanishes at and beyond the genus for staircases") {
    const auto c = catalog_get("trefoil_right");
    CHECK(compute_V(c, 1) == 0);
    CHECK(compute_V(c, 3) == 0);
    // The (2,5) torus knot staircase has V_0 = 1, V_1 = 1, V_2 = 0.
    const auto t25 = staircase({1, 1, 1, 1});
    CHECK(compute_V(t25, 0) == 1);
    CHECK(compute_V(t25, 1) == 1);
    CHECK(compute_V(t25, 2) == 0);
}

TEST_CASE("connected sums of positive staircases keep V_0 positive") {
    const auto t = catalog_get("trefoil_right");
    const auto tt = tensor(t, t);
    CHECK(compute_V(tt, 0) == 1);
    CHECK(compute_V(mirror(tt), 0) == 0);
    // Trefoil # mirror trefoil is slice-like at this level: V_0 = 0 both ways.
    const auto tm = tensor(t, catalog_get("trefoil_left"));
    CHECK(compute_V(tm, 0) == 0);
    CHECK(compute_V(mirror(tm), 0) == 0);
}

TEST_CASE("twisted cone correction terms") {
    CHECK(d_totally_twisted_zero_surgery(catalog_get("unknot")) == Rational(-1, 2));
    CHECK(d_totally_twisted_zero_surgery(catalog_get("trefoil_right")) == Rational(-1, 2));
    CHECK(d_totally_twisted_zero_surgery(catalog_get("trefoil_left")) == Rational(3, 2));
    CHECK(d_totally_twisted_zero_surgery(catalog_get("figure8")) == Rational(-1, 2));
}

TEST_CASE("unknot cone homology: one twisted tower, two untwisted towers") {
    const auto c = catalog_get("unknot");
    const int n = auto_truncation(c);

    const auto twisted = cone_homology(build_cone(c, 0, CoefficientMode::twisted, n));
    CHECK(twisted.tower_bottoms.size() == 1);
    CHECK(has_bottom(twisted, Rational(-1, 2)));
    // The tower levels are copies of Laurent/(1 + t): one invariant factor of
    // support width 1.
    const auto& inv = twisted.invariants_by_grading2.at(-1);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == LaurentPoly::from_exponents({0, 1}));
    CHECK(twisted.free_rank_by_grading2.at(-1) == 0);

    const auto untwisted = cone_homology(build_cone(c, 0, CoefficientMode::untwisted, n));
    CHECK(untwisted.tower_bottoms.size() == 2);
    CHECK(has_bottom(untwisted, Rational(-1, 2)));
    CHECK(has_bottom(untwisted, Rational(1, 2)));
}

TEST_CASE("trefoil cone homology towers") {
    const auto c = catalog_get("trefoil_right");
    const int n = auto_truncation(c);
    const auto twisted = cone_homology(build_cone(c, 0, CoefficientMode::twisted, n));
    CHECK(twisted.tower_bottoms.size() == 1);
    CHECK(has_bottom(twisted, Rational(-1, 2)));
    const auto untwisted = cone_homology(build_cone(c, 0, CoefficientMode::untwisted, n));
    CHECK(untwisted.tower_bottoms.size() == 2);
    CHECK(has_bottom(untwisted, Rational(-3, 2)));
    CHECK(has_bottom(untwisted, Rational(-1, 2)));
}

TEST_CASE("left trefoil untwisted towers sit at 1/2 and 3/2") {
    const auto c = catalog_get("trefoil_left");
    const auto untwisted = cone_homology(build_cone(c, 0, CoefficientMode::untwisted, auto_truncation(c)));
    CHECK(untwisted.tower_bottoms.size() == 2);
    CHECK(has_bottom(untwisted, Rational(1, 2)));
    CHECK(has_bottom(untwisted, Rational(3, 2)));
}

TEST_CASE("raw twisted complex: worked example gives -1/2") {
    const auto r = twisted_example_complex();
    CHECK(twisted_complex_d(r) == Rational(-1, 2));
    // A deeper truncation agrees.
    ComputeOptions opts;
    opts.truncation = 2 * auto_truncation(r);
    opts.stability_rounds = 3;
    CHECK(twisted_complex_d(r, opts) == Rational(-1, 2));
}

TEST_CASE("raw twisted complex at t = 1 would instead bottom out at 3/2") {
    // The untwisted reading of the worked example: substitute t = 1, i.e.
    // keep only odd-support coefficients. The surviving differential is
    // db = U d; towers bottom at 3/2 (from c) and 1/2 (from d)... the minimal
    // U-stable grading is 1/2. The point of the example is that the twisted
    // answer -1/2 differs from every untwisted bottom.
    RawTwistedComplex r = twisted_example_complex();
    for (auto& t : r.terms) t.poly = t.poly.eval_at_one() ? LaurentPoly::one() : LaurentPoly::zero();
    r.terms.erase(std::remove_if(r.terms.begin(), r.terms.end(),
                                 [](const auto& t) { return t.poly.is_zero(); }),
                  r.terms.end());
    const Rational d_untwisted = twisted_complex_d(r);
    CHECK(d_untwisted != Rational(-1, 2));
}

TEST_CASE("raw twisted complex validation") {
    RawTwistedComplex r = twisted_example_complex();
    SUBCASE("grading law") {
        r.generators[1].grading = Rational(5, 2);
        CHECK_THROWS_AS(validate_raw_twisted(r), CfkError);
    }
    SUBCASE("d squared") {
        RawTwistedComplex bad;
        bad.generators = {{"x", Rational(1)}, {"y", Rational(0)}, {"z", Rational(-1)}};
        bad.terms = {{"x", "y", 0, LaurentPoly::one()}, {"y", "z", 0, LaurentPoly::one()}};
        CHECK_THROWS_AS(validate_raw_twisted(bad), CfkError);
    }
    SUBCASE("negative upower") {
        r.terms[0].upower = -1;
        CHECK_THROWS_AS(validate_raw_twisted(r), CfkError);
    }
}

TEST_CASE("raw twisted parser") {
    const std::string good = R"({
      "name": "example",
      "generators": [{"id": "a", "grading": "1/2"}, {"id": "b", "grading": "-1/2"},
                     {"id": "c", "grading": "3/2"}, {"id": "d", "grading": "1/2"}],
      "differential": [
        {"from": "a", "to": "b", "upower": 0, "poly": [0, 2]},
        {"from": "a", "to": "c", "upower": 1, "poly": [0, 1]},
        {"from": "b", "to": "d", "upower": 1, "poly": [0]},
        {"from": "c", "to": "d", "upower": 0, "poly": [0, 1]}
      ]
    })";
    const auto r = parse_raw_twisted(good);
    CHECK(r.generators.size() == 4);
    CHECK(twisted_complex_d(r) == Rational(-1, 2));

    CHECK_THROWS_AS(parse_raw_twisted("{"), CfkError);
    CHECK_THROWS_AS(parse_raw_twisted(R"({"generators": [], "differential": 1})"), CfkError);
}

TEST_CASE("stability machinery") {
    // A fake operation whose answer depends on N fails certification.
    CHECK_THROWS_AS(stability_run([](int n) { return Rational(n); }, 4, 2), CfkError);
    const auto ok = stability_run([](int) { return Rational(7); }, 4, 3);
    CHECK(ok.value == Rational(7));
    CHECK(ok.certificate.truncations == std::vector<int>{4, 8, 16});
    CHECK(ok.certificate.agreed);
    CHECK_THROWS_AS(stability_run([](int) { return Rational(0); }, 4, 0), CfkError);
}

TEST_CASE("truncation override below the floor is rejected") {
    ComputeOptions opts;
    opts.truncation = 2;
    CHECK_THROWS_AS(compute_V(catalog_get("trefoil_right"), 0, opts), CfkError);
    CHECK_THROWS_AS(twisted_complex_d(twisted_example_complex(), opts), CfkError);
}
