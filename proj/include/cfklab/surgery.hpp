#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cfklab/cfk_io.hpp"
#include "cfklab/homology.hpp"

namespace cfklab {

struct ComputeOptions {
    std::optional<int> truncation;  // override; never below the safe floor
    int stability_rounds = 2;       // number of truncation levels compared (N, 2N, ...)
};

struct StabilityCertificate {
    std::vector<int> truncations;
    std::vector<Rational> values;
    bool agreed = true;
};

template <class T>
struct StableValue {
    T value{};
    StabilityCertificate certificate;
};

/// Runs op at truncation levels n0, 2*n0, ... and insists the answers agree.
/// Disagreement is an error: the caller asked for a certified value.
template <class Op>
StableValue<Rational> stability_run(Op&& op, int n0, int rounds) {
    if (rounds < 1) throw CfkError("stability", "stability rounds must be at least 1");
    StableValue<Rational> out;
    int n = n0;
    for (int r = 0; r < rounds; ++r, n *= 2) {
        const Rational v = op(n);
        out.certificate.truncations.push_back(n);
        out.certificate.values.push_back(v);
        if (r == 0) out.value = v;
        else if (!(v == out.value)) out.certificate.agreed = false;
    }
    if (!out.certificate.agreed)
        throw CfkError("stability", "value did not stabilize under truncation doubling");
    return out;
}

namespace surgery_detail {

inline int start_truncation(const CfkComplex& c, const ComputeOptions& opts) {
    const int floor = auto_truncation(c);
    if (!opts.truncation) return floor;
    if (*opts.truncation < floor)
        throw CfkError("truncation", "requested truncation " + std::to_string(*opts.truncation) +
                                         " is below the safe floor " + std::to_string(floor));
    // Keep the level even so the probe depth N/2 stays integral.
    return *opts.truncation % 2 == 0 ? *opts.truncation : *opts.truncation + 1;
}

/// Single-truncation computation of the non-negativity defect of v_s on
/// U-towers: the number of tower levels of the s-indexed complex killed by v.
inline int compute_v_once(const CfkComplex& c, int s, int n) {
    const SurgeryPieces p = maps_v_h(c, s, n);
    const auto xa = as_graded(p.a);
    const auto xb = as_graded(p.b);
    const int k = n / 2;
    const auto bottom = min_tower_grading2(xa, k);
    if (!bottom)
        throw CfkError("stability", "no U-tower detected in the s-indexed complex");
    for (int g2 = *bottom; g2 <= *bottom + 4 * k; g2 += 4) {
        const auto bnd = homology_detail::boundaries_into(xb, g2);
        const auto slice_b = xb.slice(g2);
        for (auto z : homology_detail::cycles_at(xa, g2 + 4 * k)) {
            for (int step = 0; step < k; ++step) z = p.a.u_action.apply(z);
            const F2Vec vz = p.v.apply(z);
            bool stray = false;
            const F2Vec w = homology_detail::restrict_to(vz, slice_b, stray);
            if (stray) throw std::logic_error("v image escaped its grading slice");
            if (!matrix_in_span(bnd, w)) return (g2 - *bottom) / 4;
        }
    }
    throw CfkError("stability", "v annihilates every detected tower level");
}

} // namespace surgery_detail

/// V_s invariant: v_s equals U^{V_s} on U-towers. Certified stable under
/// truncation doubling.
inline int compute_V(const CfkComplex& c, int s, const ComputeOptions& opts = {}) {
    const auto stable = stability_run(
        [&](int n) { return Rational(surgery_detail::compute_v_once(c, s, n)); },
        surgery_detail::start_truncation(c, opts), opts.stability_rounds);
    return static_cast<int>(stable.value.num());
}

/// Correction term of the totally twisted zero-surgery: minimal grading of a
/// U-stable class in the homology of the twisted mapping cone at s = 0.
inline Rational d_totally_twisted_zero_surgery(const CfkComplex& c, const ComputeOptions& opts = {}) {
    const auto stable = stability_run(
        [&](int n) {
            const ConeComplex cone = build_cone(c, 0, CoefficientMode::twisted, n);
            const auto x = cone_twisted_complex(cone);
            const auto g2 = min_tower_grading2(x, n / 2);
            if (!g2) throw CfkError("stability", "no U-tower detected in the twisted cone");
            return Rational(*g2, 2);
        },
        surgery_detail::start_truncation(c, opts), opts.stability_rounds);
    return stable.value;
}

/// A twisted chain complex given directly by generators and a differential
/// with Laurent-polynomial coefficients and U-powers, rather than through the
/// surgery formula.
struct RawTwistedComplex {
    struct Gen {
        std::string id;
        Rational grading;
    };
    struct Term {
        std::string from, to;
        int upower = 0;
        LaurentPoly poly;
    };
    std::string name;
    std::vector<Gen> generators;
    std::vector<Term> terms;

    int index_of(const std::string& id) const {
        for (int i = 0; i < static_cast<int>(generators.size()); ++i)
            if (generators[static_cast<std::size_t>(i)].id == id) return i;
        throw CfkError("unknown-id", "unknown generator id '" + id + "'");
    }

    int max_upower() const {
        int m = 0;
        for (const auto& t : terms) m = std::max(m, t.upower);
        return m;
    }
    int max_poly_width() const {
        int m = 0;
        for (const auto& t : terms)
            if (!t.poly.is_zero()) m = std::max(m, t.poly.width());
        return m;
    }
};

/// Structural checks: gradings drop by one (after U-powers), U-powers are
/// non-negative, and d^2 = 0 over the Laurent ring.
inline void validate_raw_twisted(const RawTwistedComplex& r) {
    for (const auto& g : r.generators)
        if (g.grading.den() > 2)
            throw CfkError("grading-law", "generator '" + g.id + "' has grading " + g.grading.str() +
                                              " outside (1/2)Z");
    for (const auto& t : r.terms) {
        const auto& from = r.generators[static_cast<std::size_t>(r.index_of(t.from))];
        const auto& to = r.generators[static_cast<std::size_t>(r.index_of(t.to))];
        const std::string label = "(" + t.from + " -> " + t.to + ")";
        if (t.upower < 0)
            throw CfkError("filtration", "term " + label + " has negative U-power");
        if (!(to.grading - Rational(2 * t.upower) == from.grading - Rational(1)))
            throw CfkError("grading-law", "term " + label + " breaks the grading law");
    }
    // d^2 entries live in GF(2)[t, t^-1][U]; collect by (source, target, U-power).
    std::map<std::tuple<int, int, int>, LaurentPoly> square;
    for (const auto& t1 : r.terms)
        for (const auto& t2 : r.terms) {
            if (t2.from != t1.to) continue;
            auto key = std::make_tuple(r.index_of(t1.from), r.index_of(t2.to), t1.upower + t2.upower);
            square[key] += t1.poly * t2.poly;
        }
    for (const auto& [key, p] : square)
        if (!p.is_zero())
            throw CfkError("d2", "d^2 is nonzero on generator '" +
                                     r.generators[static_cast<std::size_t>(std::get<0>(key))].id + "'");
}

inline int auto_truncation(const RawTwistedComplex& r) {
    return 2 * (r.max_upower() + r.max_poly_width()) + 4;
}

/// Plus-flavored truncation of a raw twisted complex: U-translates (x, i) for
/// 0 <= i <= n, with terms falling below the floor dropped.
inline GradedChainComplex<LaurentPoly> build_raw_twisted(const RawTwistedComplex& r, int n) {
    const int ng = static_cast<int>(r.generators.size());
    GradedChainComplex<LaurentPoly> x;
    auto idx = [&](int g, int i) { return g * (n + 1) + i; };
    for (int g = 0; g < ng; ++g)
        for (int i = 0; i <= n; ++i) {
            const Rational grading = r.generators[static_cast<std::size_t>(g)].grading + Rational(2 * i);
            x.grading2.push_back(static_cast<int>(grading.num() * (2 / grading.den())));
        }
    const int sz = ng * (n + 1);
    x.d = LaurentMatrix(sz, sz);
    x.u = LaurentMatrix(sz, sz);
    for (const auto& t : r.terms) {
        const int from = r.index_of(t.from), to = r.index_of(t.to);
        for (int i = t.upower; i <= n; ++i)
            x.d.add_at(idx(to, i - t.upower), idx(from, i), t.poly);
    }
    for (int g = 0; g < ng; ++g)
        for (int i = 1; i <= n; ++i)
            x.u.set(idx(g, i - 1), idx(g, i), LaurentPoly::one());
    return x;
}

/// Correction term of a raw twisted complex, certified stable.
inline Rational twisted_complex_d(const RawTwistedComplex& r, const ComputeOptions& opts = {}) {
    validate_raw_twisted(r);
    int n0 = auto_truncation(r);
    if (opts.truncation) {
        if (*opts.truncation < n0)
            throw CfkError("truncation", "requested truncation " + std::to_string(*opts.truncation) +
                                             " is below the safe floor " + std::to_string(n0));
        n0 = *opts.truncation % 2 == 0 ? *opts.truncation : *opts.truncation + 1;
    }
    const auto stable = stability_run(
        [&](int n) {
            const auto x = build_raw_twisted(r, n);
            const auto g2 = min_tower_grading2(x, n / 2);
            if (!g2) throw CfkError("stability", "no U-tower detected in the twisted complex");
            return Rational(*g2, 2);
        },
        n0, opts.stability_rounds);
    return stable.value;
}

/// Parses the raw twisted complex JSON format: generators with rational
/// gradings and differential terms carrying a t-exponent list and a U-power.
inline RawTwistedComplex parse_raw_twisted(const std::string& text) {
    namespace d = io_detail;
    d::json j;
    try {
        j = d::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = d::line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw CfkError("syntax", "JSON syntax error at line " + std::to_string(line) +
                                     ", column " + std::to_string(col));
    }
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array() ||
        !j.contains("differential") || !j["differential"].is_array())
        throw CfkError("syntax", "twisted complex needs 'generators' and 'differential' arrays");
    RawTwistedComplex r;
    if (j.contains("name") && j["name"].is_string()) r.name = j["name"].get<std::string>();
    std::set<std::string> ids;
    for (const auto& g : j["generators"]) {
        if (!g.is_object() || !g.contains("id") || !g["id"].is_string() || !g.contains("grading"))
            throw CfkError("syntax", "each generator needs string 'id' and 'grading'");
        const std::string id = g["id"].get<std::string>();
        if (!ids.insert(id).second)
            throw CfkError("duplicate-id", "generator id '" + id + "' appears twice");
        r.generators.push_back({id, d::parse_grading(g["grading"], "generator '" + id + "'")});
    }
    for (const auto& t : j["differential"]) {
        if (!t.is_object() || !t.contains("from") || !t["from"].is_string() ||
            !t.contains("to") || !t["to"].is_string() ||
            !t.contains("upower") || !t["upower"].is_number_integer() ||
            !t.contains("poly") || !t["poly"].is_array())
            throw CfkError("syntax",
                           "each term needs 'from', 'to', integer 'upower' and 'poly' exponent array");
        RawTwistedComplex::Term term;
        term.from = t["from"].get<std::string>();
        term.to = t["to"].get<std::string>();
        term.upower = t["upower"].get<int>();
        if (!ids.count(term.from) || !ids.count(term.to))
            throw CfkError("unknown-id", "term (" + term.from + " -> " + term.to +
                                             ") names an unknown generator");
        std::vector<int> exps;
        for (const auto& e : t["poly"]) {
            if (!e.is_number_integer())
                throw CfkError("syntax", "poly exponents must be integers");
            exps.push_back(e.get<int>());
        }
        term.poly = LaurentPoly::from_exponents(std::move(exps));
        if (!term.poly.is_zero()) r.terms.push_back(std::move(term));
    }
    validate_raw_twisted(r);
    return r;
}

/// The worked example of a totally twisted zero-surgery complex whose twisted
/// correction term (-1/2) differs from the untwisted tower bottom (3/2):
/// four generators, differential
///   da = (1 + t^2) b + (1 + t) U c,  db = U d,  dc = (1 + t) d.
inline RawTwistedComplex twisted_example_complex() {
    RawTwistedComplex r;
    r.name = "twisted_example";
    r.generators = {{"a", Rational(1, 2)}, {"b", Rational(-1, 2)},
                    {"c", Rational(3, 2)}, {"d", Rational(1, 2)}};
    r.terms = {{"a", "b", 0, LaurentPoly::from_exponents({0, 2})},
               {"a", "c", 1, LaurentPoly::from_exponents({0, 1})},
               {"b", "d", 1, LaurentPoly::one()},
               {"c", "d", 0, LaurentPoly::from_exponents({0, 1})}};
    return r;
}

} // namespace cfklab
