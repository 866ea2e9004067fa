#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfklab/gf2_linalg.hpp"
#include "cfklab/rational.hpp"

namespace cfklab {

/// Error with a machine-readable kind alongside the human-readable message.
struct CfkError : std::runtime_error {
    std::string kind;
    CfkError(std::string k, const std::string& msg)
        : std::runtime_error(msg), kind(std::move(k)) {}
};

/// Generator of a finitely generated knot Floer complex, in its canonical
/// position: Maslov grading and Alexander grading of the representative with
/// i = 0.
struct Generator {
    std::string id;
    Rational maslov;
    int alexander = 0;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// One term of the differential: from -> U^upower * to.
struct DiffTerm {
    std::string from, to;
    int upower = 0;

    friend bool operator==(const DiffTerm&, const DiffTerm&) = default;
    friend bool operator<(const DiffTerm& a, const DiffTerm& b) {
        return std::tie(a.from, a.to, a.upower) < std::tie(b.from, b.to, b.upower);
    }
};

struct ValidationIssue {
    std::string kind;    // stable machine-readable tag
    std::string message; // names the offending element
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// A finitely generated knot Floer complex together with its flip involution.
/// The involution is stored as an id -> id map covering every generator
/// (fixed points included).
struct CfkComplex {
    std::string name;
    std::vector<Generator> generators;
    std::vector<DiffTerm> differential;
    std::map<std::string, std::string> flip;

    int index_of(const std::string& id) const {
        for (int i = 0; i < static_cast<int>(generators.size()); ++i)
            if (generators[static_cast<std::size_t>(i)].id == id) return i;
        throw CfkError("unknown-id", "unknown generator id '" + id + "'");
    }
    const Generator& gen(const std::string& id) const {
        return generators[static_cast<std::size_t>(index_of(id))];
    }

    int max_abs_alexander() const {
        int m = 0;
        for (const auto& g : generators) m = std::max(m, std::abs(g.alexander));
        return m;
    }
    int max_upower() const {
        int m = 0;
        for (const auto& t : differential) m = std::max(m, t.upower);
        return m;
    }
};

namespace detail {

/// Formal GF(2) sum of pairs (generator id, U-exponent), used to compare
/// compositions of chain maps on canonical generators.
using FormalSum = std::set<std::pair<std::string, int>>;

inline void toggle(FormalSum& s, const std::string& id, int upower) {
    auto key = std::make_pair(id, upower);
    auto it = s.find(key);
    if (it == s.end()) s.insert(key); else s.erase(it);
}

} // namespace detail

/// Structural and homological validation. Checks, in order: id hygiene, flip
/// involution well-formedness and grading laws, differential grading and
/// filtration laws, d^2 = 0, flip compatibility with the differential, and
/// rank 1 of the U-inverted homology with the surviving tower in even
/// Maslov gradings.
inline ValidationReport validate(const CfkComplex& c) {
    ValidationReport rep;
    auto fail = [&rep](const std::string& kind, const std::string& msg) {
        rep.issues.push_back({kind, msg});
    };

    std::set<std::string> ids;
    for (const auto& g : c.generators) {
        if (!ids.insert(g.id).second)
            fail("duplicate-id", "generator id '" + g.id + "' appears twice");
        if (!g.maslov.is_integer())
            fail("grading-law", "generator '" + g.id + "' has non-integer Maslov grading " + g.maslov.str());
    }
    if (!rep.ok()) return rep;
    if (c.generators.empty()) {
        fail("rank", "complex has no generators");
        return rep;
    }

    bool structure_ok = true;
    for (const auto& [a, b] : c.flip) {
        if (!ids.count(a) || !ids.count(b)) {
            fail("unknown-id", "flip pair (" + a + ", " + b + ") names an unknown generator");
            structure_ok = false;
        }
    }
    for (const auto& id : ids) {
        auto it = c.flip.find(id);
        if (it == c.flip.end()) {
            fail("flip-law", "flip involution does not cover generator '" + id + "'");
            structure_ok = false;
            continue;
        }
        auto back = c.flip.find(it->second);
        if (back == c.flip.end() || back->second != id) {
            fail("flip-law", "flip is not an involution at generator '" + id + "'");
            structure_ok = false;
        }
    }
    for (const auto& t : c.differential) {
        if (!ids.count(t.from) || !ids.count(t.to)) {
            fail("unknown-id", "differential term (" + t.from + " -> " + t.to + ") names an unknown generator");
            structure_ok = false;
        }
    }
    if (!structure_ok) return rep;

    for (const auto& id : ids) {
        const Generator& x = c.gen(id);
        const Generator& sx = c.gen(c.flip.at(id));
        if (sx.alexander != -x.alexander)
            fail("flip-law", "flip Alexander law fails at '" + id + "': A(" + sx.id + ") = " +
                                 std::to_string(sx.alexander) + ", expected " + std::to_string(-x.alexander));
        if (!(sx.maslov == x.maslov - Rational(2 * x.alexander)))
            fail("flip-law", "flip Maslov law fails at '" + id + "': M(" + sx.id + ") = " + sx.maslov.str() +
                                 ", expected " + (x.maslov - Rational(2 * x.alexander)).str());
    }

    for (const auto& t : c.differential) {
        const Generator& from = c.gen(t.from);
        const Generator& to = c.gen(t.to);
        const std::string label = "(" + t.from + " -> U^" + std::to_string(t.upower) + " " + t.to + ")";
        if (t.upower < 0)
            fail("filtration", "differential term " + label + " has negative U-power");
        if (!(to.maslov - Rational(2 * t.upower) == from.maslov - Rational(1)))
            fail("grading-law", "differential term " + label + " breaks the Maslov law");
        if (to.alexander - t.upower > from.alexander)
            fail("filtration", "differential term " + label + " breaks the Alexander filtration");
    }
    if (!rep.ok()) return rep;

    // d^2 = 0 on canonical generators, tracking U-powers exactly.
    for (const auto& g : c.generators) {
        detail::FormalSum square;
        for (const auto& t1 : c.differential) {
            if (t1.from != g.id) continue;
            for (const auto& t2 : c.differential) {
                if (t2.from != t1.to) continue;
                detail::toggle(square, t2.to, t1.upower + t2.upower);
            }
        }
        if (!square.empty())
            fail("d2", "d^2 is nonzero on generator '" + g.id + "'");
    }

    // The grading-preserving chain isomorphism Phi(x) = U^{-A(x)} flip(x)
    // must commute with the differential.
    for (const auto& g : c.generators) {
        detail::FormalSum diff;
        for (const auto& t : c.differential) {
            if (t.from != g.id) continue;
            detail::toggle(diff, c.flip.at(t.to), t.upower - c.gen(t.to).alexander);
        }
        const std::string& sg = c.flip.at(g.id);
        for (const auto& t : c.differential) {
            if (t.from != sg) continue;
            detail::toggle(diff, t.to, t.upower - g.alexander);
        }
        if (!diff.empty())
            fail("flip-law", "flip does not commute with the differential at '" + g.id + "'");
    }
    if (!rep.ok()) return rep;

    // U-inverted homology. After inverting U the differential entry from x to
    // y is the monomial forced by the gradings, so ranks can be read off from
    // the GF(2) incidence matrix; the grading makes the homology free, with
    // one summand per surviving parity class.
    const int n = static_cast<int>(c.generators.size());
    F2Matrix incidence(n, n);
    for (const auto& t : c.differential)
        incidence.add_at(c.index_of(t.to), c.index_of(t.from), F2(1));
    std::vector<int> evens, odds;
    for (int i = 0; i < n; ++i) {
        if (c.generators[static_cast<std::size_t>(i)].maslov.num() % 2 == 0)
            evens.push_back(i);
        else
            odds.push_back(i);
    }
    const int rank_eo = gf2_rank(incidence.submatrix(odds, evens));
    const int rank_oe = gf2_rank(incidence.submatrix(evens, odds));
    const int h_even = static_cast<int>(evens.size()) - rank_eo - rank_oe;
    const int h_odd = static_cast<int>(odds.size()) - rank_eo - rank_oe;
    if (h_even != 1 || h_odd != 0)
        fail("rank", "U-inverted homology has rank " + std::to_string(h_even) +
                         " in even and " + std::to_string(h_odd) +
                         " in odd Maslov parity; expected 1 and 0");

    return rep;
}

/// Dual complex: the mirror knot. Gradings negate, arrows reverse.
inline CfkComplex mirror(const CfkComplex& c) {
    CfkComplex m;
    m.name = c.name.empty() ? "mirror" : "mirror(" + c.name + ")";
    for (const auto& g : c.generators)
        m.generators.push_back({g.id, -g.maslov, -g.alexander});
    for (const auto& t : c.differential)
        m.differential.push_back({t.to, t.from, t.upower});
    m.flip = c.flip;
    std::sort(m.differential.begin(), m.differential.end());
    return m;
}

/// Tensor product over GF(2)[U, U^-1]: the connected-sum complex.
inline CfkComplex tensor(const CfkComplex& a, const CfkComplex& b) {
    CfkComplex t;
    t.name = "tensor(" + a.name + ", " + b.name + ")";
    auto pair_id = [](const std::string& x, const std::string& y) { return x + "|" + y; };
    for (const auto& ga : a.generators)
        for (const auto& gb : b.generators)
            t.generators.push_back({pair_id(ga.id, gb.id),
                                    ga.maslov + gb.maslov,
                                    ga.alexander + gb.alexander});
    for (const auto& ta : a.differential)
        for (const auto& gb : b.generators)
            t.differential.push_back({pair_id(ta.from, gb.id), pair_id(ta.to, gb.id), ta.upower});
    for (const auto& ga : a.generators)
        for (const auto& tb : b.differential)
            t.differential.push_back({pair_id(ga.id, tb.from), pair_id(ga.id, tb.to), tb.upower});
    for (const auto& ga : a.generators)
        for (const auto& gb : b.generators)
            t.flip[pair_id(ga.id, gb.id)] = pair_id(a.flip.at(ga.id), b.flip.at(gb.id));
    std::sort(t.differential.begin(), t.differential.end());
    return t;
}

/// Direct sum; the second summand must be acyclic for the result to validate.
inline CfkComplex direct_sum(const CfkComplex& a, const CfkComplex& b,
                             const std::string& name = "") {
    CfkComplex s;
    s.name = name.empty() ? "sum(" + a.name + ", " + b.name + ")" : name;
    auto tag = [](const std::string& prefix, const std::string& id) { return prefix + id; };
    for (const auto& g : a.generators) s.generators.push_back({tag("L.", g.id), g.maslov, g.alexander});
    for (const auto& g : b.generators) s.generators.push_back({tag("R.", g.id), g.maslov, g.alexander});
    for (const auto& t : a.differential) s.differential.push_back({tag("L.", t.from), tag("L.", t.to), t.upower});
    for (const auto& t : b.differential) s.differential.push_back({tag("R.", t.from), tag("R.", t.to), t.upower});
    for (const auto& [x, y] : a.flip) s.flip[tag("L.", x)] = tag("L.", y);
    for (const auto& [x, y] : b.flip) s.flip[tag("R.", x)] = tag("R.", y);
    std::sort(s.differential.begin(), s.differential.end());
    return s;
}

/// Staircase complex from a palindromic, even-length list of positive step
/// sizes. staircase({}) is the unknot model; staircase({1, 1}) the
/// right-handed trefoil model (up to relabeling).
inline CfkComplex staircase(const std::vector<int>& steps) {
    if (steps.size() % 2 != 0)
        throw CfkError("staircase-shape", "staircase step list must have even length");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] <= 0)
            throw CfkError("staircase-shape", "staircase step " + std::to_string(i) + " is not positive");
        if (steps[i] != steps[steps.size() - 1 - i])
            throw CfkError("staircase-shape", "staircase step list is not palindromic");
    }

    CfkComplex c;
    c.name = "staircase(";
    for (std::size_t i = 0; i < steps.size(); ++i)
        c.name += (i ? "," : "") + std::to_string(steps[i]);
    c.name += ")";

    const int n2 = static_cast<int>(steps.size());
    int genus = 0;
    for (int i = 0; i < n2; i += 2) genus += steps[static_cast<std::size_t>(i)];

    std::vector<int> alex(static_cast<std::size_t>(n2) + 1), maslov(static_cast<std::size_t>(n2) + 1);
    alex[0] = genus;
    maslov[0] = 0;
    for (int k = 1; k <= n2; ++k) {
        const int s = steps[static_cast<std::size_t>(k - 1)];
        alex[static_cast<std::size_t>(k)] = alex[static_cast<std::size_t>(k - 1)] - s;
        maslov[static_cast<std::size_t>(k)] =
            (k % 2 == 1) ? maslov[static_cast<std::size_t>(k - 1)] + 1 - 2 * s
                         : maslov[static_cast<std::size_t>(k - 1)] - 1;
    }

    auto gid = [](int k) { return "x" + std::to_string(k); };
    for (int k = 0; k <= n2; ++k)
        c.generators.push_back({gid(k), Rational(maslov[static_cast<std::size_t>(k)]),
                                alex[static_cast<std::size_t>(k)]});
    for (int k = 1; k <= n2; k += 2) {
        c.differential.push_back({gid(k), gid(k - 1), steps[static_cast<std::size_t>(k - 1)]});
        c.differential.push_back({gid(k), gid(k + 1), 0});
    }
    for (int k = 0; k <= n2; ++k) c.flip[gid(k)] = gid(n2 - k);
    std::sort(c.differential.begin(), c.differential.end());
    return c;
}

namespace catalog_detail {

inline CfkComplex unknot() {
    CfkComplex c;
    c.name = "unknot";
    c.generators = {{"u", Rational(0), 0}};
    c.flip = {{"u", "u"}};
    return c;
}

inline CfkComplex trefoil_right() {
    CfkComplex c;
    c.name = "trefoil_right";
    c.generators = {{"a", Rational(0), 1}, {"b", Rational(-1), 0}, {"c", Rational(-2), -1}};
    c.differential = {{"b", "a", 1}, {"b", "c", 0}};
    c.flip = {{"a", "c"}, {"b", "b"}, {"c", "a"}};
    return c;
}

inline CfkComplex trefoil_left() {
    CfkComplex c = mirror(trefoil_right());
    c.name = "trefoil_left";
    return c;
}

/// Four-generator acyclic box used in the figure-eight and doubled-knot models.
inline CfkComplex box(const std::string& prefix) {
    CfkComplex c;
    auto id = [&prefix](const char* s) { return prefix + s; };
    c.generators = {{id("a"), Rational(0), 0},
                    {id("b"), Rational(-1), -1},
                    {id("c"), Rational(1), 1},
                    {id("e"), Rational(0), 0}};
    c.differential = {{id("a"), id("b"), 0}, {id("a"), id("c"), 1},
                      {id("b"), id("e"), 1}, {id("c"), id("e"), 0}};
    c.flip = {{id("a"), id("a")}, {id("e"), id("e")}, {id("b"), id("c")}, {id("c"), id("b")}};
    return c;
}

inline CfkComplex figure8() {
    CfkComplex c = box("");
    c.name = "figure8";
    c.generators.push_back({"u", Rational(0), 0});
    c.flip["u"] = "u";
    std::sort(c.differential.begin(), c.differential.end());
    return c;
}

inline CfkComplex whitehead_double_trefoil_model() {
    CfkComplex c = direct_sum(trefoil_right(), box(""), "whitehead_double_trefoil_model");
    return c;
}

} // namespace catalog_detail

inline std::vector<std::string> catalog_names() {
    return {"unknot", "trefoil_right", "trefoil_left", "figure8", "whitehead_double_trefoil_model"};
}

inline CfkComplex catalog_get(const std::string& name) {
    if (name == "unknot") return catalog_detail::unknot();
    if (name == "trefoil_right") return catalog_detail::trefoil_right();
    if (name == "trefoil_left") return catalog_detail::trefoil_left();
    if (name == "figure8") return catalog_detail::figure8();
    if (name == "whitehead_double_trefoil_model")
        return catalog_detail::whitehead_double_trefoil_model();
    throw CfkError("unknown-catalog-entry", "no catalog complex named '" + name + "'");
}

} // namespace cfklab
