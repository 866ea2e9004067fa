#pragma once

#include <json.hpp>

#include "cfklab/homology.hpp"
#include "cfklab/invariants.hpp"

namespace cfklab {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson to_json(const ZeroSurgeryProfile& p) {
    OrderedJson j;
    j["name"] = p.name;
    j["v0"] = p.v0;
    j["v0_mirror"] = p.v0_mirror;
    j["d_untwisted_plus"] = p.d_untwisted_plus.str();
    j["d_twisted_plus"] = p.d_twisted_plus.str();
    j["d_untwisted_minus"] = p.d_untwisted_minus.str();
    j["d_twisted_minus"] = p.d_twisted_minus.str();
    j["dtilde_untwisted_plus"] = p.dtilde_untwisted_plus.str();
    j["dtilde_twisted_plus"] = p.dtilde_twisted_plus.str();
    j["dtilde_untwisted_minus"] = p.dtilde_untwisted_minus.str();
    j["dtilde_twisted_minus"] = p.dtilde_twisted_minus.str();
    return j;
}

inline OrderedJson to_json(const CheckReport& r) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& e : r.entries) {
        OrderedJson j;
        j["name"] = e.name;
        j["status"] = e.passed ? "pass" : "fail";
        j["lhs"] = e.lhs;
        j["rhs"] = e.rhs;
        arr.push_back(j);
    }
    return arr;
}

inline OrderedJson to_json(const TwoKnotInvariants& q) {
    OrderedJson j;
    j["d_sigma"] = q.d_sigma.str();
    j["d_sigma_r"] = q.d_sigma_r.str();
    j["d_sigma_bar"] = q.d_sigma_bar.str();
    j["d_sigma_bar_r"] = q.d_sigma_bar_r.str();
    return j;
}

inline OrderedJson to_json(const ObstructionFlag& f) {
    OrderedJson j;
    j["obstructed"] = f.obstructed;
    j["identity"] = f.identity;
    j["lhs"] = f.lhs;
    j["rhs"] = f.rhs;
    return j;
}

inline OrderedJson to_json(const ObstructionReport& r) {
    OrderedJson j;
    j["reversible"] = to_json(r.reversible);
    j["positive_amphichiral"] = to_json(r.positive_amphichiral);
    j["negative_amphichiral"] = to_json(r.negative_amphichiral);
    j["ribbon"] = to_json(r.ribbon);
    j["d_symmetric_seifert"] = to_json(r.d_symmetric_seifert);
    j["qhs_seifert"] = to_json(r.qhs_seifert);
    return j;
}

inline OrderedJson to_json(const ValidationReport& r) {
    OrderedJson j;
    j["valid"] = r.ok();
    j["issues"] = OrderedJson::array();
    for (const auto& issue : r.issues)
        j["issues"].push_back({{"kind", issue.kind}, {"message", issue.message}});
    return j;
}

inline OrderedJson to_json(const GradedModuleSummary& s) {
    OrderedJson j;
    j["coefficients"] = s.mode == CoefficientMode::twisted ? "twisted" : "untwisted";
    j["gradings"] = OrderedJson::array();
    for (const auto& [g2, dim] : s.dim_by_grading2) {
        OrderedJson entry;
        entry["grading"] = Rational(g2, 2).str();
        if (dim >= 0) entry["dim"] = dim;
        if (s.mode == CoefficientMode::twisted) {
            auto inv = s.invariants_by_grading2.find(g2);
            entry["invariant_factors"] = OrderedJson::array();
            if (inv != s.invariants_by_grading2.end())
                for (const auto& p : inv->second) entry["invariant_factors"].push_back(p.str());
            auto fr = s.free_rank_by_grading2.find(g2);
            entry["free_rank"] = fr == s.free_rank_by_grading2.end() ? 0 : fr->second;
        }
        j["gradings"].push_back(entry);
    }
    j["tower_bottoms"] = OrderedJson::array();
    for (const auto& b : s.tower_bottoms) j["tower_bottoms"].push_back(b.str());
    return j;
}

} // namespace cfklab
