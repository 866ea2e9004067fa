#pragma once

#include <string>

#include <json.hpp>

#include "cfklab/complex.hpp"

namespace cfklab {

namespace io_detail {

using json = nlohmann::ordered_json;

inline std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
    }
    return {line, col};
}

inline Rational parse_grading(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const std::exception&) {
            throw CfkError("syntax", where + ": malformed rational '" + v.get<std::string>() + "'");
        }
    }
    throw CfkError("syntax", where + ": grading must be an integer or a 'p/q' string");
}

inline json grading_to_json(const Rational& r) {
    if (r.is_integer()) return json(r.num());
    return json(r.str());
}

} // namespace io_detail

/// Parses the JSON complex format and validates the result. Throws CfkError
/// with a distinct kind per failure mode; validation failures carry the kind
/// of the first reported issue.
inline CfkComplex parse_cfk(const std::string& text) {
    namespace d = io_detail;
    d::json j;
    try {
        j = d::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = d::line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw CfkError("syntax", "JSON syntax error at line " + std::to_string(line) +
                                     ", column " + std::to_string(col));
    }
    if (!j.is_object()) throw CfkError("syntax", "top-level value must be an object");
    for (const char* key : {"generators", "differential", "flip"})
        if (!j.contains(key) || !j[key].is_array())
            throw CfkError("syntax", std::string("missing or non-array field '") + key + "'");

    CfkComplex c;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw CfkError("syntax", "field 'name' must be a string");
        c.name = j["name"].get<std::string>();
    }
    for (const auto& g : j["generators"]) {
        if (!g.is_object() || !g.contains("id") || !g["id"].is_string() ||
            !g.contains("maslov") || !g.contains("alexander") || !g["alexander"].is_number_integer())
            throw CfkError("syntax", "each generator needs string 'id', 'maslov' and integer 'alexander'");
        const std::string id = g["id"].get<std::string>();
        c.generators.push_back({id, d::parse_grading(g["maslov"], "generator '" + id + "'"),
                                g["alexander"].get<int>()});
    }
    std::set<std::string> ids;
    for (const auto& g : c.generators)
        if (!ids.insert(g.id).second)
            throw CfkError("duplicate-id", "generator id '" + g.id + "' appears twice");
    for (const auto& t : j["differential"]) {
        if (!t.is_object() || !t.contains("from") || !t["from"].is_string() ||
            !t.contains("to") || !t["to"].is_string() ||
            !t.contains("upower") || !t["upower"].is_number_integer())
            throw CfkError("syntax", "each differential term needs 'from', 'to' and integer 'upower'");
        DiffTerm term{t["from"].get<std::string>(), t["to"].get<std::string>(), t["upower"].get<int>()};
        if (!ids.count(term.from) || !ids.count(term.to))
            throw CfkError("unknown-id", "differential term (" + term.from + " -> " + term.to +
                                             ") names an unknown generator");
        c.differential.push_back(term);
    }
    for (const auto& p : j["flip"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
            throw CfkError("syntax", "each flip entry must be a 2-element array of ids");
        const std::string a = p[0].get<std::string>(), b = p[1].get<std::string>();
        if (!ids.count(a) || !ids.count(b))
            throw CfkError("unknown-id", "flip pair (" + a + ", " + b + ") names an unknown generator");
        auto ita = c.flip.find(a);
        auto itb = c.flip.find(b);
        if ((ita != c.flip.end() && ita->second != b) || (itb != c.flip.end() && itb->second != a))
            throw CfkError("flip-law", "flip pair (" + a + ", " + b + ") conflicts with an earlier pair");
        c.flip[a] = b;
        c.flip[b] = a;
    }
    // Unlisted generators are fixed points of the involution.
    for (const auto& id : ids)
        if (!c.flip.count(id)) c.flip[id] = id;

    ValidationReport rep = validate(c);
    if (!rep.ok())
        throw CfkError(rep.issues.front().kind, rep.issues.front().message);
    return c;
}

/// Canonical serialization: generators sorted by id, differential terms sorted,
/// flip listing only non-fixed pairs once each. Byte-deterministic.
inline std::string serialize_cfk(const CfkComplex& c) {
    namespace d = io_detail;
    CfkComplex s = c;
    std::sort(s.generators.begin(), s.generators.end(),
              [](const Generator& a, const Generator& b) { return a.id < b.id; });
    std::sort(s.differential.begin(), s.differential.end());

    d::json j;
    j["name"] = s.name;
    j["generators"] = d::json::array();
    for (const auto& g : s.generators)
        j["generators"].push_back({{"id", g.id},
                                   {"maslov", d::grading_to_json(g.maslov)},
                                   {"alexander", g.alexander}});
    j["differential"] = d::json::array();
    for (const auto& t : s.differential)
        j["differential"].push_back({{"from", t.from}, {"to", t.to}, {"upower", t.upower}});
    j["flip"] = d::json::array();
    for (const auto& [a, b] : s.flip)
        if (a < b) j["flip"].push_back({a, b});
    return j.dump(2) + "\n";
}

} // namespace cfklab
