#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfklab/cfk_io.hpp"
#include "cfklab/report_json.hpp"

namespace cfklab {

namespace cli_detail {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CfkError("io", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Inputs are either catalog:NAME or a path to a complex file.
inline CfkComplex load_complex(const std::string& spec) {
    constexpr const char* prefix = "catalog:";
    if (spec.rfind(prefix, 0) == 0) return catalog_get(spec.substr(8));
    return parse_cfk(read_file(spec));
}

/// Plain-text rendering of a JSON report: one "key = value" line per scalar,
/// section headers for nested objects and arrays.
inline void render_table(const OrderedJson& j, std::ostream& out, const std::string& indent) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || value.is_array()) {
                out << indent << key << ":\n";
                render_table(value, out, indent + "  ");
            } else {
                out << indent << key << " = "
                    << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                out << indent << "-\n";
                render_table(value, out, indent + "  ");
            } else {
                out << indent << "- "
                    << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
        }
    }
}

struct OutputSink {
    std::string format = "json";
    std::string out_path;

    void emit(const OrderedJson& j, std::ostream& fallback) const {
        std::ostringstream ss;
        if (format == "json")
            ss << j.dump(2) << "\n";
        else
            render_table(j, ss, "");
        if (out_path.empty()) {
            fallback << ss.str();
            return;
        }
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw CfkError("io", "cannot write '" + out_path + "'");
        f << ss.str();
    }
};

inline std::vector<std::string> user_catalog_files() {
    std::vector<std::string> files;
    const char* dir = std::getenv("CFKLAB_CATALOG_DIR");
    if (!dir || !*dir) return files;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (!entry.is_regular_file()) continue;
        const auto ext = entry.path().extension().string();
        if (ext == ".json" || ext == ".cfk") files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    return files;
}

} // namespace cli_detail

/// Runs the command-line interface; factored out of main() so tests can drive
/// it directly. Returns the process exit code: 0 ok, 1 a mathematical check
/// failed, 2 invalid input or usage.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    namespace d = cli_detail;

    CLI::App app{"Correction terms of surgeries on knots from knot Floer complexes"};
    app.require_subcommand(1);
    app.fallthrough();

    ComputeOptions opts;
    int truncation = -1;
    d::OutputSink sink;
    app.add_option("--truncation", truncation, "Truncation level override (never below the safe floor)");
    app.add_option("--stability-rounds", opts.stability_rounds,
                   "Truncation-doubling rounds for stability certification")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", sink.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", sink.out_path, "Write the report to a file instead of stdout");

    std::vector<std::string> inputs;
    std::string raw_input, catalog_name;
    int surgery_s = 0;
    std::string qhs_d, fiber_d_plus, fiber_d_minus;
    int b1 = 0;
    std::vector<std::string> quadruple;

    auto* cmd_validate = app.add_subcommand("validate", "Validate complexes");
    cmd_validate->add_option("input", inputs, "catalog:NAME or file path")->required();
    auto* cmd_profile = app.add_subcommand("profile", "Zero-surgery correction-term profile with cross-checks");
    cmd_profile->add_option("input", inputs, "catalog:NAME or file path")->required();
    auto* cmd_v0 = app.add_subcommand("v0", "V_s invariant of a complex");
    cmd_v0->add_option("input", inputs, "catalog:NAME or file path")->required();
    cmd_v0->add_option("--s", surgery_s, "Alexander index s");
    auto* cmd_cone_d = app.add_subcommand("cone-d", "Twisted mapping-cone correction term of the zero-surgery");
    cmd_cone_d->add_option("input", inputs, "catalog:NAME or file path")->required();
    auto* cmd_twisted_d = app.add_subcommand("twisted-d", "Correction term of a raw twisted complex");
    cmd_twisted_d->add_option("input", raw_input, "twisted complex file, or 'builtin:example'")->required();
    auto* cmd_two_knot = app.add_subcommand("two-knot", "2-knot invariant quadruple and obstructions");
    cmd_two_knot->add_option("--qhs-d", qhs_d, "Fiber is a rational homology sphere with this correction term");
    cmd_two_knot->add_option("--fiber-d-plus", fiber_d_plus, "Bottom-tower correction term of the fiber boundary");
    cmd_two_knot->add_option("--fiber-d-minus", fiber_d_minus, "Same for the reversed fiber boundary");
    cmd_two_knot->add_option("--b1", b1, "First Betti number of the fiber boundary");
    cmd_two_knot->add_option("--quadruple", quadruple, "Four explicit invariant values")->expected(4);
    auto* cmd_catalog = app.add_subcommand("catalog", "Built-in complex catalog");
    auto* cmd_catalog_list = cmd_catalog->add_subcommand("list", "List catalog names");
    auto* cmd_catalog_show = cmd_catalog->add_subcommand("show", "Print a catalog complex");
    cmd_catalog_show->add_option("name", catalog_name, "catalog entry name")->required();
    cmd_catalog->require_subcommand(1);
    auto* cmd_check_all = app.add_subcommand("check-all", "Validate and cross-check the catalog and any user corpus");

    std::vector<std::string> argv = args;
    try {
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends.
            out << app.help();
            return d::kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return d::kExitUsage;
    }
    if (truncation >= 0) opts.truncation = truncation;

    try {
        if (*cmd_validate) {
            OrderedJson report = OrderedJson::array();
            bool all_ok = true;
            for (const auto& spec : inputs) {
                OrderedJson entry;
                entry["input"] = spec;
                try {
                    const CfkComplex c = d::load_complex(spec);
                    entry["report"] = to_json(validate(c));
                } catch (const CfkError& e) {
                    entry["report"] = {{"valid", false},
                                       {"issues", {{{"kind", e.kind}, {"message", e.what()}}}}};
                }
                if (!entry["report"]["valid"].get<bool>()) all_ok = false;
                report.push_back(entry);
            }
            sink.emit(report, out);
            return all_ok ? d::kExitOk : d::kExitUsage;
        }

        if (*cmd_profile) {
            OrderedJson report = OrderedJson::array();
            bool all_passed = true;
            for (const auto& spec : inputs) {
                const CfkComplex c = d::load_complex(spec);
                OrderedJson entry;
                entry["input"] = spec;
                entry["profile"] = to_json(zero_surgery_profile(c, opts));
                const CheckReport checks = crosscheck_profile(c, opts);
                entry["checks"] = to_json(checks);
                entry["d_symmetric"] = is_d_symmetric_zero_surgery(c, opts);
                if (!checks.all_passed()) all_passed = false;
                report.push_back(entry);
            }
            sink.emit(report.size() == 1 ? report[0] : report, out);
            return all_passed ? d::kExitOk : d::kExitCheckFailed;
        }

        if (*cmd_v0) {
            OrderedJson report = OrderedJson::array();
            for (const auto& spec : inputs) {
                const CfkComplex c = d::load_complex(spec);
                OrderedJson entry;
                entry["input"] = spec;
                entry["s"] = surgery_s;
                entry["v"] = compute_V(c, surgery_s, opts);
                report.push_back(entry);
            }
            sink.emit(report.size() == 1 ? report[0] : report, out);
            return d::kExitOk;
        }

        if (*cmd_cone_d) {
            OrderedJson report = OrderedJson::array();
            for (const auto& spec : inputs) {
                const CfkComplex c = d::load_complex(spec);
                OrderedJson entry;
                entry["input"] = spec;
                entry["d_twisted"] = d_totally_twisted_zero_surgery(c, opts).str();
                report.push_back(entry);
            }
            sink.emit(report.size() == 1 ? report[0] : report, out);
            return d::kExitOk;
        }

        if (*cmd_twisted_d) {
            const RawTwistedComplex r = raw_input == "builtin:example"
                                            ? twisted_example_complex()
                                            : parse_raw_twisted(d::read_file(raw_input));
            OrderedJson entry;
            entry["input"] = raw_input;
            entry["name"] = r.name;
            entry["d_twisted"] = twisted_complex_d(r, opts).str();
            sink.emit(entry, out);
            return d::kExitOk;
        }

        if (*cmd_two_knot) {
            TwoKnotInvariants q;
            const int modes = (!qhs_d.empty() ? 1 : 0) + (!fiber_d_plus.empty() ? 1 : 0) +
                              (quadruple.empty() ? 0 : 1);
            if (modes != 1)
                throw CfkError("usage",
                               "give exactly one of --qhs-d, --fiber-d-plus/--fiber-d-minus/--b1, "
                               "or --quadruple");
            if (!qhs_d.empty()) {
                q = qhs_fiber_two_knot(Rational::parse(qhs_d));
            } else if (!fiber_d_plus.empty()) {
                if (fiber_d_minus.empty())
                    throw CfkError("usage", "--fiber-d-plus requires --fiber-d-minus");
                q = fibered_two_knot(Rational::parse(fiber_d_plus), Rational::parse(fiber_d_minus), b1);
            } else {
                q = {Rational::parse(quadruple[0]), Rational::parse(quadruple[1]),
                     Rational::parse(quadruple[2]), Rational::parse(quadruple[3])};
            }
            OrderedJson entry;
            entry["two_knot"] = to_json(q);
            entry["obstructions"] = to_json(obstruction_report(q));
            sink.emit(entry, out);
            return d::kExitOk;
        }

        if (*cmd_catalog_list) {
            OrderedJson entry;
            entry["catalog"] = catalog_names();
            sink.emit(entry, out);
            return d::kExitOk;
        }
        if (*cmd_catalog_show) {
            out << serialize_cfk(catalog_get(catalog_name));
            return d::kExitOk;
        }

        if (*cmd_check_all) {
            OrderedJson report;
            report["entries"] = OrderedJson::array();
            bool any_check_failed = false, any_input_error = false;

            std::vector<std::pair<std::string, std::function<CfkComplex()>>> sources;
            for (const auto& name : catalog_names())
                sources.push_back({"catalog:" + name, [name]() { return catalog_get(name); }});
            for (const auto& path : d::user_catalog_files())
                sources.push_back({path, [path]() { return parse_cfk(d::read_file(path)); }});

            for (const auto& [label, loader] : sources) {
                OrderedJson entry;
                entry["input"] = label;
                try {
                    const CfkComplex c = loader();
                    entry["profile"] = to_json(zero_surgery_profile(c, opts));
                    const CheckReport checks = crosscheck_profile(c, opts);
                    entry["checks"] = to_json(checks);
                    entry["status"] = checks.all_passed() ? "pass" : "fail";
                    if (!checks.all_passed()) any_check_failed = true;
                } catch (const CfkError& e) {
                    entry["status"] = "error";
                    entry["error"] = {{"kind", e.kind}, {"message", e.what()}};
                    any_input_error = true;
                }
                report["entries"].push_back(entry);
            }

            // The worked twisted-complex example doubles as an end-to-end check.
            {
                OrderedJson entry;
                entry["input"] = "builtin:twisted_example";
                const Rational d_val = twisted_complex_d(twisted_example_complex(), opts);
                entry["d_twisted"] = d_val.str();
                entry["expected"] = "-1/2";
                const bool passed = d_val == Rational(-1, 2);
                entry["status"] = passed ? "pass" : "fail";
                if (!passed) any_check_failed = true;
                report["entries"].push_back(entry);
            }

            report["status"] = any_input_error ? "error" : (any_check_failed ? "fail" : "pass");
            sink.emit(report, out);
            if (any_input_error) return d::kExitUsage;
            return any_check_failed ? d::kExitCheckFailed : d::kExitOk;
        }
    } catch (const CfkError& e) {
        err << "error (" << e.kind << "): " << e.what() << "\n";
        return e.kind == "stability" ? d::kExitCheckFailed : d::kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return d::kExitUsage;
    }
    err << "error: no command\n";
    return d::kExitUsage;
}

} // namespace cfklab
