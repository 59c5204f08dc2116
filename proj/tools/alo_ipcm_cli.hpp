#pragma once

/*
 * Command-line front end.
 *
 *   alo-ipcm [global flags] check     FILE [--mode reciprocity|liu|approx|full|all]
 *   alo-ipcm [global flags] index     FILE [--which consistency|indeterminacy|both] [--to-scale S]
 *   alo-ipcm [global flags] compare   FILE... [--reference-scale S] [--thresholds T_I T_DELTA]
 *   alo-ipcm [global flags] transport FILE --to S [-o OUT]
 *
 * Global flags: --tolerance (env ALO_IPCM_TOLERANCE, default 1e-9),
 * --perm-cap (default 8), --format text|json|tsv, --scale S (re-tag input).
 *
 * Exit codes: 0 pass/success, 1 a requested check failed, 2 input or usage error.
 */

#include <alo_ipcm/alo_ipcm.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace alo::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_input_error = 2;

namespace detail {

struct Globals {
    double tolerance = 1e-9;
    std::size_t perm_cap = default_permutation_cap;
    std::string format = "text";
    std::string scale;
};

inline Scale scale_named(const std::string& name)
{
    const auto id = parse_scale_id(name);
    if (!id) throw InvalidArgument("unknown scale \"" + name + "\"");
    return Scale::from_id(*id);
}

inline MatrixContent load(const std::string& path, const Globals& g)
{
    std::optional<Scale> override_scale;
    if (!g.scale.empty()) override_scale = scale_named(g.scale);
    return load_matrix_file(path, override_scale, Tolerance{g.tolerance});
}

inline std::string label_for(const std::string& path) { return std::filesystem::path(path).stem().string(); }

// check ----------------------------------------------------------------------

struct CheckResult {
    std::optional<bool> value; // nullopt: not applicable (matrix not reciprocal)
    std::optional<Permutation> witness;
};

inline int cmd_check(const std::string& file, const std::string& mode, const Globals& gl, std::ostream& out)
{
    const Ipcm a = as_ipcm(load(file, gl));
    const Tolerance tol{gl.tolerance};
    const bool all = mode == "all";
    const bool reciprocal = is_reciprocal(a, tol);

    std::vector<std::pair<std::string, CheckResult>> results;
    if (all || mode == "reciprocity") results.push_back({"reciprocity", {reciprocal, std::nullopt}});
    if (all || mode == "liu") {
        if (reciprocal) {
            results.push_back({"liu", {is_liu_consistent(a, tol), std::nullopt}});
        } else if (all) {
            results.push_back({"liu", {}});
        } else {
            throw NotReciprocal("Liu consistency requires a reciprocal matrix");
        }
    }
    if (all || mode == "approx") {
        if (reciprocal) {
            const ApproxConsistency r = is_approx_consistent(a, tol, gl.perm_cap);
            results.push_back({"approx", {r.consistent, r.witness}});
        } else if (all) {
            results.push_back({"approx", {}});
        } else {
            throw NotReciprocal("approximate consistency requires a reciprocal matrix");
        }
    }
    if (all || mode == "full") results.push_back({"full", {is_full_consistent(a, tol), std::nullopt}});

    const bool pass = std::all_of(results.begin(), results.end(),
                                  [](const auto& r) { return r.second.value.value_or(false); });

    if (gl.format == "json") {
        nlohmann::json checks = nlohmann::json::object();
        for (const auto& [name, r] : results) {
            nlohmann::json v = r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr);
            if (name == "approx") {
                v = {{"consistent", v},
                     {"witness", r.witness ? nlohmann::json(r.witness->one_based()) : nlohmann::json(nullptr)}};
            }
            checks[name] = v;
        }
        nlohmann::json doc = {{"file", file},
                              {"scale", std::string(to_string(a.scale().id()))},
                              {"checks", checks},
                              {"pass", pass}};
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& [name, r] : results) {
            out << name << '\t';
            if (!r.value) {
                out << "n/a (not reciprocal)";
            } else {
                out << (*r.value ? "pass" : "fail");
            }
            if (r.witness) out << "\twitness " << r.witness->to_string();
            out << '\n';
        }
    }
    return pass ? exit_pass : exit_fail;
}

// index ----------------------------------------------------------------------

inline int cmd_index(const std::string& file, const std::string& which, const std::string& to_scale,
                     const Globals& gl, std::ostream& out)
{
    const Ipcm a = as_ipcm(load(file, gl));
    const Tolerance tol{gl.tolerance};
    const bool want_i = which != "indeterminacy";
    const bool want_d = which != "consistency";

    struct Row {
        std::string quantity;
        GroupElement native;
    };
    std::vector<Row> rows;
    if (want_i) rows.push_back({"consistency_index", consistency_index(a, tol)});
    if (want_d) rows.push_back({"indeterminacy_index", indeterminacy_index(a, tol)});

    std::optional<IsoMap> m;
    if (!to_scale.empty()) m = IsoMap::between(a.scale(), scale_named(to_scale));

    const std::string native_name(to_string(a.scale().id()));
    if (gl.format == "json") {
        nlohmann::json doc = {{"file", file}, {"scale", native_name}};
        for (const auto& r : rows) doc[r.quantity] = r.native.value();
        if (m) {
            nlohmann::json t = {{"scale", std::string(to_string(m->target().id()))}};
            for (const auto& r : rows) t[r.quantity] = m->apply(r.native).value();
            doc["transported"] = t;
        }
        out << doc.dump(2) << '\n';
    } else {
        if (gl.format == "tsv") out << "quantity\tscale\tvalue\n";
        for (const auto& r : rows) out << r.quantity << '\t' << native_name << '\t' << format_value(r.native.value()) << '\n';
        if (m) {
            const std::string target_name(to_string(m->target().id()));
            for (const auto& r : rows) {
                out << r.quantity << '\t' << target_name << '\t' << format_value(m->apply(r.native).value()) << '\n';
            }
        }
    }
    return exit_pass;
}

// compare --------------------------------------------------------------------

inline int cmd_compare(const std::vector<std::string>& files, const std::string& reference,
                       const std::vector<double>& thresholds, const Globals& gl, std::ostream& out)
{
    const Tolerance tol{gl.tolerance};
    const Scale ref = scale_named(reference);
    std::optional<Thresholds> t;
    if (!thresholds.empty()) t.emplace(ref, ref.element(thresholds.at(0)), ref.element(thresholds.at(1)), tol);

    std::vector<IndexPoint> points;
    points.reserve(files.size());
    for (const auto& f : files) points.push_back(evaluate(label_for(f), as_ipcm(load(f, gl)), ref, tol));
    std::stable_sort(points.begin(), points.end(),
                     [](const IndexPoint& a, const IndexPoint& b) { return a.label < b.label; });

    if (gl.format == "json") {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : points) {
            nlohmann::json row = {{"label", p.label},
                                  {"I", p.consistency.value()},
                                  {"delta", p.indeterminacy.value()}};
            if (t) row["verdict"] = std::string(to_string(classify(ref, p, *t, tol)));
            pts.push_back(row);
        }
        nlohmann::json dom = nlohmann::json::array();
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                dom.push_back({{"p", points[i].label},
                               {"q", points[j].label},
                               {"relation", std::string(to_string(dominance(ref, points[i], points[j], tol)))}});
            }
        }
        out << nlohmann::json{{"reference_scale", reference}, {"points", pts}, {"dominance", dom}}.dump(2) << '\n';
        return exit_pass;
    }

    out << plot_data(ref, points, t, tol);
    if (points.size() >= 2) {
        out << "\np\tq\trelation\n";
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                out << points[i].label << '\t' << points[j].label << '\t'
                    << to_string(dominance(ref, points[i], points[j], tol)) << '\n';
            }
        }
    }
    return exit_pass;
}

// transport ------------------------------------------------------------------

inline int cmd_transport(const std::string& file, const std::string& to, const std::string& output,
                         const Globals& gl, std::ostream& out)
{
    const MatrixContent src = load(file, gl);
    const IsoMap m = IsoMap::between(scale_of(src), scale_named(to));
    const MatrixContent dst = std::visit([&m](const auto& x) -> MatrixContent { return transport(x, m); }, src);
    const std::string text = to_json(dst).dump(2) + "\n";
    if (output.empty()) {
        out << text;
    } else {
        std::ofstream f(output);
        if (!f) throw ParseError("cannot write " + output);
        f << text;
    }
    return exit_pass;
}

} // namespace detail

/// Runs the CLI on `args` (program name excluded).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Interval pairwise comparison matrices over Alo-groups", "alo-ipcm"};
    app.require_subcommand(1);
    app.fallthrough();

    detail::Globals gl;
    app.add_option("--tolerance", gl.tolerance, "equality tolerance in additive coordinates")
        ->envname("ALO_IPCM_TOLERANCE")
        ->check(CLI::PositiveNumber);
    app.add_option("--perm-cap", gl.perm_cap, "largest order searched for approximate consistency");
    app.add_option("--format", gl.format, "output format")->check(CLI::IsMember({"text", "json", "tsv"}));
    app.add_option("--scale", gl.scale, "re-tag the input matrix with this scale")
        ->check(CLI::IsMember({"multiplicative", "additive", "fuzzy"}));

    const std::vector<std::string> scales{"multiplicative", "additive", "fuzzy"};

    std::string file;
    std::string mode = "all";
    auto* check = app.add_subcommand("check", "reciprocity and consistency verdicts");
    check->add_option("file", file, "matrix file")->required();
    check->add_option("--mode", mode)->check(CLI::IsMember({"reciprocity", "liu", "approx", "full", "all"}));

    std::string which = "both";
    std::string to_scale;
    auto* index = app.add_subcommand("index", "consistency and indeterminacy indices");
    index->add_option("file", file, "matrix file")->required();
    index->add_option("--which", which)->check(CLI::IsMember({"consistency", "indeterminacy", "both"}));
    index->add_option("--to-scale", to_scale)->check(CLI::IsMember(scales));

    std::vector<std::string> files;
    std::string reference = "fuzzy";
    std::vector<double> thresholds;
    auto* compare = app.add_subcommand("compare", "plot data and dominance on a common scale");
    compare->add_option("files", files, "matrix files")->required();
    compare->add_option("--reference-scale", reference)->check(CLI::IsMember(scales));
    compare->add_option("--thresholds", thresholds, "T_I T_DELTA on the reference scale")->expected(2);

    std::string to;
    std::string output;
    auto* trans = app.add_subcommand("transport", "map a matrix to another scale");
    trans->add_option("file", file, "matrix file")->required();
    trans->add_option("--to", to)->required()->check(CLI::IsMember(scales));
    trans->add_option("-o,--output", output, "write to this file instead of stdout");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }

    try {
        if (*check) return detail::cmd_check(file, mode, gl, out);
        if (*index) return detail::cmd_index(file, which, to_scale, gl, out);
        if (*compare) return detail::cmd_compare(files, reference, thresholds, gl, out);
        if (*trans) return detail::cmd_transport(file, to, output, gl, out);
    } catch (const OrderTooSmall& e) {
        err << "error: OrderTooSmall: " << e.what() << '\n';
        return exit_input_error;
    } catch (const NotReciprocal& e) {
        err << "error: NotReciprocal: " << e.what() << '\n';
        return exit_input_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_input_error;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), out, err);
}

} // namespace alo::cli
