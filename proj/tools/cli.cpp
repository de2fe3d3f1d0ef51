#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "dchain/coloring.hpp"
#include "dchain/disjointness.hpp"
#include "dchain/experiments.hpp"
#include "dchain/formulas.hpp"
#include "dchain/geometry.hpp"
#include "dchain/io.hpp"
#include "dchain/solver.hpp"

namespace dchain::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Budget budget_of(const RunConfig& c) {
    Budget b;
    if (c.budget_ms) b.time_limit = std::chrono::milliseconds(*c.budget_ms);
    return b;
}

// Sends the machine-readable result to --out when given, else to `out`.
void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
    if (c.out_path.empty()) {
        out << text;
    } else {
        write_text_file(c.out_path, text);
    }
}

PointSet load_points(const RunConfig& c) {
    if (c.points_path.empty()) throw UsageError("--points is required");
    return points_from_json(read_text_file(c.points_path));
}

std::size_t require(const std::optional<std::size_t>& v, const char* flag) {
    if (!v) throw UsageError(std::string(flag) + " is required");
    return *v;
}

int cmd_gen(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.k || c.l) {
        const std::size_t k = require(c.k, "--k");
        const std::size_t l = require(c.l, "--l");
        if (k < 1 || k > l) throw UsageError("double chain needs 1 <= k <= l");
        const PointSet ps = gen_double_chain(k, l);
        emit(c, out, points_to_json(ps));
        err << "generated C_{" << k << "," << l << "} with " << ps.size() << " points (shift "
            << double_chain_shift(k, l) << ")\n";
        return kExitOk;
    }
    const std::size_t n = require(c.n, "--n (convex) or --k/--l (double chain)");
    if (n < 1) throw UsageError("--n must be at least 1");
    emit(c, out, points_to_json(gen_convex(n)));
    err << "generated C_" << n << '\n';
    return kExitOk;
}

int cmd_validate(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const PointSet ps = load_points(c);
    if (!ps.has_partition()) throw UsageError("points file has no U/L partition");
    const ValidationReport report = validate_double_chain(ps);
    emit(c, out, validation_to_json(report));
    err << report.summary();
    return report.ok() ? kExitOk : kExitViolation;
}

int cmd_graph(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const PointSet ps = load_points(c);
    GraphFormat format = GraphFormat::Dimacs;
    if (c.format == "json")
        format = GraphFormat::Json;
    else if (!c.format.empty() && c.format != "dimacs")
        throw UsageError("graph supports --format dimacs or json");
    const DisjointnessGraph g = build_graph(ps);
    emit(c, out, export_graph(g, format));
    err << "D(P): " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    return kExitOk;
}

int cmd_formulas(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.k || c.l) {
        const std::size_t k = require(c.k, "--k");
        const std::size_t l = require(c.l, "--l");
        if (k < 1 || k > l || l < 3) throw UsageError("theorem value needs 1 <= k <= l, l >= 3");
        std::ostringstream csv;
        csv << "k,l,f_l,theorem\n" << k << ',' << l << ',' << f_of(l) << ',' << theorem_value(k, l)
            << '\n';
        emit(c, out, csv.str());
        err << "k + f(l) = " << theorem_value(k, l) << '\n';
        return kExitOk;
    }
    const std::size_t last = require(c.n, "--n");
    if (c.n_min < 1 || c.n_min > last) throw UsageError("need 1 <= --n-min <= --n");
    std::ostringstream csv;
    write_formula_table(c.n_min, last, csv);
    emit(c, out, csv.str());
    err << "f and g for n = " << c.n_min << ".." << last << '\n';
    return kExitOk;
}

int cmd_chi(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const PointSet ps = load_points(c);
    const ChiResult r = chromatic_number_exact(build_graph(ps), budget_of(c));
    emit(c, out, chi_result_to_json(ps.size(), r));
    if (!r.exact()) {
        err << "indeterminate: " << r.lower << " <= chi <= " << r.upper << " after " << r.nodes
            << " nodes\n";
        return kExitIndeterminate;
    }
    err << "chi = " << r.chi << " (" << r.nodes << " nodes, " << r.elapsed_ms << " ms)\n";
    return kExitOk;
}

int cmd_color(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const std::size_t k = require(c.k, "--k");
    const std::size_t l = require(c.l, "--l");
    if (k < 1 || k > l || l < 3) throw UsageError("color needs 1 <= k <= l and l >= 3");
    const PointSet chain = gen_double_chain(k, l);
    Coloring coloring;
    try {
        coloring = construct_double_chain_coloring(chain, exact_convex_provider(budget_of(c)));
    } catch (const std::runtime_error& e) {
        err << e.what() << '\n';
        return kExitIndeterminate;
    }
    emit(c, out, coloring_to_json(chain.size(), coloring));
    const Verdict v = verify_coloring(build_graph(chain), coloring);
    const auto expected = theorem_value(k, l);
    err << "C_{" << k << "," << l << "}: " << coloring.color_count() << " colors (k + f(l) = "
        << expected << "), " << (v.proper ? "proper" : "NOT proper") << '\n';
    return v.proper && coloring.color_count() == expected ? kExitOk : kExitViolation;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const PointSet ps = load_points(c);
    if (c.coloring_path.empty()) throw UsageError("--coloring is required");
    const auto [n_points, coloring] = coloring_from_json(read_text_file(c.coloring_path));
    if (n_points != ps.size()) throw UsageError("coloring and points disagree on the point count");
    const DisjointnessGraph g = build_graph(ps);
    const Verdict v = verify_coloring(g, coloring);
    emit(c, out, verdict_to_json(v));
    if (v.proper) {
        err << "proper coloring with " << coloring.color_count() << " colors\n";
        return kExitOk;
    }
    for (const auto& [a, b] : v.violations) {
        const SegmentId s = g.segment(a);
        const SegmentId t = g.segment(b);
        err << "violation: segments (" << s.i << "," << s.j << ") and (" << t.i << "," << t.j
            << ") are disjoint but share color " << coloring[a] << '\n';
    }
    return kExitViolation;
}

int cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
    std::vector<SweepRow> rows;
    if (c.convex) {
        rows = convex_sweep(4, require(c.n, "--n"), budget_of(c));
    } else {
        rows = theorem_sweep(c.max_sum, budget_of(c));
    }
    std::ostringstream csv;
    write_sweep_csv(rows, csv);
    emit(c, out, csv.str());
    std::size_t mismatches = 0, unknown = 0;
    for (const auto& r : rows) {
        if (!r.exact)
            ++unknown;
        else if (!r.match())
            ++mismatches;
    }
    err << rows.size() << " instances, " << mismatches << " mismatches, " << unknown
        << " indeterminate\n";
    if (mismatches) return kExitViolation;
    return unknown ? kExitIndeterminate : kExitOk;
}

int cmd_prop4(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const std::size_t n = require(c.n, "--n");
    if (n < 4 || n > c.cap)
        throw UsageError("prop4 needs 4 <= n <= cap (" + std::to_string(c.cap) +
                         "); larger n is refused to bound the enumeration");
    const Prop4Report report = prop4_check(n, c.cap);
    emit(c, out, prop4_to_json(report));
    err << "D(C_" << n << "): chi = " << report.chi << ", " << report.colorings
        << " optimal colorings, at most " << report.max_singletons << " singleton classes\n";
    return report.holds() ? kExitOk : kExitViolation;
}

int cmd_conjecture(const RunConfig& c, std::ostream& out, std::ostream& err) {
    ScanConfig cfg;
    cfg.n = require(c.n, "--n");
    if (cfg.n < 4 || cfg.n > 8) throw UsageError("conjecture needs 4 <= n <= 8");
    cfg.trials = c.trials;
    cfg.seed = c.seed;
    cfg.budget = budget_of(c);
    static const std::map<std::string, SampleKind> kinds{
        {"random", SampleKind::Random},
        {"convex", SampleKind::Convex},
        {"double-chain", SampleKind::DoubleChain}};
    const auto it = kinds.find(c.kind);
    if (it == kinds.end()) throw UsageError("--kind must be random, convex or double-chain");
    cfg.kind = it->second;

    const ScanReport report = conjecture_scan(cfg);
    emit(c, out, scan_report_to_json(report));

    for (const std::string& path : archive_counterexamples(report, c.archive_dir))
        err << "COUNTEREXAMPLE archived to " << path << '\n';
    err << report.trials << " " << to_string(report.kind) << " samples of n = " << cfg.n
        << ": min chi = " << report.min_chi << ", f(n) = " << report.f_n << '\n';
    if (report.sampling_exhausted) err << "rejection sampling exhausted its redraw limit\n";
    return scan_exit_code(report);
}

}  // namespace

std::vector<std::string> archive_counterexamples(const ScanReport& report,
                                                 const std::string& dir) {
    std::vector<std::string> paths;
    for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
        std::filesystem::create_directories(dir);
        const auto path = std::filesystem::path(dir) /
                          ("counterexample_n" + std::to_string(report.n) + "_seed" +
                           std::to_string(report.seed) + "_" + std::to_string(i) + ".json");
        write_text_file(path.string(), points_to_json(report.counterexamples[i].points));
        paths.push_back(path.string());
    }
    return paths;
}

int scan_exit_code(const ScanReport& report) {
    if (!report.counterexamples.empty() || !report.mismatches.empty()) return kExitViolation;
    if (report.indeterminate || report.sampling_exhausted) return kExitIndeterminate;
    return kExitOk;
}

std::optional<int> parse_command_line(int argc, const char* const* argv, RunConfig& config,
                                      std::ostream& out, std::ostream& err) {
    CLI::App app{"Edge disjointness graphs of convex and double-chain point sets", "dchain"};
    app.require_subcommand(1);

    std::size_t k = 0, l = 0, n = 0;
    std::int64_t budget_ms = 0;
    std::vector<std::pair<CLI::App*, Command>> commands;

    auto add = [&](const char* name, const char* help, Command cmd) {
        CLI::App* sub = app.add_subcommand(name, help);
        commands.emplace_back(sub, cmd);
        return sub;
    };
    auto out_flag = [&](CLI::App* sub) {
        sub->add_option("--out", config.out_path, "Write the result here instead of stdout");
    };
    auto points_flag = [&](CLI::App* sub) {
        sub->add_option("--points", config.points_path, "Points JSON file")->required();
    };
    auto budget_flag = [&](CLI::App* sub) {
        sub->add_option("--budget-ms", budget_ms, "Time limit for exact search");
    };

    auto* gen = add("gen", "Write the points of C_n (--n) or C_{k,l} (--k --l)", Command::Gen);
    gen->add_option("--k", k);
    gen->add_option("--l", l);
    gen->add_option("--n", n);
    out_flag(gen);

    auto* validate = add("validate", "Check the double-chain conditions of a points file",
                         Command::Validate);
    points_flag(validate);
    out_flag(validate);

    auto* graph = add("graph", "Export D(P) as DIMACS or JSON", Command::Graph);
    points_flag(graph);
    graph->add_option("--format", config.format)->check(CLI::IsMember({"dimacs", "json"}));
    out_flag(graph);

    auto* formulas = add("formulas", "Table of n, g(n), f(n); or k + f(l) with --k --l",
                         Command::Formulas);
    formulas->add_option("--n", n, "Last n of the table");
    formulas->add_option("--n-min", config.n_min, "First n of the table");
    formulas->add_option("--k", k);
    formulas->add_option("--l", l);
    formulas->add_option("--format", config.format)->check(CLI::IsMember({"csv"}));
    out_flag(formulas);

    auto* chi = add("chi", "Exact chromatic number of D(P) with witness", Command::Chi);
    points_flag(chi);
    budget_flag(chi);
    out_flag(chi);

    auto* color = add("color", "Constructive coloring of D(C_{k,l})", Command::Color);
    color->add_option("--k", k)->required();
    color->add_option("--l", l)->required();
    budget_flag(color);
    out_flag(color);

    auto* verify = add("verify", "Check a coloring against a points file", Command::Verify);
    points_flag(verify);
    verify->add_option("--coloring", config.coloring_path, "Coloring JSON file")->required();
    out_flag(verify);

    auto* sweep = add("sweep", "Exact chi of D(C_{k,l}) against k + f(l) over k + l <= max-sum",
                      Command::Sweep);
    sweep->add_option("--max-sum", config.max_sum);
    sweep->add_flag("--convex", config.convex, "Sweep D(C_n) for n = 4..--n instead");
    sweep->add_option("--n", n);
    sweep->add_option("--format", config.format)->check(CLI::IsMember({"csv"}));
    budget_flag(sweep);
    out_flag(sweep);

    auto* prop4 = add("prop4", "Enumerate optimal colorings of D(C_n), count singleton classes",
                      Command::Prop4);
    prop4->add_option("--n", n)->required();
    prop4->add_option("--cap", config.cap, "Largest n accepted");
    out_flag(prop4);

    auto* conj = add("conjecture", "Seeded random scan for chi(D(P)) < f(n)", Command::Conjecture);
    conj->add_option("--n", n)->required();
    conj->add_option("--trials", config.trials);
    conj->add_option("--seed", config.seed);
    conj->add_option("--kind", config.kind)
        ->check(CLI::IsMember({"random", "convex", "double-chain"}));
    conj->add_option("--archive-dir", config.archive_dir, "Where counterexamples are written");
    budget_flag(conj);
    out_flag(conj);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (const auto& [sub, cmd] : commands) {
        if (!sub->parsed()) continue;
        config.command = cmd;
        auto given = [sub](const char* name) {
            const CLI::Option* opt = sub->get_option_no_throw(name);
            return opt != nullptr && opt->count() > 0;
        };
        if (given("--k")) config.k = k;
        if (given("--l")) config.l = l;
        if (given("--n")) config.n = n;
        if (given("--budget-ms")) config.budget_ms = budget_ms;
    }
    return std::nullopt;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    switch (config.command) {
        case Command::Gen: return cmd_gen(config, out, err);
        case Command::Validate: return cmd_validate(config, out, err);
        case Command::Graph: return cmd_graph(config, out, err);
        case Command::Formulas: return cmd_formulas(config, out, err);
        case Command::Chi: return cmd_chi(config, out, err);
        case Command::Color: return cmd_color(config, out, err);
        case Command::Verify: return cmd_verify(config, out, err);
        case Command::Sweep: return cmd_sweep(config, out, err);
        case Command::Prop4: return cmd_prop4(config, out, err);
        case Command::Conjecture: return cmd_conjecture(config, out, err);
    }
    return kExitUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    if (auto code = parse_command_line(argc, argv, config, out, err)) return *code;
    try {
        return run(config, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitViolation;
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"dchain"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dchain::cli
