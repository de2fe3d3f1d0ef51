#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dchain/experiments.hpp"

namespace dchain::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,
    kExitUsage = 2,
    kExitIndeterminate = 3,
};

enum class Command { Gen, Validate, Graph, Formulas, Chi, Color, Verify, Sweep, Prop4, Conjecture };

struct RunConfig {
    Command command = Command::Formulas;
    std::optional<std::size_t> k;
    std::optional<std::size_t> l;
    std::optional<std::size_t> n;
    std::size_t n_min = 1;
    std::size_t max_sum = 9;
    std::size_t cap = 6;
    bool convex = false;
    std::uint64_t seed = 1;
    std::size_t trials = 200;
    std::string kind = "random";
    std::optional<std::int64_t> budget_ms;
    std::string points_path;
    std::string coloring_path;
    std::string out_path;
    std::string archive_dir = ".";
    std::string format;
};

/// Writes each counterexample of a scan to
/// <dir>/counterexample_n<N>_seed<S>_<i>.json and returns the paths.
std::vector<std::string> archive_counterexamples(const ScanReport& report, const std::string& dir);

/// 1 on counterexamples or mismatches, 3 on unresolved samples, else 0.
int scan_exit_code(const ScanReport& report);

/// Parses argv. Returns the exit code to use when parsing ends the run
/// (help, usage error); otherwise fills `config`.
std::optional<int> parse_command_line(int argc, const char* const* argv, RunConfig& config,
                                      std::ostream& out, std::ostream& err);

/// Executes one subcommand. Machine-readable output goes to `out` (or the
/// --out file), the human-readable summary to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line + run, mapping exceptions to exit codes.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dchain::cli
