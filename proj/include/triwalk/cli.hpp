#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "triwalk/analytics.hpp"
#include "triwalk/initial_states.hpp"
#include "triwalk/rule.hpp"

namespace triwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalFailure = 3;
inline constexpr int kExitReproductionFail = 4;

enum class OutputFormat { csv, json };

const char* to_string(OutputFormat format);

struct RunConfig {
    CoinStateSpec initial = SeparableSpec{0};
    std::string rule = "unanimous";  ///< builtin name or rule-file path
    int steps = 10;
    int lattice = 50;
    OutputFormat format = OutputFormat::csv;
    std::filesystem::path out;
};

/// Parses "separable:<bits>", "ghz", "theta:<radians>" or
/// "custom:<8 comma-separated complex amplitudes>" (e.g. "0.6,0,0,0,0,0,0,0.8i").
CoinStateSpec parse_init_spec(const std::string& text);

/// Reads a flat key=value config file ('#' comments, blank lines ignored).
/// Keys mirror the run flags: init, rule, steps, lattice, format, out.
/// Unknown keys are an error; command-line flags take precedence.
std::map<std::string, std::string> read_config_file(
    const std::filesystem::path& path);

/// "unanimous" or a path to a rule file.
ShiftRule load_rule(const std::string& name_or_path);

/// Throws DomainError for invalid field values, including N < T.
void validate(const RunConfig& config);

/// Evolves the walk from site 0 and captures one InfoRecord per step,
/// t = 0..steps.
Trajectory run_trajectory(const CoinStateSpec& initial, const ShiftRule& rule,
                          int steps, int lattice);

std::string trajectory_csv(const Trajectory& trajectory);
std::string distribution_csv(const Trajectory& trajectory, int lattice);
std::string trajectory_json(const Trajectory& trajectory,
                            const RunConfig& config);

/// Runs the configured walk and writes the trajectory to config.out; CSV
/// output adds the sibling distribution file "<out>.dist.csv".
int cmd_run(const RunConfig& config, std::ostream& log);

/// Checks the first two steps of the three built-in starting states against
/// the published reference values at tolerance 5e-4; prints one line per
/// table cell.
int cmd_reproduce_table1(std::ostream& out);

/// Reports MI_ghz(T) / MI_sep(T) - 1 and compares it with the published
/// ~18% enhancement claim (band [0.15, 0.21]).
int cmd_enhancement(int steps, int lattice, std::ostream& out);

/// One trajectory per theta in the grid; rows ordered by theta then t.
int cmd_sweep(const std::vector<double>& theta_grid, int steps, int lattice,
              OutputFormat format, const std::filesystem::path& out_path,
              std::ostream& log);

/// Parses a rule (builtin name or file) and prints its diagnostics.
int cmd_rule_check(const std::string& name_or_path, std::ostream& out);

}  // namespace triwalk::cli
