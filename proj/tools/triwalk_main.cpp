#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triwalk/cli.hpp"
#include "triwalk/version.hpp"

namespace cli = triwalk::cli;

namespace {

int parse_int_strict(const std::string& text, const char* what) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const long value = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0') {
        throw triwalk::DomainError(std::string("cannot parse ") + what +
                                   " '" + text + "'");
    }
    return static_cast<int>(value);
}

std::vector<double> parse_theta_list(const std::string& text) {
    std::vector<double> thetas;
    if (text.empty()) {
        return thetas;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t pos = text.find(',', start);
        const std::string item =
            text.substr(start, pos == std::string::npos ? std::string::npos
                                                        : pos - start);
        const char* begin = item.c_str();
        char* end = nullptr;
        const double value = std::strtod(begin, &end);
        if (end == begin || *end != '\0') {
            throw triwalk::DomainError("cannot parse theta value '" + item +
                                       "'");
        }
        thetas.push_back(value);
        if (pos == std::string::npos) {
            break;
        }
        start = pos + 1;
    }
    return thetas;
}

cli::OutputFormat parse_format(const std::string& name) {
    if (name == "csv") {
        return cli::OutputFormat::csv;
    }
    if (name == "json") {
        return cli::OutputFormat::json;
    }
    throw triwalk::DomainError("format must be csv or json, got '" + name +
                               "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triwalk: discrete-time quantum walk with three coins and a "
                 "conditional displacement rule"};
    app.set_version_flag("--version", triwalk::kVersion);
    app.require_subcommand(1);

    int exit_code = cli::kExitOk;

    // run
    std::string run_init;
    std::string run_rule = "unanimous";
    std::string run_format = "csv";
    std::string run_out;
    std::string run_config;
    int run_steps = -1;
    int run_lattice = 50;
    CLI::App* run = app.add_subcommand(
        "run", "Evolve a walk and export its trajectory");
    run->add_option("--init", run_init,
                    "Initial coin state: separable:<bits>|ghz|theta:<radians>|"
                    "custom:<8 comma-separated complex amplitudes>");
    run->add_option("--rule", run_rule, "Rule file path or 'unanimous'");
    run->add_option("--steps", run_steps, "Number of walk steps");
    run->add_option("--lattice", run_lattice,
                    "Lattice half-width N (default 50)");
    run->add_option("--format", run_format, "Output format: csv or json");
    run->add_option("--out", run_out, "Output file path");
    run->add_option("--config", run_config,
                    "Flat key=value config file mirroring the flags; "
                    "flags override the file");
    run->callback([&] {
        if (!run_config.empty()) {
            const auto file = cli::read_config_file(run_config);
            const auto fallback =
                [&](const char* flag,
                    const char* key) -> const std::string* {
                if (run->count(flag) > 0) {
                    return nullptr;  // flags win
                }
                const auto it = file.find(key);
                return it == file.end() ? nullptr : &it->second;
            };
            if (const auto* v = fallback("--init", "init")) run_init = *v;
            if (const auto* v = fallback("--rule", "rule")) run_rule = *v;
            if (const auto* v = fallback("--steps", "steps")) {
                run_steps = parse_int_strict(*v, "steps");
            }
            if (const auto* v = fallback("--lattice", "lattice")) {
                run_lattice = parse_int_strict(*v, "lattice");
            }
            if (const auto* v = fallback("--format", "format")) {
                run_format = *v;
            }
            if (const auto* v = fallback("--out", "out")) run_out = *v;
        }
        if (run_init.empty()) {
            throw triwalk::DomainError(
                "--init is required (flag or config file)");
        }
        if (run_steps < 0) {
            throw triwalk::DomainError(
                "--steps is required (flag or config file)");
        }
        if (run_out.empty()) {
            throw triwalk::DomainError(
                "--out is required (flag or config file)");
        }
        cli::RunConfig config;
        config.initial = cli::parse_init_spec(run_init);
        config.rule = run_rule;
        config.steps = run_steps;
        config.lattice = run_lattice;
        config.format = parse_format(run_format);
        config.out = run_out;
        exit_code = cli::cmd_run(config, std::cout);
    });

    // reproduce-table1
    CLI::App* reproduce = app.add_subcommand(
        "reproduce-table1",
        "Check the first two steps of the three built-in starting states "
        "against the published reference values");
    reproduce->callback(
        [&] { exit_code = cli::cmd_reproduce_table1(std::cout); });

    // enhancement
    int enhancement_steps = 10;
    int enhancement_lattice = 50;
    CLI::App* enhancement = app.add_subcommand(
        "enhancement",
        "Report the GHZ-over-separable mutual-information enhancement");
    enhancement->add_option("--steps", enhancement_steps,
                            "Number of walk steps (default 10)");
    enhancement->add_option("--lattice", enhancement_lattice,
                            "Lattice half-width N (default 50)");
    enhancement->callback([&] {
        exit_code =
            cli::cmd_enhancement(enhancement_steps, enhancement_lattice,
                                 std::cout);
    });

    // sweep
    std::string sweep_thetas;
    std::string sweep_format = "csv";
    std::string sweep_out;
    int sweep_steps = -1;
    int sweep_lattice = 50;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Run one walk per theta in a grid of initial states");
    sweep->add_option("--thetas", sweep_thetas,
                      "Comma-separated theta values in [0, pi/2]");
    sweep->add_option("--steps", sweep_steps, "Number of walk steps")
        ->required();
    sweep->add_option("--lattice", sweep_lattice,
                      "Lattice half-width N (default 50)");
    sweep->add_option("--format", sweep_format, "Output format: csv or json");
    sweep->add_option("--out", sweep_out, "Output file path")->required();
    sweep->callback([&] {
        exit_code = cli::cmd_sweep(parse_theta_list(sweep_thetas),
                                   sweep_steps, sweep_lattice,
                                   parse_format(sweep_format), sweep_out,
                                   std::cout);
    });

    // rule-check
    std::string rule_arg;
    CLI::App* rule_check = app.add_subcommand(
        "rule-check", "Parse a rule file and print its diagnostics");
    rule_check->add_option("rule", rule_arg, "Rule file path or 'unanimous'")
        ->required();
    rule_check->callback(
        [&] { exit_code = cli::cmd_rule_check(rule_arg, std::cout); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? cli::kExitOk : cli::kExitConfigError;
    } catch (const triwalk::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return cli::kExitNumericalFailure;
    } catch (const triwalk::BoundaryError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return cli::kExitNumericalFailure;
    } catch (const triwalk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitConfigError;
    }
    return exit_code;
}
