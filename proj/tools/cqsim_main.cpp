// cqsim: compiles .cq gate programs onto the ideal or analog-netlist backend
// and emits waveform CSVs. See README.md for the file format and flags.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cqsim/dsl.hpp"
#include "cqsim/harness.hpp"
#include "cqsim/netlist.hpp"

namespace {

using namespace cqsim;

// Exit codes: 0 success, 1 tolerance failure, 2 parse/usage error.
constexpr int exit_ok = 0;
constexpr int exit_tolerance = 1;
constexpr int exit_usage = 2;

std::string fmt_g(double v, int digits = 6) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

// Reads and parses a .cq file, printing diagnostics to stderr. Empty on
// failure.
std::optional<Program> load_program(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return std::nullopt;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    ParseResult res = parse_program(ss.str());
    for (const ParseDiagnostic& d : res.diagnostics) {
        std::cerr << format_diagnostic(path, d) << "\n";
    }
    if (!res.ok()) return std::nullopt;
    return std::move(res.program);
}

// Shared grid/backend/divider flags of run-like commands. backend_str is
// translated into cfg.backend after parsing.
void add_run_flags(CLI::App* cmd, RunConfig& cfg, std::string& backend_str) {
    cmd->add_option("--t0", cfg.t0, "grid start, seconds")->capture_default_str();
    cmd->add_option("--t1", cfg.t1, "grid end (inclusive), seconds")->capture_default_str();
    cmd->add_option("--samples", cfg.samples, "grid point count, >= 2")
        ->capture_default_str();
    cmd->add_option("--backend", backend_str, "ideal | netlist")
        ->check(CLI::IsMember({"ideal", "netlist"}))
        ->capture_default_str();
    cmd->add_option("--divider-r1", cfg.divider_r1,
                    "series resistor of netlist dividers, ohms")
        ->capture_default_str();
    cmd->add_option("--divider-r2", cfg.divider_r2,
                    "force the shunt resistor of every netlist divider, ohms "
                    "(default: designed for the exact ratio)");
    cmd->add_option("--resistor-tol", cfg.resistor_tol_pct,
                    "netlist resistor tolerance, percent")
        ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "resistor perturbation seed")
        ->capture_default_str();
}

// Runs a program, writes the CSV, prints the summary. tol, when present,
// turns the max |norm-1| summary line into a pass/fail gate.
int run_and_emit(const Program& p, RunConfig cfg, const std::string& label,
                 std::optional<double> tol) {
    if (cfg.backend == Backend::ideal && cfg.resistor_tol_pct > 0.0) {
        std::cerr << "note: --resistor-tol has no effect on the ideal backend\n";
    }
    const RunResult r = run_program(p, cfg);

    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << cfg.out_path << "\n";
        return exit_usage;
    }
    write_csv(out, r.input, r.output);
    out.close();
    if (!out) {
        std::cerr << "error: failed writing " << cfg.out_path << "\n";
        return exit_usage;
    }

    std::cout << "program: " << label << "\n";
    std::cout << "backend: " << (cfg.backend == Backend::ideal ? "ideal" : "netlist")
              << "\n";
    if (cfg.backend == Backend::netlist && cfg.resistor_tol_pct > 0.0) {
        std::cout << "resistor tol: " << fmt_g(cfg.resistor_tol_pct)
                  << "% (seed " << cfg.seed << ")\n";
    }
    std::cout << "grid: t0=" << format_double(cfg.t0) << " t1=" << format_double(cfg.t1)
              << " samples=" << cfg.samples << "\n";
    std::cout << "max |norm-1|: " << fmt_g(r.max_norm_dev) << "\n";
    std::cout << "csv: " << cfg.out_path << "\n";
    if (tol) {
        const bool pass = r.max_norm_dev < *tol;
        std::cout << "tolerance " << fmt_g(*tol) << ": " << (pass ? "PASS" : "FAIL")
                  << "\n";
        if (!pass) return exit_tolerance;
    }
    return exit_ok;
}

int do_design_divider(double ratio, double r1) {
    const double r2 = design_divider(ratio, r1);  // throws on bad ratio/r1
    std::cout << "r2 = " << fmt_g(r2) << " ohm\n";
    std::cout << "achieved ratio = " << fmt_g(divider_ratio(r1, r2), 9) << "\n";
    return exit_ok;
}

int do_compare(const Program& p, const RunConfig& cfg, double tol) {
    const DeviationReport rep = compare_backends(p, cfg);
    static const char* names[4] = {"c0_re", "c0_im", "c1_re", "c1_im"};
    for (int ch = 0; ch < 4; ++ch) {
        std::cout << names[ch] << ": max " << fmt_g(rep.channels[ch].max_abs) << " rms "
                  << fmt_g(rep.channels[ch].rms) << "\n";
    }
    const bool pass = rep.max_overall < tol;
    std::cout << "max deviation: " << fmt_g(rep.max_overall) << " (tol " << fmt_g(tol)
              << "): " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? exit_ok : exit_tolerance;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classical four-channel qubit signal simulator"};
    app.require_subcommand(1);

    // --- run <file.cq> ---
    RunConfig run_cfg;
    std::string run_backend = "ideal";
    std::string run_file;
    std::optional<double> run_tol;
    CLI::App* run_cmd = app.add_subcommand("run", "run a .cq program and emit CSV");
    run_cmd->add_option("file", run_file, "program file (.cq)")->required();
    add_run_flags(run_cmd, run_cfg, run_backend);
    run_cmd->add_option("--out", run_cfg.out_path,
                        "CSV output path (default: program stem + .csv)");
    run_cmd->add_option("--tol", run_tol,
                        "fail (exit 1) when max |norm-1| reaches this bound");

    // --- demo hadamard | demo rphi ---
    RunConfig demo_cfg;
    std::string demo_backend = "ideal";
    std::string demo_which;
    std::optional<double> demo_tol;
    CLI::App* demo_cmd = app.add_subcommand("demo", "run a built-in demo program");
    demo_cmd->add_option("which", demo_which, "hadamard | rphi")
        ->required()
        ->check(CLI::IsMember({"hadamard", "rphi"}));
    add_run_flags(demo_cmd, demo_cfg, demo_backend);
    demo_cmd->add_option("--out", demo_cfg.out_path,
                         "CSV output path (default: demo_<which>.csv)");
    demo_cmd->add_option("--tol", demo_tol,
                         "fail (exit 1) when max |norm-1| reaches this bound");

    // --- design-divider ---
    double dd_ratio = 0.0;
    double dd_r1 = 10e3;
    CLI::App* dd_cmd =
        app.add_subcommand("design-divider", "solve the shunt resistor for a target ratio");
    dd_cmd->add_option("--ratio", dd_ratio, "target ratio, strictly in (0,1)")->required();
    dd_cmd->add_option("--r1", dd_r1, "series resistor, ohms")->capture_default_str();

    // --- compare-backends <file.cq> ---
    RunConfig cmp_cfg;
    std::string cmp_backend = "ideal";  // unused; compare always runs both
    std::string cmp_file;
    double cmp_tol = 1e-9;
    CLI::App* cmp_cmd = app.add_subcommand(
        "compare-backends", "run ideal and netlist backends and report deviations");
    cmp_cmd->add_option("file", cmp_file, "program file (.cq)")->required();
    add_run_flags(cmp_cmd, cmp_cfg, cmp_backend);
    cmp_cmd->get_option("--backend")->group("");  // hidden: both always run
    cmp_cmd->add_option("--tol", cmp_tol, "max deviation accepted for exit code 0")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (run_cmd->parsed()) {
            run_cfg.backend = run_backend == "netlist" ? Backend::netlist : Backend::ideal;
            if (run_cfg.out_path.empty()) {
                run_cfg.out_path = std::filesystem::path(run_file).stem().string() + ".csv";
            }
            const std::optional<Program> p = load_program(run_file);
            if (!p) return exit_usage;
            return run_and_emit(*p, run_cfg, run_file, run_tol);
        }
        if (demo_cmd->parsed()) {
            demo_cfg.backend = demo_backend == "netlist" ? Backend::netlist : Backend::ideal;
            if (demo_cfg.out_path.empty()) demo_cfg.out_path = "demo_" + demo_which + ".csv";
            const Program p =
                demo_which == "hadamard" ? demo_hadamard_program() : demo_rphi_program();
            return run_and_emit(p, demo_cfg, "demo " + demo_which, demo_tol);
        }
        if (dd_cmd->parsed()) {
            return do_design_divider(dd_ratio, dd_r1);
        }
        if (cmp_cmd->parsed()) {
            const std::optional<Program> p = load_program(cmp_file);
            if (!p) return exit_usage;
            return do_compare(*p, cmp_cfg, cmp_tol);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}
