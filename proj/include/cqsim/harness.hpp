#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "cqsim/cqubit.hpp"
#include "cqsim/dsl.hpp"

namespace cqsim {

// Everything a run needs besides the program itself. Defaults reproduce the
// demo grid: two carrier periods at 1 GHz, 1000 points inclusive of both
// endpoints.
struct RunConfig {
    double t0 = 0.0;                  // s
    double t1 = 2e-9;                 // s
    int samples = 1000;               // >= 2; endpoints included
    Backend backend = Backend::ideal;
    double divider_r1 = 10e3;         // ohms
    std::optional<double> divider_r2; // force every divider's shunt resistor
    double resistor_tol_pct = 0.0;    // 0 = exact resistors
    std::uint64_t seed = 0;           // perturbation seed
    std::string out_path;             // consumed by the CLI, not run_program

    double dt() const { return (t1 - t0) / static_cast<double>(samples - 1); }
};

// Throws std::invalid_argument on a config run_program cannot honor
// (t1 <= t0, samples < 2, negative tolerance, non-positive resistors).
void validate_config(const RunConfig& c);

struct RunResult {
    ChannelQuadWave input;
    ChannelQuadWave output;
    // max over output rows of |row norm - 1| (norm of the 4-vector).
    double max_norm_dev = 0.0;
};

// Samples the program's initial cqubit over the grid, compiles onto the
// configured backend (perturbing resistors when requested) and applies it.
RunResult run_program(const Program& p, const RunConfig& c);

// CSV with header t,in_c0re,...,out_c1im; one row per sample, shortest
// round-trip float spelling, LF endings. Byte-deterministic.
void write_csv(std::ostream& os, const ChannelQuadWave& input,
               const ChannelQuadWave& output);

// Built-in programs behind `demo hadamard` / `demo rphi`: a 1 GHz carrier
// through a single H, and through a pi/4 phase rotation with the |1> branch
// populated (varphi = beta = pi/2).
Program demo_hadamard_program();
Program demo_rphi_program();

struct ChannelDeviation {
    double max_abs = 0.0;
    double rms = 0.0;
};

// Channel order: c0_re, c0_im, c1_re, c1_im.
struct DeviationReport {
    std::array<ChannelDeviation, 4> channels{};
    double max_overall = 0.0;
};

// Runs the ideal and netlist backends over the same grid (the netlist side
// honoring divider/tolerance settings; c.backend is ignored) and reports the
// per-channel output deviation.
DeviationReport compare_backends(const Program& p, const RunConfig& c);

}  // namespace cqsim
