#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cqsim/cqubit.hpp"

namespace cqsim {

// Nets are dense integer ids local to one Netlist.
using NetId = int;

enum class BlockKind { adder, subtractor, divider, inverter, wire };

// One ideal analog block. in_b is meaningful only for adder/subtractor;
// r1/r2 only for divider (series/shunt resistors of a voltage divider).
// Unused fields are left as -1 / 0.
struct AnalogBlock {
    BlockKind kind = BlockKind::wire;
    NetId in_a = -1;
    NetId in_b = -1;
    NetId out = -1;
    double r1 = 0.0;
    double r2 = 0.0;
};

// A DAG of blocks between four input nets and four output nets (channel
// order: c0_re, c0_im, c1_re, c1_im). Outputs may reference input nets
// directly; a valid netlist has every used net driven by exactly one
// source and no cycles (see validate_netlist).
struct Netlist {
    int net_count = 0;
    std::array<NetId, 4> inputs{-1, -1, -1, -1};
    std::array<NetId, 4> outputs{-1, -1, -1, -1};
    std::vector<AnalogBlock> blocks;

    NetId new_net() { return net_count++; }
};

// Voltage-divider transfer ratio r2/(r1+r2), always in (0,1) for positive
// resistors. Throws std::domain_error on non-positive resistance.
double divider_ratio(double r1, double r2);

// Inverse design problem: the shunt resistor that makes divider_ratio hit
// `target` given the series resistor r1. Requires target in (0,1) — ratios
// of 0, 1 or negative sign are wiring (drop/wire/inverter), not resistors.
double design_divider(double target, double r1);

// Sum/difference first, then four dividers at ratio 1/sqrt2. r2_override
// forces a specific shunt resistor on every divider (e.g. a catalog value)
// instead of the exact designed one.
Netlist build_hadamard_netlist(double divider_r1,
                               std::optional<double> r2_override = std::nullopt);

// Pure wiring permutation (c0 <-> c1 channel pairs); contains no blocks.
Netlist build_x_netlist();

// Phase rotation of the c1 pair by phi_gate; c0 passes through wires.
// Coefficients cos(phi) and sin(phi) become divider/inverter/wire chains
// (or dropped branches at zero), feeding one subtractor for c1_re and one
// adder for c1_im; when a branch drops, the surviving chain drives the
// output directly. r2_override applies to every divider emitted, so it is
// only meaningful when all coefficient magnitudes coincide (e.g. pi/4).
Netlist build_rphi_netlist(double phi_gate, double divider_r1,
                           std::optional<double> r2_override = std::nullopt);

// Checks structural invariants: all net references in range, every used
// net driven by exactly one block or input, positive divider resistors,
// and an acyclic wiring graph. Throws std::invalid_argument describing the
// first violation found.
void validate_netlist(const Netlist& n);

// Evaluates the blocks in topological order over the whole sample grid
// (array kernels per block). Validates first; output grid matches input.
ChannelQuadWave simulate_netlist(const Netlist& n, const ChannelQuadWave& input);

// Multiplies every divider resistor by an independent factor uniform in
// [1 - tol_pct/100, 1 + tol_pct/100], deterministically from seed. The
// underlying draws do not depend on tol_pct, so for a fixed seed the
// perturbation scales continuously (and each divider's ratio error grows
// monotonically) with the tolerance. Topology is unchanged.
Netlist perturb_resistors(const Netlist& n, double tol_pct, std::uint64_t seed);

// One line per block plus the input/output wiring; for debug dumps.
std::string describe_netlist(const Netlist& n);

}  // namespace cqsim
