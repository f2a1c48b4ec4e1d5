#include "cqsim/netlist.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqsim/kernels.hpp"
#include "cqsim/signal.hpp"

namespace cqsim {

namespace {

const char* kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::adder: return "adder";
        case BlockKind::subtractor: return "subtractor";
        case BlockKind::divider: return "divider";
        case BlockKind::inverter: return "inverter";
        case BlockKind::wire: return "wire";
    }
    return "?";
}

bool is_binary(BlockKind k) {
    return k == BlockKind::adder || k == BlockKind::subtractor;
}

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("netlist: " + msg); }

// Runs every structural check and returns the blocks in an evaluation order
// (Kahn). Shared by validate_netlist and simulate_netlist.
std::vector<int> topo_order(const Netlist& n) {
    if (n.net_count <= 0) fail("empty net space");
    auto check_net = [&](NetId id, const char* what) {
        if (id < 0 || id >= n.net_count) {
            fail(std::string(what) + " net " + std::to_string(id) + " out of range");
        }
    };

    // -2 undriven, -1 driven by an input, >=0 index of the driving block.
    std::vector<int> driver(static_cast<std::size_t>(n.net_count), -2);
    for (int i = 0; i < 4; ++i) {
        check_net(n.inputs[i], "input");
        if (driver[n.inputs[i]] != -2) fail("two inputs share net " + std::to_string(n.inputs[i]));
        driver[n.inputs[i]] = -1;
    }
    for (std::size_t bi = 0; bi < n.blocks.size(); ++bi) {
        const AnalogBlock& b = n.blocks[bi];
        check_net(b.out, "block output");
        if (driver[b.out] != -2) fail("net " + std::to_string(b.out) + " driven twice");
        driver[b.out] = static_cast<int>(bi);
        check_net(b.in_a, "block input");
        if (is_binary(b.kind)) check_net(b.in_b, "block input");
        if (b.kind == BlockKind::divider &&
            !(b.r1 > 0.0 && b.r2 > 0.0 && std::isfinite(b.r1) && std::isfinite(b.r2))) {
            fail("divider resistors must be positive and finite");
        }
    }

    // Every net a block reads, and every output net, must have a driver.
    auto require_driven = [&](NetId id, const char* what) {
        if (driver[id] == -2) {
            fail(std::string(what) + " net " + std::to_string(id) + " is not driven");
        }
    };
    for (const AnalogBlock& b : n.blocks) {
        require_driven(b.in_a, "block input");
        if (is_binary(b.kind)) require_driven(b.in_b, "block input");
    }
    for (int i = 0; i < 4; ++i) {
        check_net(n.outputs[i], "output");
        require_driven(n.outputs[i], "output");
    }

    // Kahn over block-to-block dependencies.
    const std::size_t nb = n.blocks.size();
    std::vector<int> indeg(nb, 0);
    std::vector<std::vector<int>> succ(nb);
    auto add_edge = [&](NetId src, std::size_t dst) {
        const int d = driver[src];
        if (d >= 0) {
            succ[static_cast<std::size_t>(d)].push_back(static_cast<int>(dst));
            ++indeg[dst];
        }
    };
    for (std::size_t bi = 0; bi < nb; ++bi) {
        add_edge(n.blocks[bi].in_a, bi);
        if (is_binary(n.blocks[bi].kind)) add_edge(n.blocks[bi].in_b, bi);
    }
    std::vector<int> order;
    order.reserve(nb);
    std::vector<int> queue;
    for (std::size_t bi = 0; bi < nb; ++bi) {
        if (indeg[bi] == 0) queue.push_back(static_cast<int>(bi));
    }
    while (!queue.empty()) {
        const int b = queue.back();
        queue.pop_back();
        order.push_back(b);
        for (int s : succ[static_cast<std::size_t>(b)]) {
            if (--indeg[static_cast<std::size_t>(s)] == 0) queue.push_back(s);
        }
    }
    if (order.size() != nb) fail("wiring contains a cycle");
    return order;
}

// Treat float residues of analytically-zero coefficients (e.g. sin at a
// multiple of pi evaluates to ~1e-16, not 0) as exact zeros so the emitted
// circuit drops the branch instead of synthesizing a femto-scale divider.
double snap_zero(double v) { return std::abs(v) < 1e-12 ? 0.0 : v; }

}  // namespace

double divider_ratio(double r1, double r2) {
    if (!(r1 > 0.0) || !(r2 > 0.0) || !std::isfinite(r1) || !std::isfinite(r2)) {
        throw std::domain_error("divider_ratio: resistances must be positive and finite");
    }
    return r2 / (r1 + r2);
}

double design_divider(double target, double r1) {
    if (!(target > 0.0) || !(target < 1.0)) {
        throw std::domain_error("design_divider: target ratio must lie strictly in (0,1), got " +
                                std::to_string(target));
    }
    if (!(r1 > 0.0) || !std::isfinite(r1)) {
        throw std::domain_error("design_divider: r1 must be positive and finite");
    }
    return r1 * target / (1.0 - target);
}

Netlist build_hadamard_netlist(double divider_r1, std::optional<double> r2_override) {
    const double r2 = r2_override ? *r2_override : design_divider(inv_sqrt2, divider_r1);
    Netlist n;
    const NetId a = n.new_net(), b = n.new_net(), c = n.new_net(), d = n.new_net();
    n.inputs = {a, b, c, d};

    // Stage 1: sums and differences of the paired channels.
    const NetId sum_re = n.new_net(), sum_im = n.new_net();
    const NetId dif_re = n.new_net(), dif_im = n.new_net();
    n.blocks.push_back({BlockKind::adder, a, c, sum_re, 0.0, 0.0});
    n.blocks.push_back({BlockKind::adder, b, d, sum_im, 0.0, 0.0});
    n.blocks.push_back({BlockKind::subtractor, a, c, dif_re, 0.0, 0.0});
    n.blocks.push_back({BlockKind::subtractor, b, d, dif_im, 0.0, 0.0});

    // Stage 2: scale each by 1/sqrt2 with a voltage divider.
    for (NetId src : {sum_re, sum_im, dif_re, dif_im}) {
        const NetId out = n.new_net();
        n.blocks.push_back({BlockKind::divider, src, -1, out, divider_r1, r2});
    }
    n.outputs = {n.blocks[4].out, n.blocks[5].out, n.blocks[6].out, n.blocks[7].out};
    return n;
}

Netlist build_x_netlist() {
    Netlist n;
    const NetId a = n.new_net(), b = n.new_net(), c = n.new_net(), d = n.new_net();
    n.inputs = {a, b, c, d};
    n.outputs = {c, d, a, b};
    return n;
}

namespace {

// Emits the block chain realizing (coef * src) for coef in [-1,1]\{0}:
// wire/inverter at magnitude 1, divider (plus inverter for negative sign)
// otherwise. Returns the net carrying the scaled signal.
NetId emit_scale_chain(Netlist& n, NetId src, double coef, double r1,
                       const std::optional<double>& r2_override) {
    const double mag = std::abs(coef);
    NetId cur = src;
    if (mag == 1.0) {
        if (coef > 0.0) {
            const NetId out = n.new_net();
            n.blocks.push_back({BlockKind::wire, cur, -1, out, 0.0, 0.0});
            return out;
        }
    } else {
        const double r2 = r2_override ? *r2_override : design_divider(mag, r1);
        const NetId out = n.new_net();
        n.blocks.push_back({BlockKind::divider, cur, -1, out, r1, r2});
        cur = out;
        if (coef > 0.0) return cur;
    }
    const NetId out = n.new_net();
    n.blocks.push_back({BlockKind::inverter, cur, -1, out, 0.0, 0.0});
    return out;
}

}  // namespace

Netlist build_rphi_netlist(double phi_gate, double divider_r1,
                           std::optional<double> r2_override) {
    if (!(divider_r1 > 0.0) || !std::isfinite(divider_r1)) {
        throw std::domain_error("build_rphi_netlist: divider_r1 must be positive and finite");
    }
    const double phi = wrap_angle(phi_gate);
    const double c = snap_zero(std::cos(phi));
    const double s = snap_zero(std::sin(phi));

    Netlist n;
    const NetId c0_re = n.new_net(), c0_im = n.new_net();
    const NetId c1_re = n.new_net(), c1_im = n.new_net();
    n.inputs = {c0_re, c0_im, c1_re, c1_im};

    // The |0> pair is untouched by the rotation; buffer it straight through.
    n.outputs[0] = n.new_net();
    n.blocks.push_back({BlockKind::wire, c0_re, -1, n.outputs[0], 0.0, 0.0});
    n.outputs[1] = n.new_net();
    n.blocks.push_back({BlockKind::wire, c0_im, -1, n.outputs[1], 0.0, 0.0});

    // c1_re' = c*c1_re - s*c1_im. When one coefficient vanishes the combiner
    // disappears and the surviving chain (sign folded in) drives the output.
    if (c != 0.0 && s != 0.0) {
        const NetId ta = emit_scale_chain(n, c1_re, c, divider_r1, r2_override);
        const NetId tb = emit_scale_chain(n, c1_im, s, divider_r1, r2_override);
        n.outputs[2] = n.new_net();
        n.blocks.push_back({BlockKind::subtractor, ta, tb, n.outputs[2], 0.0, 0.0});
    } else if (s == 0.0) {
        n.outputs[2] = emit_scale_chain(n, c1_re, c, divider_r1, r2_override);
    } else {
        n.outputs[2] = emit_scale_chain(n, c1_im, -s, divider_r1, r2_override);
    }

    // c1_im' = c*c1_im + s*c1_re.
    if (c != 0.0 && s != 0.0) {
        const NetId tc = emit_scale_chain(n, c1_im, c, divider_r1, r2_override);
        const NetId td = emit_scale_chain(n, c1_re, s, divider_r1, r2_override);
        n.outputs[3] = n.new_net();
        n.blocks.push_back({BlockKind::adder, tc, td, n.outputs[3], 0.0, 0.0});
    } else if (s == 0.0) {
        n.outputs[3] = emit_scale_chain(n, c1_im, c, divider_r1, r2_override);
    } else {
        n.outputs[3] = emit_scale_chain(n, c1_re, s, divider_r1, r2_override);
    }
    return n;
}

void validate_netlist(const Netlist& n) { (void)topo_order(n); }

ChannelQuadWave simulate_netlist(const Netlist& n, const ChannelQuadWave& input) {
    const std::vector<int> order = topo_order(n);
    const std::size_t ns = input.size();
    if (ns == 0) fail("cannot simulate over an empty sample grid");
    if (input.c0_im.size() != ns || input.c1_re.size() != ns || input.c1_im.size() != ns) {
        fail("input channels disagree on sample count");
    }

    const auto& k = kernels::active_ops();
    std::vector<std::vector<double>> net_values(static_cast<std::size_t>(n.net_count));
    net_values[n.inputs[0]] = input.c0_re;
    net_values[n.inputs[1]] = input.c0_im;
    net_values[n.inputs[2]] = input.c1_re;
    net_values[n.inputs[3]] = input.c1_im;

    for (int bi : order) {
        const AnalogBlock& b = n.blocks[static_cast<std::size_t>(bi)];
        std::vector<double>& out = net_values[b.out];
        out.resize(ns);
        const double* a = net_values[b.in_a].data();
        switch (b.kind) {
            case BlockKind::adder:
                k.add(out.data(), a, net_values[b.in_b].data(), ns);
                break;
            case BlockKind::subtractor:
                k.sub(out.data(), a, net_values[b.in_b].data(), ns);
                break;
            case BlockKind::divider:
                k.scale(out.data(), a, divider_ratio(b.r1, b.r2), ns);
                break;
            case BlockKind::inverter:
                k.negate(out.data(), a, ns);
                break;
            case BlockKind::wire:
                out = net_values[b.in_a];
                break;
        }
    }

    ChannelQuadWave result;
    result.t0 = input.t0;
    result.dt = input.dt;
    result.c0_re = net_values[n.outputs[0]];
    result.c0_im = net_values[n.outputs[1]];
    result.c1_re = net_values[n.outputs[2]];
    result.c1_im = net_values[n.outputs[3]];
    return result;
}

Netlist perturb_resistors(const Netlist& n, double tol_pct, std::uint64_t seed) {
    if (!(tol_pct >= 0.0)) {
        throw std::domain_error("perturb_resistors: tol_pct must be >= 0");
    }
    std::mt19937_64 rng(seed);
    // Top 53 bits -> [0,1) -> [-1,1]. Hand-rolled instead of
    // uniform_real_distribution, whose output is not reproducible across
    // standard library implementations.
    auto next_unit = [&rng] {
        const double u01 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        return 2.0 * u01 - 1.0;
    };
    Netlist out = n;
    const double t = tol_pct / 100.0;
    for (AnalogBlock& b : out.blocks) {
        if (b.kind != BlockKind::divider) continue;
        b.r1 *= 1.0 + t * next_unit();
        b.r2 *= 1.0 + t * next_unit();
    }
    return out;
}

std::string describe_netlist(const Netlist& n) {
    std::string s;
    char line[160];
    std::snprintf(line, sizeof line, "nets=%d inputs=[%d %d %d %d] outputs=[%d %d %d %d]\n",
                  n.net_count, n.inputs[0], n.inputs[1], n.inputs[2], n.inputs[3],
                  n.outputs[0], n.outputs[1], n.outputs[2], n.outputs[3]);
    s += line;
    for (std::size_t bi = 0; bi < n.blocks.size(); ++bi) {
        const AnalogBlock& b = n.blocks[bi];
        if (b.kind == BlockKind::divider) {
            std::snprintf(line, sizeof line,
                          "b%zu: divider n%d -> n%d  r1=%.6g r2=%.6g ratio=%.9g\n", bi, b.in_a,
                          b.out, b.r1, b.r2, divider_ratio(b.r1, b.r2));
        } else if (is_binary(b.kind)) {
            std::snprintf(line, sizeof line, "b%zu: %s n%d n%d -> n%d\n", bi, kind_name(b.kind),
                          b.in_a, b.in_b, b.out);
        } else {
            std::snprintf(line, sizeof line, "b%zu: %s n%d -> n%d\n", bi, kind_name(b.kind),
                          b.in_a, b.out);
        }
        s += line;
    }
    return s;
}

}  // namespace cqsim
