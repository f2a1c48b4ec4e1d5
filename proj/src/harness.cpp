#include "cqsim/harness.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "cqsim/kernels.hpp"

namespace cqsim {

void validate_config(const RunConfig& c) {
    if (!std::isfinite(c.t0) || !std::isfinite(c.t1) || !(c.t1 > c.t0)) {
        throw std::invalid_argument("config: need finite t1 > t0");
    }
    if (c.samples < 2) {
        throw std::invalid_argument("config: need at least 2 samples, got " +
                                    std::to_string(c.samples));
    }
    if (!(c.resistor_tol_pct >= 0.0)) {
        throw std::invalid_argument("config: resistor tolerance must be >= 0");
    }
    if (!(c.divider_r1 > 0.0) || !std::isfinite(c.divider_r1)) {
        throw std::invalid_argument("config: divider r1 must be positive and finite");
    }
    if (c.divider_r2 && (!(*c.divider_r2 > 0.0) || !std::isfinite(*c.divider_r2))) {
        throw std::invalid_argument("config: divider r2 must be positive and finite");
    }
}

RunResult run_program(const Program& p, const RunConfig& c) {
    validate_config(c);
    RunResult r;
    r.input = channels_wave(p.init, c.t0, c.dt(), static_cast<std::size_t>(c.samples));

    Pipeline pipeline = compile_program(p, c.backend, c.divider_r1, c.divider_r2);
    if (c.backend == Backend::netlist && c.resistor_tol_pct > 0.0) {
        pipeline = pipeline.perturbed(c.resistor_tol_pct, c.seed);
    }
    r.output = pipeline.apply(r.input);

    const auto& k = kernels::active_ops();
    r.max_norm_dev = k.max_norm_dev(r.output.c0_re.data(), r.output.c0_im.data(),
                                    r.output.c1_re.data(), r.output.c1_im.data(),
                                    r.output.size());
    return r;
}

void write_csv(std::ostream& os, const ChannelQuadWave& input,
               const ChannelQuadWave& output) {
    const std::size_t n = input.size();
    if (output.size() != n) {
        throw std::invalid_argument("write_csv: input/output sample counts differ");
    }
    os << "t,in_c0re,in_c0im,in_c1re,in_c1im,out_c0re,out_c0im,out_c1re,out_c1im\n";
    for (std::size_t k = 0; k < n; ++k) {
        os << format_double(input.time_at(k)) << ',' << format_double(input.c0_re[k])
           << ',' << format_double(input.c0_im[k]) << ',' << format_double(input.c1_re[k])
           << ',' << format_double(input.c1_im[k]) << ',' << format_double(output.c0_re[k])
           << ',' << format_double(output.c0_im[k]) << ','
           << format_double(output.c1_re[k]) << ',' << format_double(output.c1_im[k])
           << '\n';
    }
}

Program demo_hadamard_program() {
    // 1 GHz carrier, all phases zero, one Hadamard.
    Program p(CqubitParams(two_pi * 1e9, 0.0, 0.0, 0.0));
    p.gates = {GateOp::hadamard()};
    return p;
}

Program demo_rphi_program() {
    // 1 GHz carrier with the |1> branch active: varphi = pi/2 puts the
    // carrier on a cosine, beta = pi/2 makes the |1> amplitude imaginary,
    // and the gate rotates it by pi/4.
    constexpr double half_pi = std::numbers::pi / 2.0;
    Program p(CqubitParams(two_pi * 1e9, half_pi, 0.0, half_pi));
    p.gates = {GateOp::rphi(std::numbers::pi / 4.0)};
    return p;
}

DeviationReport compare_backends(const Program& p, const RunConfig& c) {
    validate_config(c);
    const std::size_t n = static_cast<std::size_t>(c.samples);
    const ChannelQuadWave in = channels_wave(p.init, c.t0, c.dt(), n);

    const ChannelQuadWave ideal_out = compile_program(p, Backend::ideal).apply(in);
    Pipeline np = compile_program(p, Backend::netlist, c.divider_r1, c.divider_r2);
    if (c.resistor_tol_pct > 0.0) np = np.perturbed(c.resistor_tol_pct, c.seed);
    const ChannelQuadWave net_out = np.apply(in);

    const auto& k = kernels::active_ops();
    const double* ideal_ch[4] = {ideal_out.c0_re.data(), ideal_out.c0_im.data(),
                                 ideal_out.c1_re.data(), ideal_out.c1_im.data()};
    const double* net_ch[4] = {net_out.c0_re.data(), net_out.c0_im.data(),
                               net_out.c1_re.data(), net_out.c1_im.data()};

    DeviationReport report;
    for (int ch = 0; ch < 4; ++ch) {
        report.channels[ch].max_abs = k.max_abs_diff(ideal_ch[ch], net_ch[ch], n);
        double sum_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = ideal_ch[ch][i] - net_ch[ch][i];
            sum_sq += d * d;
        }
        report.channels[ch].rms = std::sqrt(sum_sq / static_cast<double>(n));
        if (report.channels[ch].max_abs > report.max_overall) {
            report.max_overall = report.channels[ch].max_abs;
        }
    }
    return report;
}

}  // namespace cqsim
