#include "cqsim/cqubit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cqsim/kernels.hpp"

namespace cqsim {

CqubitParams::CqubitParams(double omega, double varphi, double alpha, double beta)
    : omega(omega),
      varphi(wrap_angle(varphi)),
      alpha(wrap_angle(alpha)),
      beta(wrap_angle(beta)) {
    if (!(omega >= 0.0)) {
        throw std::invalid_argument("CqubitParams: omega must be >= 0, got " +
                                    std::to_string(omega));
    }
}

ChannelQuadWave ChannelQuadWave::zeros(double t0, double dt, std::size_t n) {
    ChannelQuadWave w;
    w.t0 = t0;
    w.dt = dt;
    w.c0_re.assign(n, 0.0);
    w.c0_im.assign(n, 0.0);
    w.c1_re.assign(n, 0.0);
    w.c1_im.assign(n, 0.0);
    return w;
}

CqubitParams from_classical(const Sinusoid& carrier, double alpha, double beta) {
    if (carrier.amplitude != 1.0) {
        throw std::invalid_argument(
            "from_classical: carrier amplitude must be exactly 1, got " +
            std::to_string(carrier.amplitude));
    }
    return CqubitParams(carrier.omega, carrier.varphi, alpha, beta);
}

ChannelQuadSample channels_at(const CqubitParams& p, double t) {
    const double c = std::cos(p.omega * t + p.varphi);
    const double s = std::sin(p.omega * t + p.varphi);
    return {std::cos(p.alpha) * c, std::sin(p.alpha) * c,
            std::cos(p.beta) * s, std::sin(p.beta) * s};
}

ChannelQuadWave channels_wave(const CqubitParams& p, double t0, double dt, std::size_t n) {
    const Sinusoid carrier(1.0, p.omega, p.varphi);
    const SampledWaveform cos_part = sample_sinusoid(quadrature(carrier), t0, dt, n);
    const SampledWaveform sin_part = sample_sinusoid(carrier, t0, dt, n);

    ChannelQuadWave w = ChannelQuadWave::zeros(t0, dt, n);
    const auto& ops = kernels::active_ops();
    ops.scale(w.c0_re.data(), cos_part.values.data(), std::cos(p.alpha), n);
    ops.scale(w.c0_im.data(), cos_part.values.data(), std::sin(p.alpha), n);
    ops.scale(w.c1_re.data(), sin_part.values.data(), std::cos(p.beta), n);
    ops.scale(w.c1_im.data(), sin_part.values.data(), std::sin(p.beta), n);
    return w;
}

std::pair<Complex, Complex> amplitudes(const ChannelQuadSample& q) {
    return {Complex(q.c0_re, q.c0_im), Complex(q.c1_re, q.c1_im)};
}

ChannelQuadSample quad_of(Complex a, Complex b) {
    return {a.real(), a.imag(), b.real(), b.imag()};
}

namespace {

// Shared entry check: |a|^2 + |b|^2 must sit within norm_entry_tol of 1.
void require_normalized(Complex a, Complex b, const char* who) {
    const double n = std::norm(a) + std::norm(b);
    if (std::abs(n - 1.0) > norm_entry_tol) {
        throw std::domain_error(std::string(who) + ": amplitudes not normalized, |a|^2+|b|^2 = " +
                                std::to_string(n));
    }
}

}  // namespace

std::pair<Complex, Complex> remove_global_phase(Complex a, Complex b) {
    require_normalized(a, b, "remove_global_phase");
    // Pick the phase reference from whichever amplitude is safely nonzero;
    // arg() of a near-zero amplitude is noise.
    constexpr double ref_floor = 1e-12;
    double theta;
    if (std::abs(b) > ref_floor) {
        theta = std::arg(b);
    } else if (std::abs(a) > ref_floor) {
        theta = std::arg(a);
    } else {
        throw std::domain_error("remove_global_phase: both amplitudes vanish");
    }
    const Complex rot(std::cos(theta), -std::sin(theta));
    return {a * rot, b * rot};
}

double prob_one(const ChannelQuadSample& q) {
    auto [a, b] = amplitudes(q);
    require_normalized(a, b, "prob_one");
    return std::norm(b);
}

double prob_zero(const ChannelQuadSample& q) {
    auto [a, b] = amplitudes(q);
    require_normalized(a, b, "prob_zero");
    return std::norm(a);
}

BlochVector bloch_vector(Complex a, Complex b) {
    require_normalized(a, b, "bloch_vector");
    const Complex cross = std::conj(a) * b;
    return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(a) - std::norm(b)};
}

}  // namespace cqsim
