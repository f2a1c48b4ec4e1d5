#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cqsim/signal.hpp"

namespace cqsim {

// The four angles that fully determine a cqubit built on a unit sinusoid:
// amplitude e^{i*alpha} on the cos channel pair, e^{i*beta} on the sin pair.
struct CqubitParams {
    double omega;   // rad/s
    double varphi;  // rad, in [0, 2*pi)
    double alpha;   // rad, in [0, 2*pi)
    double beta;    // rad, in [0, 2*pi)

    CqubitParams(double omega, double varphi, double alpha, double beta);

    // Azimuthal angle (beta - alpha) mod 2*pi; the only relative phase that
    // survives once the global phase is dropped.
    double phi_az() const { return wrap_angle(beta - alpha); }

    bool operator==(const CqubitParams&) const = default;
};

// Instantaneous values of the four real channels carrying Re/Im of the |0>
// and |1> amplitudes.
struct ChannelQuadSample {
    double c0_re = 0.0;
    double c0_im = 0.0;
    double c1_re = 0.0;
    double c1_im = 0.0;

    double norm_sq() const {
        return (c0_re * c0_re + c0_im * c0_im) + (c1_re * c1_re + c1_im * c1_im);
    }
};

// The same four channels over a shared uniform sample grid (structure of
// arrays; the layout the kernels operate on directly).
struct ChannelQuadWave {
    double t0 = 0.0;
    double dt = 0.0;
    std::vector<double> c0_re, c0_im, c1_re, c1_im;

    std::size_t size() const { return c0_re.size(); }
    double time_at(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
    ChannelQuadSample at(std::size_t k) const {
        return {c0_re[k], c0_im[k], c1_re[k], c1_im[k]};
    }

    static ChannelQuadWave zeros(double t0, double dt, std::size_t n);
};

// Lift a unit-amplitude carrier into cqubit parameters. Throws when the
// carrier is not normalized (amplitude != 1).
CqubitParams from_classical(const Sinusoid& carrier, double alpha, double beta);

// (cos a * cos(wt+phi), sin a * cos(wt+phi), cos b * sin(wt+phi), sin b * sin(wt+phi))
ChannelQuadSample channels_at(const CqubitParams& p, double t);

// channels_at over a uniform grid: the carrier and its quadrature are sampled
// once and scaled into the four channels with the array kernels.
ChannelQuadWave channels_wave(const CqubitParams& p, double t0, double dt, std::size_t n);

// Pack the quad into the two complex amplitudes (a, b).
std::pair<Complex, Complex> amplitudes(const ChannelQuadSample& q);

// Inverse of amplitudes; exact.
ChannelQuadSample quad_of(Complex a, Complex b);

// Multiply both amplitudes by e^{-i*theta} with theta = arg(b), falling back
// to arg(a) when b vanishes. The surviving reference amplitude comes out real
// and non-negative; probabilities and the Bloch vector are untouched.
std::pair<Complex, Complex> remove_global_phase(Complex a, Complex b);

// |b|^2 of a normalized quad.
double prob_one(const ChannelQuadSample& q);
double prob_zero(const ChannelQuadSample& q);

struct BlochVector {
    double x;
    double y;
    double z;
};

// (2 Re(conj(a) b), 2 Im(conj(a) b), |a|^2 - |b|^2) for a normalized pair.
BlochVector bloch_vector(Complex a, Complex b);

// Entry tolerance used by the probability/Bloch operations: loose enough for
// float drift through gate chains, tight enough to catch encoding bugs.
inline constexpr double norm_entry_tol = 1e-9;

}  // namespace cqsim
