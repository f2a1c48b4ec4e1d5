#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

namespace cqsim {

using Complex = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;
// sqrt2/2 keeps the last bit right; 1.0/sqrt(2.0) is one ulp low.
inline constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;

// Reduce an angle to [0, 2*pi). Total over finite inputs; the result of the
// fixup never equals two_pi and -0 is normalized to +0.
double wrap_angle(double x);

// Unit-domain carrier amplitude * sin(omega*t + varphi).
struct Sinusoid {
    double amplitude;  // dimensionless, in [0, 1]
    double omega;      // rad/s, >= 0
    double varphi;     // rad, kept in [0, 2*pi)

    Sinusoid(double amplitude, double omega, double varphi);

    double value_at(double t) const;
};

// Physical voltage window a raw signal lives in before renormalization.
struct SignalRange {
    double f_min;  // volts
    double f_max;  // volts

    SignalRange(double f_min, double f_max);
};

struct SampledWaveform {
    double t0 = 0.0;  // seconds
    double dt = 0.0;  // seconds, > 0
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double time_at(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
};

// Affine map of [f_min, f_max] onto [-1, 1]. Rejects out-of-range inputs
// instead of clamping.
double renormalize(double s, const SignalRange& range);

SampledWaveform sample_sinusoid(const Sinusoid& s, double t0, double dt, std::size_t n);

// The cos companion of a sin carrier, produced analytically as a +pi/2 phase
// shift of the same parameters.
Sinusoid quadrature(const Sinusoid& s);

// Sign choice for the derived component; exposed rather than picked silently.
enum class Branch : int { plus = 1, minus = -1 };

// branch * e^{-i*phi_az} * sqrt(1 - s_cl^2); |result|^2 + s_cl^2 == 1.
Complex quantum_component(double s_cl, Branch branch, double phi_az);

// True iff | |c0|^2 + |c1|^2 - 1 | <= tol.
bool check_normalization(Complex c0, Complex c1, double tol);

// Shortest decimal spelling that parses back to exactly v ("1", "0.5",
// "6283185307.179586"). -0 is flattened to "0". Used everywhere a float
// must round-trip through text (program formatting, CSV output).
std::string format_double(double v);

}  // namespace cqsim
