#include "cqsim/signal.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cqsim {

double wrap_angle(double x) {
    double r = std::fmod(x, two_pi);
    if (r < 0.0) r += two_pi;
    // fmod of a tiny negative can land exactly on two_pi after the fixup
    if (r >= two_pi) r = 0.0;
    return r + 0.0;
}

Sinusoid::Sinusoid(double amplitude, double omega, double varphi)
    : amplitude(amplitude), omega(omega), varphi(wrap_angle(varphi)) {
    if (!(amplitude >= 0.0 && amplitude <= 1.0)) {
        throw std::invalid_argument("Sinusoid: amplitude must be in [0, 1], got " +
                                    std::to_string(amplitude));
    }
    if (!(omega >= 0.0)) {
        throw std::invalid_argument("Sinusoid: omega must be >= 0, got " +
                                    std::to_string(omega));
    }
    if (!std::isfinite(varphi)) {
        throw std::invalid_argument("Sinusoid: varphi must be finite");
    }
}

double Sinusoid::value_at(double t) const {
    return amplitude * std::sin(omega * t + varphi);
}

SignalRange::SignalRange(double f_min, double f_max) : f_min(f_min), f_max(f_max) {
    if (!(f_max > f_min)) {
        throw std::invalid_argument("SignalRange: f_max must exceed f_min");
    }
}

double renormalize(double s, const SignalRange& range) {
    if (s < range.f_min || s > range.f_max) {
        throw std::domain_error("renormalize: signal " + std::to_string(s) +
                                " outside [" + std::to_string(range.f_min) + ", " +
                                std::to_string(range.f_max) + "]");
    }
    return (2.0 * s - (range.f_max + range.f_min)) / (range.f_max - range.f_min);
}

SampledWaveform sample_sinusoid(const Sinusoid& s, double t0, double dt, std::size_t n) {
    if (!(dt > 0.0)) throw std::invalid_argument("sample_sinusoid: dt must be > 0");
    if (n < 1) throw std::invalid_argument("sample_sinusoid: need at least one sample");
    SampledWaveform w;
    w.t0 = t0;
    w.dt = dt;
    w.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        w.values[k] = s.value_at(w.time_at(k));
    }
    return w;
}

Sinusoid quadrature(const Sinusoid& s) {
    return Sinusoid(s.amplitude, s.omega, wrap_angle(s.varphi + std::numbers::pi / 2.0));
}

Complex quantum_component(double s_cl, Branch branch, double phi_az) {
    if (std::fabs(s_cl) > 1.0) {
        throw std::domain_error("quantum_component: |s_cl| must be <= 1, got " +
                                std::to_string(s_cl));
    }
    const double modulus = std::sqrt(1.0 - s_cl * s_cl);
    const double sign = static_cast<double>(branch);
    return sign * modulus * Complex(std::cos(phi_az), -std::sin(phi_az));
}

bool check_normalization(Complex c0, Complex c1, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("check_normalization: tol must be > 0");
    const double norm = std::norm(c0) + std::norm(c1);
    return std::fabs(norm - 1.0) <= tol;
}

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v + 0.0);
    if (ec != std::errc()) throw std::invalid_argument("format_double: value not formattable");
    return std::string(buf, ptr);
}

}  // namespace cqsim
