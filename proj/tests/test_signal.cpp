#include <doctest.h>

#include <charconv>
#include <cmath>
#include <random>

#include "cqsim/signal.hpp"

using namespace cqsim;

TEST_CASE("wrap_angle lands in [0, 2*pi) and kills signed zero") {
    CHECK(wrap_angle(0.0) == 0.0);
    CHECK(wrap_angle(two_pi) == 0.0);
    CHECK(wrap_angle(-two_pi) == 0.0);
    CHECK(std::abs(wrap_angle(3.5 * std::numbers::pi) - 1.5 * std::numbers::pi) < 1e-15);
    CHECK(std::abs(wrap_angle(-std::numbers::pi / 2.0) - 1.5 * std::numbers::pi) < 1e-15);

    // tiny negative: fmod gives a tiny negative, +2*pi rounds to exactly
    // 2*pi; the fixup must fold that back to 0
    CHECK(wrap_angle(-1e-18) == 0.0);
    CHECK(wrap_angle(-0.0) == 0.0);
    CHECK_FALSE(std::signbit(wrap_angle(-0.0)));
    CHECK_FALSE(std::signbit(wrap_angle(-two_pi)));

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(-1e6, 1e6);
    for (int i = 0; i < 10000; ++i) {
        const double w = wrap_angle(d(rng));
        CHECK(w >= 0.0);
        CHECK(w < two_pi);
    }
}

TEST_CASE("Sinusoid validates its parameters and evaluates") {
    CHECK_THROWS_AS(Sinusoid(1.5, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Sinusoid(-0.1, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Sinusoid(1.0, -1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Sinusoid(1.0, 1.0, INFINITY), std::invalid_argument);

    const Sinusoid s(1.0, two_pi, 0.0);
    CHECK(std::abs(s.value_at(0.25) - 1.0) < 1e-15);
    CHECK(s.value_at(0.0) == 0.0);

    const Sinusoid scaled(0.5, two_pi, 0.0);
    CHECK(std::abs(scaled.value_at(0.25) - 0.5) < 1e-15);

    // phase is wrapped at construction
    const Sinusoid wrapped(1.0, 1.0, two_pi + 0.5);
    CHECK(std::abs(wrapped.varphi - 0.5) < 1e-15);
}

TEST_CASE("renormalize maps the window affinely onto [-1, 1]") {
    const SignalRange r(0.0, 5.0);
    CHECK(renormalize(0.0, r) == -1.0);
    CHECK(renormalize(5.0, r) == 1.0);
    CHECK(renormalize(2.5, r) == 0.0);
    CHECK_THROWS_AS(renormalize(-0.1, r), std::domain_error);
    CHECK_THROWS_AS(renormalize(5.1, r), std::domain_error);
    CHECK_THROWS_AS(SignalRange(5.0, 5.0), std::invalid_argument);

    const SignalRange sym(-1.0, 1.0);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = d(rng);
        CHECK(std::abs(renormalize(x, sym) - x) < 1e-15);
    }
}

TEST_CASE("sample_sinusoid fills a uniform grid with exact point values") {
    const Sinusoid s(1.0, two_pi * 1e9, 0.3);
    const SampledWaveform w = sample_sinusoid(s, 1e-10, 2e-12, 64);
    CHECK(w.size() == 64);
    CHECK(w.t0 == 1e-10);
    CHECK(w.dt == 2e-12);
    for (std::size_t k = 0; k < w.size(); ++k) {
        CHECK(w.values[k] == s.value_at(w.time_at(k)));
    }
    CHECK_THROWS_AS(sample_sinusoid(s, 0.0, 0.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(sample_sinusoid(s, 0.0, 1e-12, 0), std::invalid_argument);
}

TEST_CASE("quadrature turns the sin carrier into its cos companion") {
    const Sinusoid s(0.8, 3.0, 1.1);
    const Sinusoid q = quadrature(s);
    CHECK(q.amplitude == s.amplitude);
    CHECK(q.omega == s.omega);
    for (double t = -2.0; t <= 2.0; t += 0.01) {
        CHECK(std::abs(q.value_at(t) - 0.8 * std::cos(3.0 * t + 1.1)) < 1e-12);
    }
}

TEST_CASE("quantum_component: frozen spot values and the norm identity") {
    // fully classical signal -> no quantum component left
    const Complex zero = quantum_component(1.0, Branch::plus, 0.0);
    CHECK(zero.real() == 0.0);
    CHECK(zero.imag() == 0.0);

    // zero crossing, minus branch, no azimuth -> -1 + 0i
    const Complex neg = quantum_component(0.0, Branch::minus, 0.0);
    CHECK(neg.real() == -1.0);
    CHECK(neg.imag() == 0.0);

    // 3-4-5: sqrt(1 - 0.36) = 0.8 exactly, rotated onto -i
    const Complex r = quantum_component(0.6, Branch::plus, std::numbers::pi / 2.0);
    CHECK(std::abs(r.real()) < 1e-15);
    CHECK(std::abs(r.imag() + 0.8) < 1e-15);

    CHECK_THROWS_AS(quantum_component(1.0000001, Branch::plus, 0.0), std::domain_error);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ds(-1.0, 1.0);
    std::uniform_real_distribution<double> dphi(0.0, two_pi);
    for (int i = 0; i < 5000; ++i) {
        const double s = ds(rng);
        const Complex qc =
            quantum_component(s, (i % 2 != 0) ? Branch::plus : Branch::minus, dphi(rng));
        CHECK(std::abs(std::norm(qc) + s * s - 1.0) < 1e-14);
    }
}

TEST_CASE("check_normalization") {
    CHECK(check_normalization(Complex(1.0, 0.0), Complex(0.0, 0.0), 1e-12));
    CHECK(check_normalization(Complex(0.6, 0.0), Complex(0.0, 0.8), 1e-12));
    CHECK_FALSE(check_normalization(Complex(1.0, 0.0), Complex(0.1, 0.0), 1e-12));
    CHECK_THROWS_AS(check_normalization(Complex(1.0, 0.0), Complex(0.0, 0.0), 0.0),
                    std::invalid_argument);
}

TEST_CASE("format_double: shortest spelling that parses back exactly") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.0) == "0");  // signed zero flattened
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(two_pi * 1e9) == "6283185307.179586");

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> d(-1e12, 1e12);
    for (int i = 0; i < 5000; ++i) {
        const double v = d(rng);
        const std::string s = format_double(v);
        double back = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), back);
        CHECK(ec == std::errc());
        CHECK(ptr == s.data() + s.size());
        CHECK(back == v);
    }
}
