#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cqsim/cqubit.hpp"
#include "cqsim/signal.hpp"

namespace cqsim {

enum class GateKind { hadamard, pauli_x, rphi };

// One gate in a pipeline. phi is only meaningful for rphi and is stored
// wrapped to [0, 2*pi).
struct GateOp {
    GateKind kind = GateKind::hadamard;
    double phi = 0.0;

    static GateOp hadamard() { return {GateKind::hadamard, 0.0}; }
    static GateOp pauli_x() { return {GateKind::pauli_x, 0.0}; }
    static GateOp rphi(double phi) { return {GateKind::rphi, wrap_angle(phi)}; }

    bool operator==(const GateOp&) const = default;
};

std::string gate_name(const GateOp& op);

// -------------------------------------------------------------------------
// Channel-level gate action: pure real arithmetic on the four channels.
// These are the definitions the analog netlists are checked against, and the
// wave-level overloads below perform exactly the same per-sample operations
// through the array kernels, so the two agree bit for bit.
// -------------------------------------------------------------------------

// ((a+c)/sqrt2, (b+d)/sqrt2, (a-c)/sqrt2, (b-d)/sqrt2)
ChannelQuadSample hadamard_channels(const ChannelQuadSample& q);

// (c, d, a, b): swaps the cos pair with the sin pair.
ChannelQuadSample x_channels(const ChannelQuadSample& q);

// Leaves the |0> pair alone and rotates the |1> pair by phi:
//   c1_re' = cos(phi)*c1_re - sin(phi)*c1_im
//   c1_im' = cos(phi)*c1_im + sin(phi)*c1_re
ChannelQuadSample rphi_channels(const ChannelQuadSample& q, double phi);

ChannelQuadSample apply_gate(const GateOp& op, const ChannelQuadSample& q);
ChannelQuadSample apply_pipeline(std::span<const GateOp> ops, const ChannelQuadSample& q);

ChannelQuadWave apply_gate(const GateOp& op, const ChannelQuadWave& w);
ChannelQuadWave apply_pipeline(std::span<const GateOp> ops, const ChannelQuadWave& w);

// -------------------------------------------------------------------------
// Matrix oracle: an independent 2x2 complex-matrix path used to cross-check
// the channel arithmetic. Deliberately shares no code with the functions
// above beyond the Complex type.
// -------------------------------------------------------------------------

struct GateMatrix {
    // Row-major: {m00, m01, m10, m11}.
    std::array<Complex, 4> m;

    bool is_unitary(double tol = 1e-12) const;
};

GateMatrix matrix_of(const GateOp& op);

// (a', b') = M (a, b)^T. Throws std::domain_error when m fails the unitarity
// check; the oracle refuses to certify anything with a non-unitary matrix.
std::pair<Complex, Complex> oracle_apply(const GateMatrix& m, Complex a, Complex b);

std::pair<Complex, Complex> oracle_pipeline(std::span<const GateOp> ops, Complex a,
                                            Complex b);

}  // namespace cqsim
