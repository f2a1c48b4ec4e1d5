#include "cqsim/gates.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cqsim/kernels.hpp"

namespace cqsim {

std::string gate_name(const GateOp& op) {
    switch (op.kind) {
        case GateKind::hadamard:
            return "H";
        case GateKind::pauli_x:
            return "X";
        case GateKind::rphi: {
            char buf[48];
            std::snprintf(buf, sizeof buf, "RPHI %.17g", op.phi);
            return buf;
        }
    }
    return "?";
}

ChannelQuadSample hadamard_channels(const ChannelQuadSample& q) {
    return {(q.c0_re + q.c1_re) * inv_sqrt2, (q.c0_im + q.c1_im) * inv_sqrt2,
            (q.c0_re - q.c1_re) * inv_sqrt2, (q.c0_im - q.c1_im) * inv_sqrt2};
}

ChannelQuadSample x_channels(const ChannelQuadSample& q) {
    return {q.c1_re, q.c1_im, q.c0_re, q.c0_im};
}

ChannelQuadSample rphi_channels(const ChannelQuadSample& q, double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {q.c0_re, q.c0_im, c * q.c1_re - s * q.c1_im, c * q.c1_im + s * q.c1_re};
}

ChannelQuadSample apply_gate(const GateOp& op, const ChannelQuadSample& q) {
    switch (op.kind) {
        case GateKind::hadamard:
            return hadamard_channels(q);
        case GateKind::pauli_x:
            return x_channels(q);
        case GateKind::rphi:
            return rphi_channels(q, op.phi);
    }
    throw std::logic_error("apply_gate: bad GateKind");
}

ChannelQuadSample apply_pipeline(std::span<const GateOp> ops, const ChannelQuadSample& q) {
    ChannelQuadSample cur = q;
    for (const GateOp& op : ops) cur = apply_gate(op, cur);
    return cur;
}

ChannelQuadWave apply_gate(const GateOp& op, const ChannelQuadWave& w) {
    const std::size_t n = w.size();
    const auto& k = kernels::active_ops();
    ChannelQuadWave out = ChannelQuadWave::zeros(w.t0, w.dt, n);

    switch (op.kind) {
        case GateKind::hadamard:
            // Sum/difference into place, then scale in place (exact aliasing
            // is allowed by the kernel contract).
            k.add(out.c0_re.data(), w.c0_re.data(), w.c1_re.data(), n);
            k.add(out.c0_im.data(), w.c0_im.data(), w.c1_im.data(), n);
            k.sub(out.c1_re.data(), w.c0_re.data(), w.c1_re.data(), n);
            k.sub(out.c1_im.data(), w.c0_im.data(), w.c1_im.data(), n);
            k.scale(out.c0_re.data(), out.c0_re.data(), inv_sqrt2, n);
            k.scale(out.c0_im.data(), out.c0_im.data(), inv_sqrt2, n);
            k.scale(out.c1_re.data(), out.c1_re.data(), inv_sqrt2, n);
            k.scale(out.c1_im.data(), out.c1_im.data(), inv_sqrt2, n);
            return out;
        case GateKind::pauli_x:
            out.c0_re = w.c1_re;
            out.c0_im = w.c1_im;
            out.c1_re = w.c0_re;
            out.c1_im = w.c0_im;
            return out;
        case GateKind::rphi:
            out.c0_re = w.c0_re;
            out.c0_im = w.c0_im;
            k.rotate(out.c1_re.data(), out.c1_im.data(), w.c1_re.data(), w.c1_im.data(),
                     std::cos(op.phi), std::sin(op.phi), n);
            return out;
    }
    throw std::logic_error("apply_gate: bad GateKind");
}

ChannelQuadWave apply_pipeline(std::span<const GateOp> ops, const ChannelQuadWave& w) {
    ChannelQuadWave cur = w;
    for (const GateOp& op : ops) cur = apply_gate(op, cur);
    return cur;
}

bool GateMatrix::is_unitary(double tol) const {
    // M^dagger M == I, entry by entry.
    const Complex a = m[0], b = m[1], c = m[2], d = m[3];
    const Complex e00 = std::conj(a) * a + std::conj(c) * c;
    const Complex e01 = std::conj(a) * b + std::conj(c) * d;
    const Complex e10 = std::conj(b) * a + std::conj(d) * c;
    const Complex e11 = std::conj(b) * b + std::conj(d) * d;
    return std::abs(e00 - 1.0) <= tol && std::abs(e01) <= tol && std::abs(e10) <= tol &&
           std::abs(e11 - 1.0) <= tol;
}

GateMatrix matrix_of(const GateOp& op) {
    switch (op.kind) {
        case GateKind::hadamard:
            return {{Complex(inv_sqrt2, 0.0), Complex(inv_sqrt2, 0.0),
                     Complex(inv_sqrt2, 0.0), Complex(-inv_sqrt2, 0.0)}};
        case GateKind::pauli_x:
            return {{Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.0),
                     Complex(0.0, 0.0)}};
        case GateKind::rphi:
            return {{Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0),
                     std::polar(1.0, op.phi)}};
    }
    throw std::logic_error("matrix_of: bad GateKind");
}

std::pair<Complex, Complex> oracle_apply(const GateMatrix& m, Complex a, Complex b) {
    if (!m.is_unitary()) {
        throw std::domain_error("oracle_apply: matrix is not unitary");
    }
    return {m.m[0] * a + m.m[1] * b, m.m[2] * a + m.m[3] * b};
}

std::pair<Complex, Complex> oracle_pipeline(std::span<const GateOp> ops, Complex a,
                                            Complex b) {
    for (const GateOp& op : ops) {
        auto [na, nb] = oracle_apply(matrix_of(op), a, b);
        a = na;
        b = nb;
    }
    return {a, b};
}

}  // namespace cqsim
