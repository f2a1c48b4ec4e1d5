#pragma once

#include <cstddef>

namespace cqsim::kernels {

// Elementwise kernels over double buffers. These are the hot loops behind
// waveform-level gate application, netlist block evaluation and deviation
// reports; everything else in the library is scalar.
//
// Aliasing: dst may equal one of the source pointers exactly, but must not
// partially overlap it. rotate reads both sources before writing, so it is
// safe fully in place.
//
// Every backend must perform the same IEEE operations per element as the
// scalar reference (plain mul/add/sub, no FMA, no reassociation), so results
// are bit-identical across backends. The equivalence tests assert exact
// equality, not a tolerance.
struct Ops {
    const char* name;

    // dst[i] = a[i] + b[i]
    void (*add)(double* dst, const double* a, const double* b, std::size_t n);
    // dst[i] = a[i] - b[i]
    void (*sub)(double* dst, const double* a, const double* b, std::size_t n);
    // dst[i] = k * a[i]
    void (*scale)(double* dst, const double* a, double k, std::size_t n);
    // dst[i] = -a[i]
    void (*negate)(double* dst, const double* a, std::size_t n);
    // Phase rotation of a complex channel pair:
    //   dst_re[i] = c*re[i] - s*im[i]
    //   dst_im[i] = c*im[i] + s*re[i]
    void (*rotate)(double* dst_re, double* dst_im, const double* re,
                   const double* im, double c, double s, std::size_t n);
    // max over i of |a[i] - b[i]|; 0 for n == 0
    double (*max_abs_diff)(const double* a, const double* b, std::size_t n);
    // max over i of |sqrt((a^2 + b^2) + (c^2 + d^2)) - 1|, i.e. how far the
    // four-channel row norm strays from unity; 0 for n == 0
    double (*max_norm_dev)(const double* a, const double* b, const double* c,
                           const double* d, std::size_t n);
};

// Scalar reference implementation. Always available.
const Ops& scalar_ops();

// SIMD variants; nullptr when the build does not target that ISA.
const Ops* avx2_ops();
const Ops* neon_ops();

// Backend selected once per process: the best variant the CPU supports,
// unless CQSIM_KERNELS ("scalar", "avx2", "neon") forces one. Falls back to
// scalar when a forced variant is unavailable.
const Ops& active_ops();

}  // namespace cqsim::kernels
