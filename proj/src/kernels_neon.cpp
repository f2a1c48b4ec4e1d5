// NEON variants of the array kernels (aarch64, two doubles per iteration).
// Same rule as the AVX2 file: no fused multiply-add, so every lane matches
// the scalar reference bit for bit.

#include "cqsim/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include <cmath>

namespace cqsim::kernels {

namespace {

void add_neon(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(dst + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] + b[i];
}

void sub_neon(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(dst + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    }
    for (; i < n; ++i) dst[i] = a[i] - b[i];
}

void scale_neon(double* dst, const double* a, double k, std::size_t n) {
    const float64x2_t vk = vdupq_n_f64(k);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(dst + i, vmulq_f64(vk, vld1q_f64(a + i)));
    }
    for (; i < n; ++i) dst[i] = k * a[i];
}

void negate_neon(double* dst, const double* a, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(dst + i, vnegq_f64(vld1q_f64(a + i)));
    }
    for (; i < n; ++i) dst[i] = -a[i];
}

void rotate_neon(double* dst_re, double* dst_im, const double* re,
                 const double* im, double c, double s, std::size_t n) {
    const float64x2_t vc = vdupq_n_f64(c);
    const float64x2_t vs = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t vr = vld1q_f64(re + i);
        const float64x2_t vm = vld1q_f64(im + i);
        const float64x2_t out_re = vsubq_f64(vmulq_f64(vc, vr), vmulq_f64(vs, vm));
        const float64x2_t out_im = vaddq_f64(vmulq_f64(vc, vm), vmulq_f64(vs, vr));
        vst1q_f64(dst_re + i, out_re);
        vst1q_f64(dst_im + i, out_im);
    }
    for (; i < n; ++i) {
        const double r = re[i];
        const double m = im[i];
        dst_re[i] = c * r - s * m;
        dst_im[i] = c * m + s * r;
    }
}

inline double hmax_f64(float64x2_t v) { return vmaxvq_f64(v); }

double max_abs_diff_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t d = vabsq_f64(vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
        acc = vmaxq_f64(acc, d);
    }
    double worst = hmax_f64(acc);
    for (; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > worst) worst = d;
    }
    return worst;
}

double max_norm_dev_neon(const double* a, const double* b, const double* c,
                         const double* d, std::size_t n) {
    const float64x2_t one = vdupq_n_f64(1.0);
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t va = vld1q_f64(a + i);
        const float64x2_t vb = vld1q_f64(b + i);
        const float64x2_t vc = vld1q_f64(c + i);
        const float64x2_t vd = vld1q_f64(d + i);
        const float64x2_t n01 = vaddq_f64(vmulq_f64(va, va), vmulq_f64(vb, vb));
        const float64x2_t n23 = vaddq_f64(vmulq_f64(vc, vc), vmulq_f64(vd, vd));
        // vsqrtq is correctly rounded, so this stays bit-identical to scalar.
        const float64x2_t norm = vsqrtq_f64(vaddq_f64(n01, n23));
        acc = vmaxq_f64(acc, vabsq_f64(vsubq_f64(norm, one)));
    }
    double worst = hmax_f64(acc);
    for (; i < n; ++i) {
        const double norm_sq = (a[i] * a[i] + b[i] * b[i]) + (c[i] * c[i] + d[i] * d[i]);
        const double dev = std::fabs(std::sqrt(norm_sq) - 1.0);
        if (dev > worst) worst = dev;
    }
    return worst;
}

constexpr Ops neon_table = {
    "neon",       add_neon,    sub_neon,          scale_neon,
    negate_neon,  rotate_neon, max_abs_diff_neon, max_norm_dev_neon,
};

}  // namespace

// Advanced SIMD is mandatory on aarch64, no runtime probe needed.
const Ops* neon_ops() { return &neon_table; }

}  // namespace cqsim::kernels

#endif  // __aarch64__ && __ARM_NEON
