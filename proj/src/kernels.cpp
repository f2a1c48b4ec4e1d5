#include "cqsim/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <string_view>

namespace cqsim::kernels {

namespace {

void add_scalar(double* dst, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] + b[i];
}

void sub_scalar(double* dst, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] - b[i];
}

void scale_scalar(double* dst, const double* a, double k, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = k * a[i];
}

void negate_scalar(double* dst, const double* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = -a[i];
}

void rotate_scalar(double* dst_re, double* dst_im, const double* re,
                   const double* im, double c, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double r = re[i];
        const double m = im[i];
        dst_re[i] = c * r - s * m;
        dst_im[i] = c * m + s * r;
    }
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > worst) worst = d;
    }
    return worst;
}

double max_norm_dev_scalar(const double* a, const double* b, const double* c,
                           const double* d, std::size_t n) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double norm_sq = (a[i] * a[i] + b[i] * b[i]) + (c[i] * c[i] + d[i] * d[i]);
        const double dev = std::fabs(std::sqrt(norm_sq) - 1.0);
        if (dev > worst) worst = dev;
    }
    return worst;
}

constexpr Ops scalar_table = {
    "scalar",        add_scalar,          sub_scalar,          scale_scalar,
    negate_scalar,   rotate_scalar,       max_abs_diff_scalar, max_norm_dev_scalar,
};

const Ops& pick_backend() {
    if (const char* force = std::getenv("CQSIM_KERNELS")) {
        const std::string_view want(force);
        if (want == "scalar") return scalar_ops();
        if (want == "avx2" && avx2_ops() != nullptr) return *avx2_ops();
        if (want == "neon" && neon_ops() != nullptr) return *neon_ops();
        return scalar_ops();
    }
    if (const Ops* simd = avx2_ops()) return *simd;
    if (const Ops* simd = neon_ops()) return *simd;
    return scalar_ops();
}

}  // namespace

const Ops& scalar_ops() { return scalar_table; }

#if !defined(__x86_64__)
const Ops* avx2_ops() { return nullptr; }
#endif

#if !(defined(__aarch64__) && defined(__ARM_NEON))
const Ops* neon_ops() { return nullptr; }
#endif

const Ops& active_ops() {
    static const Ops& chosen = pick_backend();
    return chosen;
}

}  // namespace cqsim::kernels
