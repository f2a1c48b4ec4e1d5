// AVX2 variants of the array kernels. Four doubles per iteration, scalar
// remainder. No FMA anywhere: each lane must do the same mul/add/sub sequence
// as the scalar reference so outputs stay bit-identical.

#include "cqsim/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

#include <cmath>

namespace cqsim::kernels {

namespace {

void add_avx2(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        _mm256_storeu_pd(dst + i, _mm256_add_pd(va, vb));
    }
    for (; i < n; ++i) dst[i] = a[i] + b[i];
}

void sub_avx2(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        _mm256_storeu_pd(dst + i, _mm256_sub_pd(va, vb));
    }
    for (; i < n; ++i) dst[i] = a[i] - b[i];
}

void scale_avx2(double* dst, const double* a, double k, std::size_t n) {
    const __m256d vk = _mm256_set1_pd(k);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(vk, va));
    }
    for (; i < n; ++i) dst[i] = k * a[i];
}

void negate_avx2(double* dst, const double* a, std::size_t n) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        _mm256_storeu_pd(dst + i, _mm256_xor_pd(va, sign));
    }
    for (; i < n; ++i) dst[i] = -a[i];
}

void rotate_avx2(double* dst_re, double* dst_im, const double* re,
                 const double* im, double c, double s, std::size_t n) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vr = _mm256_loadu_pd(re + i);
        const __m256d vm = _mm256_loadu_pd(im + i);
        const __m256d out_re = _mm256_sub_pd(_mm256_mul_pd(vc, vr), _mm256_mul_pd(vs, vm));
        const __m256d out_im = _mm256_add_pd(_mm256_mul_pd(vc, vm), _mm256_mul_pd(vs, vr));
        _mm256_storeu_pd(dst_re + i, out_re);
        _mm256_storeu_pd(dst_im + i, out_im);
    }
    for (; i < n; ++i) {
        const double r = re[i];
        const double m = im[i];
        dst_re[i] = c * r - s * m;
        dst_im[i] = c * m + s * r;
    }
}

inline __m256d abs_pd(__m256d v) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

inline double hmax_pd(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d m2 = _mm_max_pd(lo, hi);
    const __m128d m1 = _mm_max_sd(m2, _mm_unpackhi_pd(m2, m2));
    return _mm_cvtsd_f64(m1);
}

double max_abs_diff_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        acc = _mm256_max_pd(acc, abs_pd(_mm256_sub_pd(va, vb)));
    }
    double worst = hmax_pd(acc);
    for (; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > worst) worst = d;
    }
    return worst;
}

double max_norm_dev_avx2(const double* a, const double* b, const double* c,
                         const double* d, std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        const __m256d vc = _mm256_loadu_pd(c + i);
        const __m256d vd = _mm256_loadu_pd(d + i);
        const __m256d n01 = _mm256_add_pd(_mm256_mul_pd(va, va), _mm256_mul_pd(vb, vb));
        const __m256d n23 = _mm256_add_pd(_mm256_mul_pd(vc, vc), _mm256_mul_pd(vd, vd));
        // vsqrt is correctly rounded, so this stays bit-identical to scalar.
        const __m256d norm = _mm256_sqrt_pd(_mm256_add_pd(n01, n23));
        acc = _mm256_max_pd(acc, abs_pd(_mm256_sub_pd(norm, one)));
    }
    double worst = hmax_pd(acc);
    for (; i < n; ++i) {
        const double norm_sq = (a[i] * a[i] + b[i] * b[i]) + (c[i] * c[i] + d[i] * d[i]);
        const double dev = std::fabs(std::sqrt(norm_sq) - 1.0);
        if (dev > worst) worst = dev;
    }
    return worst;
}

constexpr Ops avx2_table = {
    "avx2",       add_avx2,    sub_avx2,          scale_avx2,
    negate_avx2,  rotate_avx2, max_abs_diff_avx2, max_norm_dev_avx2,
};

}  // namespace

const Ops* avx2_ops() {
    static const Ops* table =
        __builtin_cpu_supports("avx2") ? &avx2_table : nullptr;
    return table;
}

}  // namespace cqsim::kernels

#endif  // __x86_64__
