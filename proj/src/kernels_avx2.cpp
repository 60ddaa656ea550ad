// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and must only be entered after the runtime cpuid check.

#include "dynembed/kernels.hpp"

#if defined(__x86_64__) && defined(DYNEMBED_HAVE_AVX2_TU)

#include <immintrin.h>

#include <cmath>

namespace dynembed::kernels {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i),
                                                _mm256_loadu_pd(y + i)));
        _mm256_storeu_pd(y + i + 4, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i + 4),
                                                    _mm256_loadu_pd(y + i + 4)));
    }
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i),
                                                _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double* x, double a, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
    }
    for (; i < n; ++i) x[i] *= a;
}

double squared_norm_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i] * x[i];
    return s;
}

void adam_update_row_avx2(double* theta, double* m, double* v, const double* g,
                          std::size_t n, const AdamStepParams& p) {
    const __m256d lam = _mm256_set1_pd(p.l2_lambda);
    const __m256d b1 = _mm256_set1_pd(p.beta1);
    const __m256d one_m_b1 = _mm256_set1_pd(1.0 - p.beta1);
    const __m256d b2 = _mm256_set1_pd(p.beta2);
    const __m256d one_m_b2 = _mm256_set1_pd(1.0 - p.beta2);
    const __m256d c1 = _mm256_set1_pd(p.bias1);
    const __m256d c2 = _mm256_set1_pd(p.bias2);
    const __m256d lr = _mm256_set1_pd(p.lr);
    const __m256d eps = _mm256_set1_pd(p.eps);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d th = _mm256_loadu_pd(theta + i);
        const __m256d gi = _mm256_fmadd_pd(lam, th, _mm256_loadu_pd(g + i));
        const __m256d mi = _mm256_fmadd_pd(one_m_b1, gi,
                                           _mm256_mul_pd(b1, _mm256_loadu_pd(m + i)));
        const __m256d vi = _mm256_fmadd_pd(one_m_b2, _mm256_mul_pd(gi, gi),
                                           _mm256_mul_pd(b2, _mm256_loadu_pd(v + i)));
        _mm256_storeu_pd(m + i, mi);
        _mm256_storeu_pd(v + i, vi);
        const __m256d mhat = _mm256_mul_pd(mi, c1);
        const __m256d denom = _mm256_add_pd(_mm256_sqrt_pd(_mm256_mul_pd(vi, c2)), eps);
        const __m256d step = _mm256_div_pd(_mm256_mul_pd(lr, mhat), denom);
        _mm256_storeu_pd(theta + i, _mm256_sub_pd(th, step));
    }
    for (; i < n; ++i) {
        const double gi = g[i] + p.l2_lambda * theta[i];
        m[i] = p.beta1 * m[i] + (1.0 - p.beta1) * gi;
        v[i] = p.beta2 * v[i] + (1.0 - p.beta2) * gi * gi;
        theta[i] -= p.lr * (m[i] * p.bias1) / (std::sqrt(v[i] * p.bias2) + p.eps);
    }
}

constexpr Ops kAvx2Ops = {
    "avx2",      dot_avx2,           axpy_avx2,
    scale_avx2,  squared_norm_avx2,  adam_update_row_avx2,
};

}  // namespace

bool avx2_available() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const Ops& avx2_ops() { return kAvx2Ops; }

}  // namespace dynembed::kernels

#endif  // __x86_64__ && DYNEMBED_HAVE_AVX2_TU
