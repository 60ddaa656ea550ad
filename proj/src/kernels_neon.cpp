// NEON kernel variants for aarch64 (f64x2 lanes). aarch64 mandates NEON, so
// availability is a compile-time fact rather than a cpuid probe.

#include "dynembed/kernels.hpp"

#if defined(__aarch64__) && defined(DYNEMBED_HAVE_NEON_TU)

#include <arm_neon.h>

#include <cmath>

namespace dynembed::kernels {

namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    for (; i + 2 <= n; i += 2) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    }
    double acc = vaddvq_f64(acc0) + vaddvq_f64(acc1);
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
    const float64x2_t av = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), av, vld1q_f64(x + i)));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scale_neon(double* x, double a, std::size_t n) {
    const float64x2_t av = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(x + i, vmulq_f64(av, vld1q_f64(x + i)));
    }
    for (; i < n; ++i) x[i] *= a;
}

double squared_norm_neon(const double* x, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t v = vld1q_f64(x + i);
        acc = vfmaq_f64(acc, v, v);
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += x[i] * x[i];
    return s;
}

void adam_update_row_neon(double* theta, double* m, double* v, const double* g,
                          std::size_t n, const AdamStepParams& p) {
    const float64x2_t lam = vdupq_n_f64(p.l2_lambda);
    const float64x2_t b1 = vdupq_n_f64(p.beta1);
    const float64x2_t one_m_b1 = vdupq_n_f64(1.0 - p.beta1);
    const float64x2_t b2 = vdupq_n_f64(p.beta2);
    const float64x2_t one_m_b2 = vdupq_n_f64(1.0 - p.beta2);
    const float64x2_t c1 = vdupq_n_f64(p.bias1);
    const float64x2_t c2 = vdupq_n_f64(p.bias2);
    const float64x2_t lr = vdupq_n_f64(p.lr);
    const float64x2_t eps = vdupq_n_f64(p.eps);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t th = vld1q_f64(theta + i);
        const float64x2_t gi = vfmaq_f64(vld1q_f64(g + i), lam, th);
        const float64x2_t mi = vfmaq_f64(vmulq_f64(b1, vld1q_f64(m + i)), one_m_b1, gi);
        const float64x2_t vi =
            vfmaq_f64(vmulq_f64(b2, vld1q_f64(v + i)), one_m_b2, vmulq_f64(gi, gi));
        vst1q_f64(m + i, mi);
        vst1q_f64(v + i, vi);
        const float64x2_t mhat = vmulq_f64(mi, c1);
        const float64x2_t denom = vaddq_f64(vsqrtq_f64(vmulq_f64(vi, c2)), eps);
        const float64x2_t step = vdivq_f64(vmulq_f64(lr, mhat), denom);
        vst1q_f64(theta + i, vsubq_f64(th, step));
    }
    for (; i < n; ++i) {
        const double gi = g[i] + p.l2_lambda * theta[i];
        m[i] = p.beta1 * m[i] + (1.0 - p.beta1) * gi;
        v[i] = p.beta2 * v[i] + (1.0 - p.beta2) * gi * gi;
        theta[i] -= p.lr * (m[i] * p.bias1) / (std::sqrt(v[i] * p.bias2) + p.eps);
    }
}

constexpr Ops kNeonOps = {
    "neon",      dot_neon,           axpy_neon,
    scale_neon,  squared_norm_neon,  adam_update_row_neon,
};

}  // namespace

bool neon_available() { return true; }

const Ops& neon_ops() { return kNeonOps; }

}  // namespace dynembed::kernels

#endif  // __aarch64__ && DYNEMBED_HAVE_NEON_TU
