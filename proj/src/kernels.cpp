#include "dynembed/kernels.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace dynembed::kernels {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double* x, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

double squared_norm_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
    return acc;
}

void adam_update_row_scalar(double* theta, double* m, double* v, const double* g,
                            std::size_t n, const AdamStepParams& p) {
    for (std::size_t i = 0; i < n; ++i) {
        const double gi = g[i] + p.l2_lambda * theta[i];
        m[i] = p.beta1 * m[i] + (1.0 - p.beta1) * gi;
        v[i] = p.beta2 * v[i] + (1.0 - p.beta2) * gi * gi;
        const double mhat = m[i] * p.bias1;
        const double vhat = v[i] * p.bias2;
        theta[i] -= p.lr * mhat / (std::sqrt(vhat) + p.eps);
    }
}

constexpr Ops kScalarOps = {
    "scalar",       dot_scalar,           axpy_scalar,
    scale_scalar,   squared_norm_scalar,  adam_update_row_scalar,
};

std::atomic<const Ops*> g_active{nullptr};

const Ops* pick_auto() {
    if (avx2_available()) return &avx2_ops();
    if (neon_available()) return &neon_ops();
    return &kScalarOps;
}

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

#if !(defined(__x86_64__) && defined(DYNEMBED_HAVE_AVX2_TU))
bool avx2_available() { return false; }
const Ops& avx2_ops() { return kScalarOps; }
#endif

#if !(defined(__aarch64__) && defined(DYNEMBED_HAVE_NEON_TU))
bool neon_available() { return false; }
const Ops& neon_ops() { return kScalarOps; }
#endif

bool select_backend(Backend b) {
    switch (b) {
        case Backend::Auto:
            g_active.store(pick_auto(), std::memory_order_relaxed);
            return true;
        case Backend::Scalar:
            g_active.store(&kScalarOps, std::memory_order_relaxed);
            return true;
        case Backend::Avx2:
            if (!avx2_available()) return false;
            g_active.store(&avx2_ops(), std::memory_order_relaxed);
            return true;
        case Backend::Neon:
            if (!neon_available()) return false;
            g_active.store(&neon_ops(), std::memory_order_relaxed);
            return true;
    }
    return false;
}

const Ops& active() {
    const Ops* ops = g_active.load(std::memory_order_relaxed);
    if (ops == nullptr) {
        ops = pick_auto();
        g_active.store(ops, std::memory_order_relaxed);
    }
    return *ops;
}

const char* active_name() { return active().name; }

Backend parse_backend(const std::string& name) {
    if (name == "auto") return Backend::Auto;
    if (name == "scalar") return Backend::Scalar;
    if (name == "avx2") return Backend::Avx2;
    if (name == "neon") return Backend::Neon;
    throw std::invalid_argument("unknown kernel backend: " + name);
}

}  // namespace dynembed::kernels
