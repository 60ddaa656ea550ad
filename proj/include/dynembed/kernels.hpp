#pragma once

#include <cstddef>
#include <string>

// Vector kernels used by the training and analysis hot loops. Every kernel has
// a scalar reference implementation plus SIMD variants (AVX2 on x86-64, NEON on
// aarch64) selected once at runtime. The variants are equivalence-tested against
// the scalar reference; selection is stable for the lifetime of the process, so
// seeded runs stay bit-reproducible on a given host.

namespace dynembed::kernels {

// Constants for one bias-corrected Adam step, shared by every row the step
// touches. bias1/bias2 are 1/(1 - beta^t) for the current step t.
struct AdamStepParams {
    double lr;
    double beta1;
    double beta2;
    double eps;
    double l2_lambda;
    double bias1;
    double bias2;
};

struct Ops {
    const char* name;
    double (*dot)(const double* a, const double* b, std::size_t n);
    // y += a * x
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    void (*scale)(double* x, double a, std::size_t n);
    double (*squared_norm)(const double* x, std::size_t n);
    // In-place Adam update of one row: g' = g + l2*theta, moment update,
    // theta -= lr * mhat / (sqrt(vhat) + eps).
    void (*adam_update_row)(double* theta, double* m, double* v, const double* g,
                            std::size_t n, const AdamStepParams& p);
};

enum class Backend { Auto, Scalar, Avx2, Neon };

const Ops& scalar_ops();

bool avx2_available();
const Ops& avx2_ops();  // valid only when avx2_available()

bool neon_available();
const Ops& neon_ops();  // valid only when neon_available()

// Process-wide selection. Auto picks the widest supported variant. Returns
// false (and leaves the selection unchanged) if the backend is not supported
// on this host or was compiled out.
bool select_backend(Backend b);
const Ops& active();
const char* active_name();

// "auto" | "scalar" | "avx2" | "neon"; throws std::invalid_argument otherwise.
Backend parse_backend(const std::string& name);

}  // namespace dynembed::kernels
