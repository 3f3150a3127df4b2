#pragma once

#include <complex>
#include <cstddef>

// Data-parallel inner loops shared by the DSP modules. Every operation has a
// scalar reference implementation and may have SIMD variants; the active
// backend is chosen at runtime (CPU detection, overridable via the
// REMIXKIT_SIMD environment variable or set_backend()). Backends are
// equivalence-tested against the scalar reference. Results are deterministic
// for a fixed backend; across backends they may differ in the last ulps
// (different accumulation order, fused multiply-add).

namespace remixkit::kernels {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_supported(Backend b);

// Active backend. First call resolves REMIXKIT_SIMD (scalar|avx2|auto,
// default auto = best supported).
Backend active_backend();
// Throws std::invalid_argument if the backend is not supported on this CPU.
void set_backend(Backend b);

// ---- real kernels ----------------------------------------------------------

double sum_squares(const double* x, std::size_t n);
double sum_sq_diff(const double* x, const double* y, std::size_t n);
double sum_abs_diff(const double* x, const double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);

// dst[i] = x[i] * y[i]
void multiply(double* dst, const double* x, const double* y, std::size_t n);
// dst[i] += x[i] * y[i]
void multiply_add(double* dst, const double* x, const double* y, std::size_t n);

// ---- complex kernels (interleaved std::complex<double>) --------------------

// dst[i] = a[i] * b[i]
void cmultiply(cplx* dst, const cplx* a, const cplx* b, std::size_t n);
// dst[i] += a[i] * b[i]
void cmultiply_add(cplx* dst, const cplx* a, const cplx* b, std::size_t n);
// dst[i] += a * x[i]
void caxpy(cplx* dst, cplx a, const cplx* x, std::size_t n);
// sum_i conj(a[i]) * b[i]
cplx cdot_conj(const cplx* a, const cplx* b, std::size_t n);
// sum_i |a[i]|^2
double csum_sq(const cplx* a, std::size_t n);
// sum_i |a[i] - b[i]|^2
double csum_sq_diff(const cplx* a, const cplx* b, std::size_t n);
// dst[i] = tgt[i] * conj(deg[i]) / (|deg[i]|^2 + eps)
void wiener_mask(cplx* dst, const cplx* deg, const cplx* tgt, double eps,
                 std::size_t n);

}  // namespace remixkit::kernels
