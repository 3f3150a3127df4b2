#include <cmath>

#include "kernel_table.hpp"

// Reference implementations. Plain loops, fixed accumulation order; every
// other backend is tested against these.

namespace remixkit::kernels::detail {
namespace {

double s_sum_squares(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double s_sum_sq_diff(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - y[i];
    acc += d * d;
  }
  return acc;
}

double s_sum_abs_diff(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::abs(x[i] - y[i]);
  return acc;
}

double s_dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void s_multiply(double* dst, const double* x, const double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] * y[i];
}

void s_multiply_add(double* dst, const double* x, const double* y,
                    std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += x[i] * y[i];
}

void s_cmultiply(cplx* dst, const cplx* a, const cplx* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    dst[i] = cplx(ar * br - ai * bi, ar * bi + ai * br);
  }
}

void s_cmultiply_add(cplx* dst, const cplx* a, const cplx* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    dst[i] += cplx(ar * br - ai * bi, ar * bi + ai * br);
  }
}

void s_caxpy(cplx* dst, cplx a, const cplx* x, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    dst[i] += cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

cplx s_cdot_conj(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

double s_csum_sq(const cplx* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return acc;
}

double s_csum_sq_diff(const cplx* a, const cplx* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dr = a[i].real() - b[i].real();
    const double di = a[i].imag() - b[i].imag();
    acc += dr * dr + di * di;
  }
  return acc;
}

void s_wiener_mask(cplx* dst, const cplx* deg, const cplx* tgt, double eps,
                   std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dr = deg[i].real(), di = deg[i].imag();
    const double tr = tgt[i].real(), ti = tgt[i].imag();
    const double den = dr * dr + di * di + eps;
    dst[i] = cplx((tr * dr + ti * di) / den, (ti * dr - tr * di) / den);
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table = {
      s_sum_squares, s_sum_sq_diff,   s_sum_abs_diff, s_dot,
      s_multiply,    s_multiply_add,  s_cmultiply,    s_cmultiply_add,
      s_caxpy,       s_cdot_conj,     s_csum_sq,      s_csum_sq_diff,
      s_wiener_mask,
  };
  return table;
}

}  // namespace remixkit::kernels::detail
