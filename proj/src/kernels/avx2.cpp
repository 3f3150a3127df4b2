#include "kernel_table.hpp"

// AVX2+FMA backend: 4 doubles / 2 complex doubles per 256-bit vector.
// Complex data stays interleaved; multiplies use the movedup/permute/fmaddsub
// sequence. Horizontal reductions run in a fixed lane order so results are
// reproducible run to run.

#if defined(REMIXKIT_HAVE_AVX2_BUILD)

#include <immintrin.h>

#include <cmath>

namespace remixkit::kernels::detail {
namespace {

inline double hsum4(__m256d v) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, v);
  return lane[0] + lane[1] + lane[2] + lane[3];
}

double a_sum_squares(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d v0 = _mm256_loadu_pd(x + i);
    const __m256d v1 = _mm256_loadu_pd(x + i + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    acc0 = _mm256_fmadd_pd(v, v, acc0);
  }
  double acc = hsum4(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double a_sum_sq_diff(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double out = hsum4(acc);
  for (; i < n; ++i) {
    const double d = x[i] - y[i];
    out += d * d;
  }
  return out;
}

double a_sum_abs_diff(const double* x, const double* y, std::size_t n) {
  const __m256d signbit = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_add_pd(acc, _mm256_andnot_pd(signbit, d));
  }
  double out = hsum4(acc);
  for (; i < n; ++i) out += std::abs(x[i] - y[i]);
  return out;
}

double a_dot(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i),
                           acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4),
                           _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i),
                           acc0);
  double out = hsum4(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) out += x[i] * y[i];
  return out;
}

void a_multiply(double* dst, const double* x, const double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(
        dst + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) dst[i] = x[i] * y[i];
}

void a_multiply_add(double* dst, const double* x, const double* y,
                    std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(dst + i,
                     _mm256_fmadd_pd(_mm256_loadu_pd(x + i),
                                     _mm256_loadu_pd(y + i),
                                     _mm256_loadu_pd(dst + i)));
  for (; i < n; ++i) dst[i] += x[i] * y[i];
}

// [a0r*b0r - a0i*b0i, a0r*b0i + a0i*b0r, ...] for interleaved pairs
inline __m256d cmul2(__m256d a, __m256d b) {
  const __m256d are = _mm256_movedup_pd(a);
  const __m256d aim = _mm256_permute_pd(a, 0xF);
  const __m256d bsw = _mm256_permute_pd(b, 0x5);
  return _mm256_fmaddsub_pd(are, b, _mm256_mul_pd(aim, bsw));
}

void a_cmultiply(cplx* dst, const cplx* a, const cplx* b, std::size_t n) {
  auto* d = reinterpret_cast<double*>(dst);
  const auto* pa = reinterpret_cast<const double*>(a);
  const auto* pb = reinterpret_cast<const double*>(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    _mm256_storeu_pd(d + 2 * i, cmul2(_mm256_loadu_pd(pa + 2 * i),
                                      _mm256_loadu_pd(pb + 2 * i)));
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    dst[i] = cplx(ar * br - ai * bi, ar * bi + ai * br);
  }
}

void a_cmultiply_add(cplx* dst, const cplx* a, const cplx* b, std::size_t n) {
  auto* d = reinterpret_cast<double*>(dst);
  const auto* pa = reinterpret_cast<const double*>(a);
  const auto* pb = reinterpret_cast<const double*>(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d prod =
        cmul2(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i));
    _mm256_storeu_pd(d + 2 * i,
                     _mm256_add_pd(_mm256_loadu_pd(d + 2 * i), prod));
  }
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    dst[i] += cplx(ar * br - ai * bi, ar * bi + ai * br);
  }
}

void a_caxpy(cplx* dst, cplx a, const cplx* x, std::size_t n) {
  const __m256d are = _mm256_set1_pd(a.real());
  const __m256d aim = _mm256_set1_pd(a.imag());
  auto* d = reinterpret_cast<double*>(dst);
  const auto* px = reinterpret_cast<const double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(px + 2 * i);
    const __m256d vsw = _mm256_permute_pd(v, 0x5);
    const __m256d prod = _mm256_fmaddsub_pd(are, v, _mm256_mul_pd(aim, vsw));
    _mm256_storeu_pd(d + 2 * i,
                     _mm256_add_pd(_mm256_loadu_pd(d + 2 * i), prod));
  }
  const double ar = a.real(), ai = a.imag();
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    dst[i] += cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

cplx a_cdot_conj(const cplx* a, const cplx* b, std::size_t n) {
  // racc lanes accumulate [ar*br, ai*bi, ...] -> re = even + odd
  // iacc lanes accumulate [ar*bi, ai*br, ...] -> im = even - odd
  __m256d racc = _mm256_setzero_pd();
  __m256d iacc = _mm256_setzero_pd();
  const auto* pa = reinterpret_cast<const double*>(a);
  const auto* pb = reinterpret_cast<const double*>(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    racc = _mm256_fmadd_pd(va, vb, racc);
    iacc = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0x5), iacc);
  }
  alignas(32) double r[4], im[4];
  _mm256_store_pd(r, racc);
  _mm256_store_pd(im, iacc);
  double re = r[0] + r[1] + r[2] + r[3];
  double imag = im[0] - im[1] + im[2] - im[3];
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    imag += ar * bi - ai * br;
  }
  return {re, imag};
}

double a_csum_sq(const cplx* a, std::size_t n) {
  return a_sum_squares(reinterpret_cast<const double*>(a), 2 * n);
}

double a_csum_sq_diff(const cplx* a, const cplx* b, std::size_t n) {
  return a_sum_sq_diff(reinterpret_cast<const double*>(a),
                       reinterpret_cast<const double*>(b), 2 * n);
}

void a_wiener_mask(cplx* dst, const cplx* deg, const cplx* tgt, double eps,
                   std::size_t n) {
  const __m256d veps = _mm256_set1_pd(eps);
  auto* pd = reinterpret_cast<double*>(dst);
  const auto* pg = reinterpret_cast<const double*>(deg);
  const auto* pt = reinterpret_cast<const double*>(tgt);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d d = _mm256_loadu_pd(pg + 2 * i);
    const __m256d t = _mm256_loadu_pd(pt + 2 * i);
    // conj(d) * t: even = dr*tr + di*ti, odd = dr*ti - di*tr
    const __m256d dre = _mm256_movedup_pd(d);
    const __m256d dim = _mm256_permute_pd(d, 0xF);
    const __m256d tsw = _mm256_permute_pd(t, 0x5);
    const __m256d num = _mm256_fmsubadd_pd(dre, t, _mm256_mul_pd(dim, tsw));
    const __m256d sq = _mm256_mul_pd(d, d);
    const __m256d den = _mm256_add_pd(_mm256_hadd_pd(sq, sq), veps);
    _mm256_storeu_pd(pd + 2 * i, _mm256_div_pd(num, den));
  }
  for (; i < n; ++i) {
    const double dr = deg[i].real(), di = deg[i].imag();
    const double tr = tgt[i].real(), ti = tgt[i].imag();
    const double den = dr * dr + di * di + eps;
    dst[i] = cplx((tr * dr + ti * di) / den, (ti * dr - tr * di) / den);
  }
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table = {
      a_sum_squares, a_sum_sq_diff,   a_sum_abs_diff, a_dot,
      a_multiply,    a_multiply_add,  a_cmultiply,    a_cmultiply_add,
      a_caxpy,       a_cdot_conj,     a_csum_sq,      a_csum_sq_diff,
      a_wiener_mask,
  };
  return table;
}

}  // namespace remixkit::kernels::detail

#endif  // REMIXKIT_HAVE_AVX2_BUILD
