#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "kernel_table.hpp"

namespace remixkit::kernels {
namespace {

using detail::KernelTable;

bool cpu_has_avx2() {
#if defined(REMIXKIT_HAVE_AVX2_BUILD)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* table_for(Backend b) {
  switch (b) {
    case Backend::scalar:
      return &detail::scalar_table();
    case Backend::avx2:
#if defined(REMIXKIT_HAVE_AVX2_BUILD)
      return &detail::avx2_table();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

struct Dispatch {
  std::atomic<const KernelTable*> table;
  std::atomic<Backend> backend;

  Dispatch() {
    Backend pick = cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
    if (const char* env = std::getenv("REMIXKIT_SIMD")) {
      if (std::strcmp(env, "scalar") == 0) {
        pick = Backend::scalar;
      } else if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) {
        pick = Backend::avx2;
      }
      // anything else (including "auto") keeps the detected choice
    }
    backend = pick;
    table = table_for(pick);
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

inline const KernelTable& tab() { return *dispatch().table.load(); }

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "?";
}

bool backend_supported(Backend b) {
  return b == Backend::scalar || (b == Backend::avx2 && cpu_has_avx2());
}

Backend active_backend() { return dispatch().backend.load(); }

void set_backend(Backend b) {
  if (!backend_supported(b))
    throw std::invalid_argument(std::string("SIMD backend not supported: ") +
                                backend_name(b));
  dispatch().backend = b;
  dispatch().table = table_for(b);
}

double sum_squares(const double* x, std::size_t n) {
  return tab().sum_squares(x, n);
}
double sum_sq_diff(const double* x, const double* y, std::size_t n) {
  return tab().sum_sq_diff(x, y, n);
}
double sum_abs_diff(const double* x, const double* y, std::size_t n) {
  return tab().sum_abs_diff(x, y, n);
}
double dot(const double* x, const double* y, std::size_t n) {
  return tab().dot(x, y, n);
}
void multiply(double* dst, const double* x, const double* y, std::size_t n) {
  tab().multiply(dst, x, y, n);
}
void multiply_add(double* dst, const double* x, const double* y,
                  std::size_t n) {
  tab().multiply_add(dst, x, y, n);
}
void cmultiply(cplx* dst, const cplx* a, const cplx* b, std::size_t n) {
  tab().cmultiply(dst, a, b, n);
}
void cmultiply_add(cplx* dst, const cplx* a, const cplx* b, std::size_t n) {
  tab().cmultiply_add(dst, a, b, n);
}
void caxpy(cplx* dst, cplx a, const cplx* x, std::size_t n) {
  tab().caxpy(dst, a, x, n);
}
cplx cdot_conj(const cplx* a, const cplx* b, std::size_t n) {
  return tab().cdot_conj(a, b, n);
}
double csum_sq(const cplx* a, std::size_t n) { return tab().csum_sq(a, n); }
double csum_sq_diff(const cplx* a, const cplx* b, std::size_t n) {
  return tab().csum_sq_diff(a, b, n);
}
void wiener_mask(cplx* dst, const cplx* deg, const cplx* tgt, double eps,
                 std::size_t n) {
  tab().wiener_mask(dst, deg, tgt, eps, n);
}

}  // namespace remixkit::kernels
