#pragma once

#include "remixkit/kernels.hpp"

// Internal: one function table per backend. dispatch.cpp owns the active
// pointer; scalar.cpp / avx2.cpp each export their table.

namespace remixkit::kernels::detail {

struct KernelTable {
  double (*sum_squares)(const double*, std::size_t);
  double (*sum_sq_diff)(const double*, const double*, std::size_t);
  double (*sum_abs_diff)(const double*, const double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  void (*multiply)(double*, const double*, const double*, std::size_t);
  void (*multiply_add)(double*, const double*, const double*, std::size_t);

  void (*cmultiply)(cplx*, const cplx*, const cplx*, std::size_t);
  void (*cmultiply_add)(cplx*, const cplx*, const cplx*, std::size_t);
  void (*caxpy)(cplx*, cplx, const cplx*, std::size_t);
  cplx (*cdot_conj)(const cplx*, const cplx*, std::size_t);
  double (*csum_sq)(const cplx*, std::size_t);
  double (*csum_sq_diff)(const cplx*, const cplx*, std::size_t);
  void (*wiener_mask)(cplx*, const cplx*, const cplx*, double, std::size_t);
};

const KernelTable& scalar_table();

#if defined(__x86_64__) || defined(_M_X64)
#define REMIXKIT_HAVE_AVX2_BUILD 1
const KernelTable& avx2_table();
#endif

}  // namespace remixkit::kernels::detail
