#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace remixkit {

// Dense Hermitian matrix, row-major, n x n. Only small systems pass through
// here (filter fits are order <= 8; the FIR designer uses ~111 real unknowns).
struct HermitianMatrix {
  int n = 0;
  std::vector<std::complex<double>> a;

  explicit HermitianMatrix(int size)
      : n(size), a(std::size_t(size) * size, std::complex<double>(0.0, 0.0)) {}

  std::complex<double>& at(int i, int j) { return a[std::size_t(i) * n + j]; }
  const std::complex<double>& at(int i, int j) const {
    return a[std::size_t(i) * n + j];
  }
  double trace_real() const;
};

struct CholeskyResult {
  std::vector<std::complex<double>> solution;
  // max/min squared diagonal of the factor; crude condition estimate
  double condition = 1.0;
};

// Solve (G + ridge*I) w = r for Hermitian positive definite G. Returns
// nullopt when a pivot falls below tol * max_diag (matrix numerically
// singular).
std::optional<CholeskyResult> cholesky_solve(
    const HermitianMatrix& G, const std::vector<std::complex<double>>& r,
    double ridge = 0.0, double pivot_tol = 1e-13);

struct EighResult {
  std::vector<double> eigenvalues;            // ascending
  std::vector<std::complex<double>> vectors;  // column j = eigenvector j
};

// Cyclic Jacobi eigendecomposition for Hermitian matrices.
EighResult jacobi_eigh(const HermitianMatrix& G, int max_sweeps = 60);

struct PinvResult {
  std::vector<std::complex<double>> solution;
  double condition = 1.0;  // lambda_max / lambda_min over retained spectrum
  int rank = 0;
};

// Minimum-norm solution of G w = r via eigendecomposition; eigenvalues at or
// below rank_tol * lambda_max are dropped.
PinvResult pinv_solve(const HermitianMatrix& G,
                      const std::vector<std::complex<double>>& r,
                      double rank_tol = 1e-12);

}  // namespace remixkit
