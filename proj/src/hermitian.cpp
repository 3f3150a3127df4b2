#include "remixkit/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace remixkit {

using cplx = std::complex<double>;

double HermitianMatrix::trace_real() const {
  double tr = 0.0;
  for (int i = 0; i < n; ++i) tr += at(i, i).real();
  return tr;
}

std::optional<CholeskyResult> cholesky_solve(const HermitianMatrix& G,
                                             const std::vector<cplx>& r,
                                             double ridge, double pivot_tol) {
  const int n = G.n;
  if (int(r.size()) != n)
    throw std::invalid_argument("cholesky_solve: rhs size mismatch");

  // L L^H = G + ridge*I, lower triangle stored
  HermitianMatrix L(n);
  double max_diag = 0.0;
  for (int i = 0; i < n; ++i)
    max_diag = std::max(max_diag, G.at(i, i).real() + ridge);
  if (max_diag <= 0.0) return std::nullopt;

  double dmin = 0.0, dmax = 0.0;
  for (int j = 0; j < n; ++j) {
    double d = G.at(j, j).real() + ridge;
    for (int k = 0; k < j; ++k) d -= std::norm(L.at(j, k));
    if (!(d > pivot_tol * max_diag)) return std::nullopt;
    const double dj = std::sqrt(d);
    L.at(j, j) = dj;
    dmin = (j == 0) ? d : std::min(dmin, d);
    dmax = std::max(dmax, d);
    for (int i = j + 1; i < n; ++i) {
      cplx s = G.at(i, j);
      for (int k = 0; k < j; ++k) s -= L.at(i, k) * std::conj(L.at(j, k));
      L.at(i, j) = s / dj;
    }
  }

  // forward then back substitution
  std::vector<cplx> y(n);
  for (int i = 0; i < n; ++i) {
    cplx s = r[i];
    for (int k = 0; k < i; ++k) s -= L.at(i, k) * y[k];
    y[i] = s / L.at(i, i);
  }
  CholeskyResult out;
  out.solution.resize(n);
  for (int i = n - 1; i >= 0; --i) {
    cplx s = y[i];
    for (int k = i + 1; k < n; ++k)
      s -= std::conj(L.at(k, i)) * out.solution[k];
    out.solution[i] = s / L.at(i, i);
  }
  out.condition = dmax / dmin;
  return out;
}

EighResult jacobi_eigh(const HermitianMatrix& G, int max_sweeps) {
  const int n = G.n;
  HermitianMatrix A = G;
  std::vector<cplx> V(std::size_t(n) * n, cplx(0.0, 0.0));
  for (int i = 0; i < n; ++i) V[std::size_t(i) * n + i] = 1.0;

  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += std::norm(A.at(i, j));
    return s;
  };
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale += std::norm(A.at(i, j));
  const double stop = scale * 1e-30;

  for (int sweep = 0; sweep < max_sweeps && off_norm() > stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = A.at(p, q);
        if (std::norm(apq) == 0.0) continue;
        const double app = A.at(p, p).real();
        const double aqq = A.at(q, q).real();
        // unitary rotation [c, s; -conj(s), c] zeroing A(p,q)
        const double absapq = std::abs(apq);
        const cplx phase = apq / absapq;
        const double tau = (aqq - app) / (2.0 * absapq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx s = phase * (t * c);

        for (int k = 0; k < n; ++k) {
          const cplx akp = A.at(k, p);
          const cplx akq = A.at(k, q);
          A.at(k, p) = c * akp - std::conj(s) * akq;
          A.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx apk = A.at(p, k);
          const cplx aqk = A.at(q, k);
          A.at(p, k) = c * apk - s * aqk;
          A.at(q, k) = std::conj(s) * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const cplx vkp = V[std::size_t(k) * n + p];
          const cplx vkq = V[std::size_t(k) * n + q];
          V[std::size_t(k) * n + p] = c * vkp - std::conj(s) * vkq;
          V[std::size_t(k) * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  EighResult out;
  out.eigenvalues.resize(n);
  out.vectors.assign(std::size_t(n) * n, cplx(0.0, 0.0));
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<double> evals(n);
  for (int i = 0; i < n; ++i) evals[i] = A.at(i, i).real();
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return evals[a] < evals[b]; });
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = evals[idx[j]];
    for (int i = 0; i < n; ++i)
      out.vectors[std::size_t(i) * n + j] = V[std::size_t(i) * n + idx[j]];
  }
  return out;
}

PinvResult pinv_solve(const HermitianMatrix& G, const std::vector<cplx>& r,
                      double rank_tol) {
  const int n = G.n;
  if (int(r.size()) != n)
    throw std::invalid_argument("pinv_solve: rhs size mismatch");
  const EighResult eig = jacobi_eigh(G);
  const double lmax = eig.eigenvalues.empty()
                          ? 0.0
                          : std::max(0.0, eig.eigenvalues.back());
  const double cutoff = lmax * rank_tol;

  PinvResult out;
  out.solution.assign(n, cplx(0.0, 0.0));
  double lmin_kept = 0.0;
  for (int j = 0; j < n; ++j) {
    const double lam = eig.eigenvalues[j];
    if (lam <= cutoff || lam <= 0.0) continue;
    if (out.rank == 0 || lam < lmin_kept) lmin_kept = lam;
    ++out.rank;
    cplx proj(0.0, 0.0);
    for (int i = 0; i < n; ++i)
      proj += std::conj(eig.vectors[std::size_t(i) * n + j]) * r[i];
    const cplx coef = proj / lam;
    for (int i = 0; i < n; ++i)
      out.solution[i] += coef * eig.vectors[std::size_t(i) * n + j];
  }
  out.condition = (out.rank > 0 && lmin_kept > 0.0) ? lmax / lmin_kept : 1.0;
  return out;
}

}  // namespace remixkit
