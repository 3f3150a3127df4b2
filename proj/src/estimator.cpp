#include "remixkit/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "remixkit/hermitian.hpp"
#include "remixkit/kernels.hpp"

namespace remixkit {

using cplx = std::complex<double>;

namespace {

void check_shapes(const Spectrogram& degraded, const Spectrogram& target,
                  const char* what) {
  if (!degraded.shape_equals(target) || !(degraded.params == target.params))
    throw std::invalid_argument(std::string(what) +
                                ": degraded/target shape mismatch");
}

// Frame blocks covering [0, frames); a trailing block shorter than the
// filter order is merged into its predecessor.
std::vector<std::pair<int, int>> make_blocks(int frames, int block_frames,
                                             int order) {
  std::vector<std::pair<int, int>> blocks;
  if (block_frames <= 0 || block_frames >= frames) {
    blocks.emplace_back(0, frames);
    return blocks;
  }
  for (int t0 = 0; t0 < frames; t0 += block_frames)
    blocks.emplace_back(t0, std::min(t0 + block_frames, frames));
  if (blocks.size() > 1 && blocks.back().second - blocks.back().first < order) {
    blocks[blocks.size() - 2].second = blocks.back().second;
    blocks.pop_back();
  }
  return blocks;
}

}  // namespace

void EstimatorConfig::validate() const {
  order.validate();
  if (ridge < 0.0) throw std::invalid_argument("estimator: ridge must be >= 0");
  if (eps < 0.0) throw std::invalid_argument("estimator: eps must be >= 0");
  if (block_frames != 0 && block_frames < order.order())
    throw std::invalid_argument(
        "estimator: block_frames must be 0 (whole signal) or >= filter order");
}

ComplexMask oracle_crm(const Spectrogram& degraded, const Spectrogram& target,
                       double eps) {
  check_shapes(degraded, target, "oracle_crm");
  if (eps < 0.0) throw std::invalid_argument("oracle_crm: eps must be >= 0");
  ComplexMask mask(degraded.channels, degraded.frames, degraded.bins);
  kernels::wiener_mask(mask.data.data(), degraded.data.data(),
                       target.data.data(), eps, degraded.data.size());
  return mask;
}

std::pair<DeepFilterTensor, FitReport> fit_per_frequency_df(
    const Spectrogram& degraded, const Spectrogram& target,
    const EstimatorConfig& cfg) {
  check_shapes(degraded, target, "fit_per_frequency_df");
  cfg.validate();

  const int N = cfg.order.order();
  const int L = cfg.order.lookback;
  const int C = degraded.channels;
  const int T = degraded.frames;
  const int F = degraded.bins;
  const auto blocks = make_blocks(T, cfg.block_frames, N);
  if (blocks.front().second - blocks.front().first < N)
    throw std::invalid_argument(
        "fit_per_frequency_df: fewer frames than filter order");

  DeepFilterTensor filt(cfg.order, C, T, F);
  FitReport rep;
  rep.channels = C;
  rep.bins = F;
  rep.residual_before.assign(std::size_t(C) * F, 0.0);
  rep.residual_after.assign(std::size_t(C) * F, 0.0);
  rep.target_energy.assign(std::size_t(C) * F, 0.0);
  rep.block_count = int(blocks.size());

  // Per-frequency time series, gathered contiguously per channel.
  std::vector<cplx> x(T), b(T), pred;
  std::vector<cplx> rhs(N);
  double total_after = 0.0, total_energy = 0.0;

  for (int c = 0; c < C; ++c) {
    for (int f = 0; f < F; ++f) {
      for (int t = 0; t < T; ++t) {
        x[t] = degraded.at(c, t, f);
        b[t] = target.at(c, t, f);
      }
      for (const auto& [t0, t1] : blocks) {
        const int len = t1 - t0;
        // Normal equations. Column k of the regressor matrix is the series
        // shifted by k - L, so every entry is a windowed correlation:
        //   G[j][k] = sum_t conj(x[t-L+j]) x[t-L+k]
        //   rhs[j]  = sum_t conj(x[t-L+j]) b[t]
        // with t restricted to rows where the shifted indices stay inside
        // [0, T) (out-of-range taps contribute zero).
        HermitianMatrix G(N);
        for (int j = 0; j < N; ++j)
          for (int k = j; k < N; ++k) {
            const int ta = std::max(t0, L - std::min(j, k));
            const int tb = std::min(t1, T + L - std::max(j, k));
            cplx g(0.0, 0.0);
            if (tb > ta)
              g = kernels::cdot_conj(x.data() + ta - L + j,
                                     x.data() + ta - L + k, tb - ta);
            G.at(j, k) = g;
            G.at(k, j) = std::conj(g);
          }
        for (int j = 0; j < N; ++j) {
          const int ta = std::max(t0, L - j);
          const int tb = std::min(t1, T + L - j);
          rhs[j] = tb > ta ? kernels::cdot_conj(x.data() + ta - L + j,
                                                b.data() + ta, tb - ta)
                           : cplx(0.0, 0.0);
        }

        const double trace = G.trace_real();
        std::vector<cplx> w(N, cplx(0.0, 0.0));
        if (trace <= 0.0) {
          ++rep.degenerate_systems;
        } else {
          const double ridge_eff = cfg.ridge * trace / N;
          auto chol = cholesky_solve(G, rhs, ridge_eff);
          if (chol) {
            w = std::move(chol->solution);
            rep.max_condition = std::max(rep.max_condition, chol->condition);
          } else {
            auto pv = pinv_solve(G, rhs);
            w = std::move(pv.solution);
            rep.max_condition = std::max(rep.max_condition, pv.condition);
            ++rep.pinv_fallbacks;
          }
        }

        // Residuals, evaluated directly from the fitted coefficients.
        pred.assign(len, cplx(0.0, 0.0));
        for (int k = 0; k < N; ++k) {
          if (w[k] == cplx(0.0, 0.0)) continue;
          const int ta = std::max(t0, L - k);
          const int tb = std::min(t1, T + L - k);
          if (tb > ta)
            kernels::caxpy(pred.data() + (ta - t0), w[k],
                           x.data() + ta - L + k, tb - ta);
        }
        const double after = kernels::csum_sq_diff(pred.data(), b.data() + t0, len);
        const double before = kernels::csum_sq_diff(x.data() + t0, b.data() + t0, len);
        const double energy = kernels::csum_sq(b.data() + t0, len);
        rep.after(c, f) += after;
        rep.before(c, f) += before;
        rep.target_energy[std::size_t(c) * F + f] += energy;
        total_after += after;
        total_energy += energy;

        for (int k = 0; k < N; ++k)
          for (int t = t0; t < t1; ++t) filt.at(c, k, t, f) = w[k];
      }
    }
  }

  rep.total_relative_residual =
      total_energy > 0.0 ? std::sqrt(total_after / total_energy) : 0.0;
  return {std::move(filt), rep};
}

std::pair<Spectrogram, FitReport> enhance_spectrogram(
    const Spectrogram& degraded, const Spectrogram& target, EnhanceMode mode,
    const EstimatorConfig& cfg) {
  check_shapes(degraded, target, "enhance_spectrogram");
  cfg.validate();

  if (mode == EnhanceMode::df) {
    auto [filt, rep] = fit_per_frequency_df(degraded, target, cfg);
    Spectrogram out = apply_deep_filter(unfold_time(degraded, cfg.order), filt);
    return {std::move(out), std::move(rep)};
  }

  ComplexMask mask = oracle_crm(degraded, target, cfg.eps);
  Spectrogram out = apply_crm(degraded, mask);

  const int C = degraded.channels, T = degraded.frames, F = degraded.bins;
  FitReport rep;
  rep.channels = C;
  rep.bins = F;
  rep.residual_before.assign(std::size_t(C) * F, 0.0);
  rep.residual_after.assign(std::size_t(C) * F, 0.0);
  rep.target_energy.assign(std::size_t(C) * F, 0.0);
  double total_after = 0.0, total_energy = 0.0;
  for (int c = 0; c < C; ++c)
    for (int f = 0; f < F; ++f) {
      double before = 0.0, after = 0.0, energy = 0.0;
      for (int t = 0; t < T; ++t) {
        before += std::norm(degraded.at(c, t, f) - target.at(c, t, f));
        after += std::norm(out.at(c, t, f) - target.at(c, t, f));
        energy += std::norm(target.at(c, t, f));
      }
      rep.before(c, f) = before;
      rep.after(c, f) = after;
      rep.target_energy[std::size_t(c) * F + f] = energy;
      total_after += after;
      total_energy += energy;
    }
  rep.total_relative_residual =
      total_energy > 0.0 ? std::sqrt(total_after / total_energy) : 0.0;
  return {std::move(out), std::move(rep)};
}

}  // namespace remixkit
