#pragma once

#include <vector>

#include "remixkit/filtering.hpp"
#include "remixkit/stft.hpp"

namespace remixkit {

enum class EnhanceMode { crm, df };

// Closed-form estimation settings. `ridge` is scaled per system by
// trace(A^H A)/N so the regularization is invariant to signal level;
// block_frames == 0 fits one filter per (channel, frequency) over the whole
// signal, otherwise one per block of that many frames.
struct EstimatorConfig {
  FilterOrder order = FilterOrder::causal(5);
  double ridge = 1e-8;
  int block_frames = 0;
  double eps = 1e-12;  // stabilizer for the per-bin mask

  void validate() const;
};

// Fit diagnostics. Residuals are per (channel, frequency), summed over
// frames: `before` against the unfiltered input (identity filter), `after`
// against the fitted output. total_relative_residual =
// sqrt(sum(after) / sum |target|^2).
struct FitReport {
  int channels = 0;
  int bins = 0;
  std::vector<double> residual_before;  // [c*bins + f]
  std::vector<double> residual_after;
  std::vector<double> target_energy;
  double total_relative_residual = 0.0;
  int block_count = 1;
  int degenerate_systems = 0;  // all-zero regressor blocks (w = 0)
  int pinv_fallbacks = 0;      // singular systems solved in minimum-norm sense
  double max_condition = 1.0;

  double& before(int c, int f) { return residual_before[std::size_t(c) * bins + f]; }
  double& after(int c, int f) { return residual_after[std::size_t(c) * bins + f]; }
  double before(int c, int f) const { return residual_before[std::size_t(c) * bins + f]; }
  double after(int c, int f) const { return residual_after[std::size_t(c) * bins + f]; }
};

// Per-bin Wiener-stabilized mask: M = target * conj(degraded) /
// (|degraded|^2 + eps).
ComplexMask oracle_crm(const Spectrogram& degraded, const Spectrogram& target,
                       double eps = 1e-12);

// Least-squares multi-frame filters, one per (channel, frequency, block):
// minimizes sum_t |U[t,f,:] . w - target[t,f]|^2 + ridge_eff |w|^2 over the
// block's frames, where U is the unfolding of `degraded`. The returned
// tensor repeats each block's coefficients across its frames. Singular
// systems at ridge 0 fall back to the minimum-norm solution; all-zero
// regressor rows yield w = 0 and are counted, never errors.
std::pair<DeepFilterTensor, FitReport> fit_per_frequency_df(
    const Spectrogram& degraded, const Spectrogram& target,
    const EstimatorConfig& cfg);

// Fit + apply in one step: apply_crm with the oracle mask, or
// apply_deep_filter with the fitted tensor.
std::pair<Spectrogram, FitReport> enhance_spectrogram(
    const Spectrogram& degraded, const Spectrogram& target, EnhanceMode mode,
    const EstimatorConfig& cfg);

}  // namespace remixkit
