#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "remixkit/stft.hpp"

namespace remixkit {

// Temporal extent of a multi-frame filter: `lookback` past frames and
// `lookahead` future frames around the current one.
struct FilterOrder {
  int lookback = 4;
  int lookahead = 0;

  int order() const { return lookback + lookahead + 1; }
  static FilterOrder causal(int n) { return {n - 1, 0}; }
  void validate() const;
  bool operator==(const FilterOrder&) const = default;
};

// One complex multiplier per (channel, frame, bin); same shape as the
// spectrogram it scales.
struct ComplexMask {
  int channels = 0;
  int frames = 0;
  int bins = 0;
  std::vector<std::complex<double>> data;

  ComplexMask() = default;
  ComplexMask(int c, int t, int f)
      : channels(c), frames(t), bins(f),
        data(std::size_t(c) * t * f, std::complex<double>(0.0, 0.0)) {}

  std::complex<double>& at(int c, int t, int f) {
    return data[(std::size_t(c) * frames + t) * bins + f];
  }
  const std::complex<double>& at(int c, int t, int f) const {
    return data[(std::size_t(c) * frames + t) * bins + f];
  }
};

// Time-unfolded spectrogram: logical index [c][t][f][k] equals the source at
// frame t - lookback + k (zero outside the signal). Stored as k-planes of
// shape [t][f] so per-tap rows stay contiguous.
struct UnfoldedSpectrogram {
  FilterOrder order;
  StftParams params;
  int channels = 0;
  int frames = 0;
  int bins = 0;
  std::size_t source_length = 0;
  int sample_rate = 44100;
  std::vector<std::complex<double>> data;

  std::complex<double> at(int c, int t, int f, int k) const {
    return data[((std::size_t(c) * order.order() + k) * frames + t) * bins + f];
  }
  std::span<const std::complex<double>> plane_row(int c, int k, int t) const {
    return {data.data() +
                ((std::size_t(c) * order.order() + k) * frames + t) * bins,
            std::size_t(bins)};
  }
  std::span<std::complex<double>> plane_row(int c, int k, int t) {
    return {data.data() +
                ((std::size_t(c) * order.order() + k) * frames + t) * bins,
            std::size_t(bins)};
  }
};

// Per-bin complex filter coefficients, indexed [c][k][t][f] with k < order.
struct DeepFilterTensor {
  FilterOrder order;
  int channels = 0;
  int frames = 0;
  int bins = 0;
  std::vector<std::complex<double>> data;

  DeepFilterTensor() = default;
  DeepFilterTensor(FilterOrder ord, int c, int t, int f)
      : order(ord), channels(c), frames(t), bins(f),
        data(std::size_t(c) * ord.order() * t * f,
             std::complex<double>(0.0, 0.0)) {}

  std::complex<double>& at(int c, int k, int t, int f) {
    return data[((std::size_t(c) * order.order() + k) * frames + t) * bins + f];
  }
  const std::complex<double>& at(int c, int k, int t, int f) const {
    return data[((std::size_t(c) * order.order() + k) * frames + t) * bins + f];
  }
  std::span<const std::complex<double>> row(int c, int k, int t) const {
    return {data.data() +
                ((std::size_t(c) * order.order() + k) * frames + t) * bins,
            std::size_t(bins)};
  }
};

// Unfold along the time axis with zero padding at both temporal boundaries.
UnfoldedSpectrogram unfold_time(const Spectrogram& spec,
                                const FilterOrder& order);

// O[c][t][f] = I[c][t][f] * M[c][t][f]
Spectrogram apply_crm(const Spectrogram& spec, const ComplexMask& mask);

// O[c][t][f] = sum_k U[c][t][f][k] * M'[c][k][t][f]; plain bilinear dot
// product, no conjugation.
Spectrogram apply_deep_filter(const UnfoldedSpectrogram& unfolded,
                              const DeepFilterTensor& filt);

}  // namespace remixkit
