#pragma once

#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "remixkit/audio.hpp"
#include "remixkit/stft.hpp"

// Shared test utilities: random data sources and brute-force oracles kept
// independent of the library's transform/kernel code paths.

namespace testutil {

using cplx = std::complex<double>;

inline std::mt19937& rng() {
  static std::mt19937 gen(12345);
  return gen;
}

inline double uniform(double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline cplx random_cplx(double scale = 1.0) {
  return {scale * uniform(), scale * uniform()};
}

inline std::vector<double> random_signal(std::size_t n, double scale = 1.0) {
  std::vector<double> x(n);
  for (auto& v : x) v = scale * uniform();
  return x;
}

inline remixkit::AudioBuffer random_audio(int channels, std::size_t n,
                                          int rate = 44100) {
  remixkit::AudioBuffer out(channels, n, rate);
  for (auto& ch : out.channels)
    for (auto& v : ch) v = uniform();
  return out;
}

inline remixkit::Spectrogram random_spectrogram(int channels, int frames,
                                                int bins) {
  remixkit::Spectrogram spec;
  spec.channels = channels;
  spec.frames = frames;
  spec.bins = bins;
  spec.params.fft_size = 2 * (bins - 1);
  spec.params.win_size = spec.params.fft_size;
  spec.params.hop = std::max(1, spec.params.fft_size / 4);
  spec.source_length = std::size_t(frames - 1) * spec.params.hop + 1;
  spec.data.resize(std::size_t(channels) * frames * bins);
  for (auto& v : spec.data) v = random_cplx();
  return spec;
}

// O(n^2) reference DFT, forward sign convention e^{-2*pi*i*k*n/N}.
inline std::vector<cplx> naive_dft(const std::vector<cplx>& x) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      const double ang = -2.0 * std::numbers::pi * double(k * j % n) / double(n);
      out[k] += x[j] * cplx(std::cos(ang), std::sin(ang));
    }
  return out;
}

// Full linear convolution, direct triple loop.
inline std::vector<double> naive_convolve(const std::vector<double>& x,
                                          const std::vector<double>& h) {
  std::vector<double> y(x.size() + h.size() - 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j) y[i + j] += x[i] * h[j];
  return y;
}

inline double max_abs_diff(const std::vector<cplx>& a,
                           const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace testutil
