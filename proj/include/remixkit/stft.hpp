#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "remixkit/audio.hpp"

namespace remixkit {

enum class Window { hann };

struct StftParams {
  int win_size = 2048;
  int fft_size = 2048;
  int hop = 441;
  Window window = Window::hann;
  bool center = true;  // pad fft_size/2 zeros on each side

  int bins() const { return fft_size / 2 + 1; }
  void validate() const;
  bool operator==(const StftParams&) const = default;
};

// Per-channel complex time-frequency matrix plus the analysis parameters
// that produced it. Row-major with frequency contiguous: [c][t][f].
struct Spectrogram {
  StftParams params;
  int channels = 0;
  int frames = 0;
  int bins = 0;
  std::size_t source_length = 0;
  int sample_rate = 44100;
  std::vector<std::complex<double>> data;

  std::complex<double>& at(int c, int t, int f) {
    return data[(std::size_t(c) * frames + t) * bins + f];
  }
  const std::complex<double>& at(int c, int t, int f) const {
    return data[(std::size_t(c) * frames + t) * bins + f];
  }
  std::span<std::complex<double>> row(int c, int t) {
    return {data.data() + (std::size_t(c) * frames + t) * bins,
            std::size_t(bins)};
  }
  std::span<const std::complex<double>> row(int c, int t) const {
    return {data.data() + (std::size_t(c) * frames + t) * bins,
            std::size_t(bins)};
  }
  bool shape_equals(const Spectrogram& o) const {
    return channels == o.channels && frames == o.frames && bins == o.bins;
  }
};

// Number of analysis frames for a signal of the given length.
int stft_frame_count(std::size_t source_length, const StftParams& params);

// Windowed framed DFT. Frame t covers samples [t*hop - fft_size/2,
// t*hop + fft_size/2) of the zero-padded input when center is on.
Spectrogram stft(const AudioBuffer& audio, const StftParams& params = {});

// Weighted overlap-add inverse with synthesis window equal to the analysis
// window, normalized by the summed squared-window envelope; reconstructs the
// input exactly wherever the envelope is nonzero. Envelope values below
// 1e-10 are left unnormalized.
AudioBuffer istft(const Spectrogram& spec);

}  // namespace remixkit
