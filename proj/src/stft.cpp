#include "remixkit/stft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "remixkit/fft.hpp"
#include "remixkit/kernels.hpp"

namespace remixkit {

namespace {

constexpr double kEnvelopeFloor = 1e-10;

// Periodic Hann, embedded centered in an fft_size frame.
std::vector<double> frame_window(const StftParams& p) {
  std::vector<double> w(p.fft_size, 0.0);
  const int offset = (p.fft_size - p.win_size) / 2;
  for (int n = 0; n < p.win_size; ++n)
    w[offset + n] =
        0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * n / p.win_size));
  return w;
}

}  // namespace

void StftParams::validate() const {
  if (hop < 1) throw std::invalid_argument("stft: hop must be >= 1");
  if (win_size < 1) throw std::invalid_argument("stft: win_size must be >= 1");
  if (win_size > fft_size)
    throw std::invalid_argument("stft: win_size must not exceed fft_size");
  if (hop > win_size)
    throw std::invalid_argument("stft: hop must not exceed win_size");
}

int stft_frame_count(std::size_t source_length, const StftParams& params) {
  if (params.center) return int(source_length / params.hop) + 1;
  if (source_length < std::size_t(params.fft_size)) return 0;
  return int((source_length - params.fft_size) / params.hop) + 1;
}

Spectrogram stft(const AudioBuffer& audio, const StftParams& params) {
  params.validate();
  audio.validate("stft");
  if (audio.empty()) throw std::invalid_argument("stft: empty audio");

  const int fft_size = params.fft_size;
  const int bins = params.bins();
  const std::size_t len = audio.length();
  const int frames = stft_frame_count(len, params);
  if (frames <= 0) throw std::invalid_argument("stft: signal shorter than one frame");

  Spectrogram spec;
  spec.params = params;
  spec.channels = audio.num_channels();
  spec.frames = frames;
  spec.bins = bins;
  spec.source_length = len;
  spec.sample_rate = audio.sample_rate;
  spec.data.resize(std::size_t(spec.channels) * frames * bins);

  const std::vector<double> window = frame_window(params);
  const Fft fft(fft_size);
  const std::size_t lead = params.center ? std::size_t(fft_size / 2) : 0;

  std::vector<double> padded;
  std::vector<double> frame(fft_size);
  for (int c = 0; c < spec.channels; ++c) {
    padded.assign(len + 2 * lead, 0.0);
    for (std::size_t i = 0; i < len; ++i) padded[lead + i] = audio.channels[c][i];
    for (int t = 0; t < frames; ++t) {
      kernels::multiply(frame.data(), padded.data() + std::size_t(t) * params.hop,
                        window.data(), fft_size);
      fft.rfft(frame.data(), spec.row(c, t).data());
    }
  }
  return spec;
}

AudioBuffer istft(const Spectrogram& spec) {
  spec.params.validate();
  if (spec.channels < 1 || spec.frames < 1)
    throw std::invalid_argument("istft: empty spectrogram");
  if (spec.bins != spec.params.bins())
    throw std::invalid_argument("istft: bin count does not match fft_size");
  if (spec.data.size() !=
      std::size_t(spec.channels) * spec.frames * spec.bins)
    throw std::invalid_argument("istft: data size does not match shape");
  if (spec.source_length == 0)
    throw std::invalid_argument("istft: missing source_length");
  if (spec.frames != stft_frame_count(spec.source_length, spec.params))
    throw std::invalid_argument("istft: frame count inconsistent with source_length");

  const StftParams& p = spec.params;
  const int fft_size = p.fft_size;
  const std::size_t lead = p.center ? std::size_t(fft_size / 2) : 0;
  const std::size_t padded_len =
      std::max(std::size_t(spec.frames - 1) * p.hop + fft_size,
               spec.source_length + 2 * lead);

  const std::vector<double> window = frame_window(p);
  const Fft fft(fft_size);

  // Envelope is channel-independent: accumulate once.
  std::vector<double> env(padded_len, 0.0);
  for (int t = 0; t < spec.frames; ++t)
    kernels::multiply_add(env.data() + std::size_t(t) * p.hop, window.data(),
                          window.data(), fft_size);

  AudioBuffer out(spec.channels, spec.source_length, spec.sample_rate);
  std::vector<double> acc(padded_len);
  std::vector<double> frame(fft_size);
  for (int c = 0; c < spec.channels; ++c) {
    acc.assign(padded_len, 0.0);
    for (int t = 0; t < spec.frames; ++t) {
      fft.irfft(spec.row(c, t).data(), frame.data());
      kernels::multiply_add(acc.data() + std::size_t(t) * p.hop, frame.data(),
                            window.data(), fft_size);
    }
    for (std::size_t i = 0; i < spec.source_length; ++i) {
      const std::size_t pidx = i + lead;
      out.channels[c][i] =
          env[pidx] < kEnvelopeFloor ? acc[pidx] : acc[pidx] / env[pidx];
    }
  }
  return out;
}

}  // namespace remixkit
