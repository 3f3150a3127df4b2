#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "remixkit/kernels.hpp"
#include "remixkit/stft.hpp"

using namespace remixkit;
using testutil::cplx;

namespace {

double rms_rel_error(const AudioBuffer& a, const AudioBuffer& b) {
  double num = 0.0, den = 0.0;
  for (int c = 0; c < a.num_channels(); ++c)
    for (std::size_t i = 0; i < a.length(); ++i) {
      const double d = a.channels[c][i] - b.channels[c][i];
      num += d * d;
      den += a.channels[c][i] * a.channels[c][i];
    }
  return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("default shape: 2 s stereo") {
  const auto audio = testutil::random_audio(2, 88200);
  const Spectrogram spec = stft(audio);
  CHECK(spec.frames == 201);
  CHECK(spec.bins == 1025);
  CHECK(spec.channels == 2);
  CHECK(spec.source_length == 88200);
}

TEST_CASE("shape law T = floor(L/hop) + 1") {
  const StftParams p;
  for (std::size_t len : {std::size_t(1), std::size_t(441), std::size_t(442),
                          std::size_t(4410)}) {
    AudioBuffer audio(1, len);
    audio.channels[0][0] = 1.0;
    const Spectrogram spec = stft(audio, p);
    CHECK(spec.frames == int(len / 441) + 1);
  }
}

TEST_CASE("all-zero input gives all-zero spectrogram") {
  const AudioBuffer audio(2, 8820);
  const Spectrogram spec = stft(audio);
  for (const auto& v : spec.data) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("unit impulse frame 0 matches a direct DFT of the windowed frame") {
  AudioBuffer audio(1, 4410);
  audio.channels[0][0] = 1.0;
  const StftParams p;
  const Spectrogram spec = stft(audio, p);

  // frame 0 covers padded samples [0, fft); the impulse lands at fft/2 where
  // the periodic Hann equals 1. The oracle DFT sees that single sample.
  std::vector<cplx> frame(p.fft_size, cplx(0.0, 0.0));
  const double w_center = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi *
                                                (p.fft_size / 2) / p.win_size));
  frame[p.fft_size / 2] = w_center;
  const auto want = testutil::naive_dft(frame);
  for (int f = 0; f < spec.bins; ++f)
    CHECK(std::abs(spec.at(0, 0, f) - want[f]) < 1e-12);
  CHECK(w_center == doctest::Approx(1.0));
}

TEST_CASE("round trip is exact to double precision") {
  const auto audio = testutil::random_audio(2, 88200);
  const AudioBuffer back = istft(stft(audio));
  CHECK(back.length() == audio.length());
  CHECK(rms_rel_error(audio, back) < 1e-8);

  double max_abs = 0.0, max_err = 0.0;
  for (int c = 0; c < 2; ++c)
    for (std::size_t i = 0; i < audio.length(); ++i) {
      max_abs = std::max(max_abs, std::abs(audio.channels[c][i]));
      max_err = std::max(max_err,
                         std::abs(audio.channels[c][i] - back.channels[c][i]));
    }
  CHECK(max_err < 1e-8 * max_abs);
}

TEST_CASE("round trip preserves sine energy") {
  AudioBuffer audio(1, 44100);
  for (std::size_t i = 0; i < audio.length(); ++i)
    audio.channels[0][i] =
        std::sin(2.0 * std::numbers::pi * 1000.0 * double(i) / 44100.0);
  const AudioBuffer back = istft(stft(audio));
  const double e0 = kernels::sum_squares(audio.channels[0].data(), 44100);
  const double e1 = kernels::sum_squares(back.channels[0].data(), 44100);
  CHECK(std::abs(e1 - e0) / e0 < 1e-6);
}

TEST_CASE("zero spectrogram inverts to zero signal of source_length") {
  Spectrogram spec;
  spec.channels = 1;
  spec.frames = stft_frame_count(22050, spec.params);
  spec.bins = spec.params.bins();
  spec.source_length = 22050;
  spec.data.assign(std::size_t(spec.frames) * spec.bins, cplx(0.0, 0.0));
  const AudioBuffer out = istft(spec);
  CHECK(out.length() == 22050);
  for (double v : out.channels[0]) CHECK(v == 0.0);
}

TEST_CASE("linearity") {
  const auto x = testutil::random_audio(1, 22050);
  const auto y = testutil::random_audio(1, 22050);
  const double a = 1.25, b = -0.75;
  AudioBuffer mixbuf(1, 22050);
  for (std::size_t i = 0; i < mixbuf.length(); ++i)
    mixbuf.channels[0][i] = a * x.channels[0][i] + b * y.channels[0][i];

  const Spectrogram sx = stft(x), sy = stft(y), sm = stft(mixbuf);
  double max_rel = 0.0;
  for (std::size_t i = 0; i < sm.data.size(); ++i) {
    const cplx want = a * sx.data[i] + b * sy.data[i];
    max_rel = std::max(max_rel, std::abs(sm.data[i] - want));
  }
  double scale = 0.0;
  for (const auto& v : sm.data) scale = std::max(scale, std::abs(v));
  CHECK(max_rel < 1e-12 * scale);
}

TEST_CASE("non power-of-two fft_size still round-trips") {
  StftParams p;
  p.win_size = 1200;
  p.fft_size = 1200;
  p.hop = 300;
  const auto audio = testutil::random_audio(1, 6000);
  const AudioBuffer back = istft(stft(audio, p));
  CHECK(rms_rel_error(audio, back) < 1e-8);
}

TEST_CASE("error contracts") {
  CHECK_THROWS_AS(stft(AudioBuffer{}), std::invalid_argument);

  StftParams bad;
  bad.hop = 0;
  CHECK_THROWS_AS(stft(testutil::random_audio(1, 4410), bad),
                  std::invalid_argument);
  bad = StftParams{};
  bad.win_size = 4096;  // exceeds fft_size
  CHECK_THROWS_AS(stft(testutil::random_audio(1, 4410), bad),
                  std::invalid_argument);
  bad = StftParams{};
  bad.hop = 4096;  // exceeds win_size
  CHECK_THROWS_AS(stft(testutil::random_audio(1, 4410), bad),
                  std::invalid_argument);

  Spectrogram spec = stft(testutil::random_audio(1, 4410));
  spec.bins -= 1;  // shape no longer matches params
  CHECK_THROWS_AS(istft(spec), std::invalid_argument);

  spec = stft(testutil::random_audio(1, 4410));
  spec.source_length = 9999999;  // frame count inconsistent
  CHECK_THROWS_AS(istft(spec), std::invalid_argument);
}
