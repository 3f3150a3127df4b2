#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "remixkit/metrics.hpp"
#include "remixkit/rng.hpp"

using namespace remixkit;

TEST_CASE("identical signals hit the cap") {
  const AudioBuffer x = testutil::random_audio(2, 4000);
  const SdrResult r = sdr(x, x);
  CHECK(r.per_channel_db[0] == kSdrCapDb);
  CHECK(r.per_channel_db[1] == kSdrCapDb);
  CHECK(r.mean_db == kSdrCapDb);
}

TEST_CASE("half-amplitude copy scores 6.0206 dB") {
  const AudioBuffer x = testutil::random_audio(2, 8000);
  AudioBuffer half = x;
  for (auto& ch : half.channels)
    for (auto& v : ch) v *= 0.5;
  const SdrResult r = sdr(x, half);
  for (double v : r.per_channel_db)
    CHECK(v == doctest::Approx(6.0205999132796).epsilon(1e-10));
  CHECK(std::abs(r.mean_db - 6.0206) < 1e-4);
}

TEST_CASE("constructed 20 dB noise scores 20 dB") {
  const std::size_t n = 88200;
  AudioBuffer x(1, n);
  Rng rng(7);
  for (auto& v : x.channels[0]) v = rng.gaussian();
  AudioBuffer noisy = x;
  std::vector<double> noise(n);
  double sig_e = 0.0, noise_e = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    noise[i] = rng.gaussian();
    sig_e += x.channels[0][i] * x.channels[0][i];
    noise_e += noise[i] * noise[i];
  }
  const double scale = std::sqrt(sig_e / (noise_e * 100.0));  // 20 dB
  for (std::size_t i = 0; i < n; ++i) noisy.channels[0][i] += scale * noise[i];
  const SdrResult r = sdr(x, noisy);
  CHECK(std::abs(r.per_channel_db[0] - 20.0) < 0.2);
}

TEST_CASE("scale law") {
  const AudioBuffer x = testutil::random_audio(1, 5000);
  for (double alpha : {0.1, 0.5, 0.9, 0.99}) {
    AudioBuffer scaled = x;
    for (auto& v : scaled.channels[0]) v *= alpha;
    const double want = -10.0 * std::log10((1.0 - alpha) * (1.0 - alpha));
    CHECK(std::abs(sdr(x, scaled).per_channel_db[0] - want) < 1e-6);
  }
}

TEST_CASE("joint channel permutation leaves SDR unchanged") {
  const AudioBuffer a = testutil::random_audio(2, 3000);
  const AudioBuffer b = testutil::random_audio(2, 3000);
  AudioBuffer a_swapped = a, b_swapped = b;
  std::swap(a_swapped.channels[0], a_swapped.channels[1]);
  std::swap(b_swapped.channels[0], b_swapped.channels[1]);
  const SdrResult r1 = sdr(a, b);
  const SdrResult r2 = sdr(a_swapped, b_swapped);
  CHECK(r1.mean_db == doctest::Approx(r2.mean_db).epsilon(1e-14));
  CHECK(r1.per_channel_db[0] == doctest::Approx(r2.per_channel_db[1]));
}

TEST_CASE("undefined metric on a silent reference") {
  AudioBuffer zero(2, 1000);
  const AudioBuffer est = testutil::random_audio(2, 1000);
  CHECK_THROWS_AS(sdr(zero, est), std::invalid_argument);
}

TEST_CASE("shape and rate mismatches throw") {
  const AudioBuffer a = testutil::random_audio(2, 1000);
  const AudioBuffer b = testutil::random_audio(2, 999);
  CHECK_THROWS_AS(sdr(a, b), std::invalid_argument);
  CHECK_THROWS_AS(mae(a, b), std::invalid_argument);
  AudioBuffer c = testutil::random_audio(2, 1000, 48000);
  CHECK_THROWS_AS(sdr(a, c), std::invalid_argument);
}

TEST_CASE("mae basics and loop oracle") {
  const AudioBuffer x = testutil::random_audio(2, 2000);
  CHECK(mae(x, x).mean == 0.0);

  AudioBuffer shifted = x;
  for (auto& ch : shifted.channels)
    for (auto& v : ch) v += 0.1;
  const MaeResult r = mae(x, shifted);
  CHECK(r.mean == doctest::Approx(0.1).epsilon(1e-12));

  const AudioBuffer y = testutil::random_audio(2, 2000);
  const MaeResult got = mae(x, y);
  for (int c = 0; c < 2; ++c) {
    double acc = 0.0;
    for (std::size_t i = 0; i < 2000; ++i)
      acc += std::abs(x.channels[c][i] - y.channels[c][i]);
    CHECK(std::abs(got.per_channel[c] - acc / 2000.0) < 1e-15);
  }
}

TEST_CASE("mae satisfies the triangle inequality") {
  const AudioBuffer a = testutil::random_audio(1, 500);
  const AudioBuffer b = testutil::random_audio(1, 500);
  const AudioBuffer c = testutil::random_audio(1, 500);
  CHECK(mae(a, c).mean <= mae(a, b).mean + mae(b, c).mean + 1e-15);
}
