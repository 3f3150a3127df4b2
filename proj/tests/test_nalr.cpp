#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "remixkit/nalr.hpp"

using namespace remixkit;

namespace {

Audiogram flat(double level) {
  Audiogram a;
  a.levels_db_hl.fill(level);
  return a;
}

}  // namespace

TEST_CASE("flat 0 dB HL prescribes exactly the shape constants") {
  const auto ig = nalr_gains(flat(0.0));
  const std::array<double, 7> want = {-17.0, -8.0, 1.0, -1.0, -2.0, -2.0, -2.0};
  for (std::size_t i = 0; i < 7; ++i) CHECK(ig[i] == doctest::Approx(want[i]));
  CHECK(ig[2] == doctest::Approx(1.0));  // IG(1000) = +1 dB
}

TEST_CASE("flat 40 dB HL: X = 6, IG(1000) = 19.4") {
  const auto ig = nalr_gains(flat(40.0));
  const std::array<double, 7> want = {1.4, 10.4, 19.4, 17.4, 16.4, 16.4, 16.4};
  for (std::size_t i = 0; i < 7; ++i)
    CHECK(ig[i] == doctest::Approx(want[i]).epsilon(1e-12));
}

TEST_CASE("raising one threshold raises its gain by at least 3.1 dB") {
  for (std::size_t idx = 0; idx < 7; ++idx) {
    Audiogram a = flat(30.0);
    const auto base = nalr_gains(a);
    a.levels_db_hl[idx] += 10.0;
    const auto bumped = nalr_gains(a);
    CHECK(bumped[idx] - base[idx] >= 3.1 - 1e-12);
  }
}

TEST_CASE("all-zero prescription designs a near-impulse") {
  std::array<double, 7> zeros{};
  const FirFilter fir = design_fir(zeros, 44100);
  CHECK(fir.taps() == 221);
  const int center = fir.group_delay();
  CHECK(std::abs(fir.coefficients[center] - 1.0) < 1e-6);
  for (int i = 0; i < fir.taps(); ++i)
    if (i != center) CHECK(std::abs(fir.coefficients[i]) < 1e-6);

  // filtering plus delay compensation is the identity
  const AudioBuffer x = testutil::random_audio(1, 4000);
  const AudioBuffer y = apply_fir(x, fir);
  for (std::size_t i = 0; i < x.length(); ++i)
    CHECK(std::abs(y.channels[0][i] - x.channels[0][i]) < 1e-6);
}

TEST_CASE("flat +6.0206 dB curve doubles the signal") {
  std::array<double, 7> six;
  six.fill(20.0 * std::log10(2.0));
  const FirFilter fir = design_fir(six, 44100);
  for (double f : Audiogram::kFrequenciesHz) {
    const double got = fir_response_db(fir, f, 44100);
    CHECK(std::abs(got - 20.0 * std::log10(2.0)) < 0.5);
  }
  // time-domain check on a mid-band sine
  AudioBuffer x(1, 22050);
  for (std::size_t i = 0; i < x.length(); ++i)
    x.channels[0][i] =
        std::sin(2.0 * std::numbers::pi * 1000.0 * double(i) / 44100.0);
  const AudioBuffer y = apply_fir(x, fir);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 2000; i + 2000 < x.length(); ++i) {
    num += y.channels[0][i] * y.channels[0][i];
    den += x.channels[0][i] * x.channels[0][i];
  }
  const double measured_db = 10.0 * std::log10(num / den);
  CHECK(std::abs(measured_db - 6.0206) < 0.5);
}

TEST_CASE("flat-40 prescription realizes 19.4 dB at 1 kHz") {
  const auto ig = nalr_gains(flat(40.0));
  const FirFilter fir = design_fir(ig, 44100);
  CHECK(std::abs(fir_response_db(fir, 1000.0, 44100) - 19.4) < 0.5);
  for (std::size_t i = 0; i < 7; ++i)
    CHECK(std::abs(fir_response_db(fir, Audiogram::kFrequenciesHz[i], 44100) -
                   ig[i]) < 0.5);
}

TEST_CASE("response within 0.5 dB for random audiograms in [0, 80]") {
  for (int trial = 0; trial < 12; ++trial) {
    Audiogram a;
    for (auto& h : a.levels_db_hl) h = testutil::uniform(0.0, 80.0);
    const auto ig = nalr_gains(a);
    const FirFilter fir = design_fir(ig, 44100);
    for (std::size_t i = 0; i < 7; ++i)
      CHECK(std::abs(fir_response_db(fir, Audiogram::kFrequenciesHz[i], 44100) -
                     ig[i]) <= 0.5);
  }
}

TEST_CASE("designed coefficients are symmetric") {
  Audiogram a;
  for (auto& h : a.levels_db_hl) h = testutil::uniform(0.0, 80.0);
  const FirFilter fir = design_fir(nalr_gains(a), 44100);
  for (int i = 0; i < fir.taps() / 2; ++i)
    CHECK(std::abs(fir.coefficients[i] -
                   fir.coefficients[fir.taps() - 1 - i]) < 1e-12);
}

TEST_CASE("apply_fir basics") {
  FirFilter impulse;
  impulse.coefficients = {1.0};
  const AudioBuffer x = testutil::random_audio(2, 500);
  const AudioBuffer y = apply_fir(x, impulse);
  for (int c = 0; c < 2; ++c)
    for (std::size_t i = 0; i < x.length(); ++i)
      CHECK(y.channels[c][i] == x.channels[c][i]);

  const AudioBuffer silence(1, 300);
  const FirFilter fir = design_fir(nalr_gains(flat(40.0)), 44100);
  const AudioBuffer out = apply_fir(silence, fir);
  for (double v : out.channels[0]) CHECK(v == 0.0);
}

TEST_CASE("cascading twice equals convolving the filter with itself") {
  FirFilter h;
  h.coefficients = testutil::random_signal(31, 0.3);
  // force symmetry so the group delay stays integer-aligned
  for (int i = 0; i < 15; ++i) h.coefficients[30 - i] = h.coefficients[i];

  const AudioBuffer x = testutil::random_audio(1, 800);
  const AudioBuffer twice = apply_fir(apply_fir(x, h), h);

  FirFilter hh;
  hh.coefficients = testutil::naive_convolve(h.coefficients, h.coefficients);
  const AudioBuffer once = apply_fir(x, hh);
  // the intermediate length trim clips tails, so compare away from the edges
  const std::size_t margin = 2 * h.coefficients.size();
  for (std::size_t i = margin; i + margin < x.length(); ++i)
    CHECK(std::abs(twice.channels[0][i] - once.channels[0][i]) < 1e-9);
}

TEST_CASE("apply_fir is linear") {
  const FirFilter fir = design_fir(nalr_gains(flat(25.0)), 44100);
  const AudioBuffer x = testutil::random_audio(1, 600);
  const AudioBuffer y = testutil::random_audio(1, 600);
  const double a = 0.75, b = -1.5;
  AudioBuffer combo(1, 600);
  for (std::size_t i = 0; i < 600; ++i)
    combo.channels[0][i] = a * x.channels[0][i] + b * y.channels[0][i];
  const AudioBuffer lhs = apply_fir(combo, fir);
  const AudioBuffer fx = apply_fir(x, fir);
  const AudioBuffer fy = apply_fir(y, fir);
  for (std::size_t i = 0; i < 600; ++i)
    CHECK(std::abs(lhs.channels[0][i] -
                   (a * fx.channels[0][i] + b * fy.channels[0][i])) < 1e-12);
}

TEST_CASE("no phase distortion beyond the compensated delay") {
  // cross-correlation of output vs input peaks at zero lag
  const FirFilter fir = design_fir(nalr_gains(flat(40.0)), 44100);
  AudioBuffer x(1, 8000);
  for (std::size_t i = 0; i < x.length(); ++i)
    x.channels[0][i] = std::sin(2.0 * std::numbers::pi * 800.0 * double(i) / 44100.0) +
                       0.5 * std::sin(2.0 * std::numbers::pi * 2500.0 * double(i) / 44100.0);
  const AudioBuffer y = apply_fir(x, fir);
  double best = -1e300;
  int best_lag = -99;
  for (int lag = -5; lag <= 5; ++lag) {
    double acc = 0.0;
    for (std::size_t i = 500; i + 500 < x.length(); ++i)
      acc += x.channels[0][i] * y.channels[0][i + lag];
    if (acc > best) {
      best = acc;
      best_lag = lag;
    }
  }
  CHECK(best_lag == 0);
}

TEST_CASE("validation") {
  Audiogram bad;
  bad.levels_db_hl.fill(150.0);
  CHECK_THROWS_AS(nalr_gains(bad), std::invalid_argument);

  std::array<double, 7> ig{};
  CHECK_THROWS_AS(design_fir(ig, 44100, 220), std::invalid_argument);  // even
  CHECK_THROWS_AS(design_fir(ig, 44100, 21), std::invalid_argument);   // short
  CHECK_THROWS_AS(design_fir(ig, 0), std::invalid_argument);
}
