#include "remixkit/nalr.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "remixkit/hermitian.hpp"
#include "remixkit/kernels.hpp"

namespace remixkit {

namespace {

constexpr std::array<double, 7> kShapeDb = {-17.0, -8.0, 1.0, -1.0,
                                            -2.0,  -2.0, -2.0};

// Desired gain in dB at an arbitrary frequency: linear in dB over log
// frequency between the prescription anchors, flat outside them.
double desired_db(double freq_hz, const std::array<double, 7>& gains_db) {
  const auto& fs = Audiogram::kFrequenciesHz;
  if (freq_hz <= fs.front()) return gains_db.front();
  if (freq_hz >= fs.back()) return gains_db.back();
  std::size_t hi = 1;
  while (freq_hz > fs[hi]) ++hi;
  const double a = std::log(fs[hi - 1]);
  const double bfr = std::log(fs[hi]);
  const double u = (std::log(freq_hz) - a) / (bfr - a);
  return gains_db[hi - 1] + u * (gains_db[hi] - gains_db[hi - 1]);
}

}  // namespace

void Audiogram::validate() const {
  for (double h : levels_db_hl)
    if (!(h >= -10.0 && h <= 120.0))
      throw std::invalid_argument(
          "audiogram: levels must be within [-10, 120] dB HL");
}

std::array<double, 7> nalr_gains(const Audiogram& audiogram) {
  audiogram.validate();
  const auto& h = audiogram.levels_db_hl;
  const double x = 0.05 * (h[1] + h[2] + h[3]);
  std::array<double, 7> ig;
  for (std::size_t i = 0; i < ig.size(); ++i)
    ig[i] = x + 0.31 * h[i] + kShapeDb[i];
  return ig;
}

FirFilter design_fir(const std::array<double, 7>& gains_db, int sample_rate,
                     int taps) {
  if (sample_rate <= 0)
    throw std::invalid_argument("design_fir: sample_rate must be positive");
  if (taps % 2 == 0) throw std::invalid_argument("design_fir: taps must be odd");
  if (taps < 31) throw std::invalid_argument("design_fir: taps must be >= 31");

  // Type-I symmetric FIR: amplitude A(w) = g0 + 2 sum_m g_m cos(m w).
  // Weighted least squares on a log-dense grid; the prescription anchors get
  // a large weight so the realized response is pinned there.
  const int half = (taps - 1) / 2;
  const double nyquist = sample_rate / 2.0;
  constexpr double kAnchorWeight = 1e4;

  std::vector<double> grid_hz, weight;
  for (int i = 0; i < 8; ++i) {
    grid_hz.push_back(20.0 * i / 7.0);
    weight.push_back(1.0);
  }
  const int dense = 1200;
  for (int i = 0; i < dense; ++i) {
    grid_hz.push_back(20.0 * std::pow(nyquist / 20.0, double(i) / (dense - 1)));
    weight.push_back(1.0);
  }
  for (double f : Audiogram::kFrequenciesHz) {
    grid_hz.push_back(f);
    weight.push_back(kAnchorWeight);
  }

  const int m = half + 1;
  HermitianMatrix G(m);
  std::vector<std::complex<double>> rhs(m, 0.0);
  std::vector<double> basis(m);
  for (std::size_t p = 0; p < grid_hz.size(); ++p) {
    const double w = 2.0 * std::numbers::pi * grid_hz[p] / sample_rate;
    basis[0] = 1.0;
    for (int q = 1; q < m; ++q) basis[q] = 2.0 * std::cos(q * w);
    const double amp = std::pow(10.0, desired_db(grid_hz[p], gains_db) / 20.0);
    const double wt = weight[p];
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j)
        G.at(i, j) += wt * basis[i] * basis[j];
      rhs[i] += wt * basis[i] * amp;
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) G.at(i, j) = G.at(j, i);

  auto sol = cholesky_solve(G, rhs);
  if (!sol) throw std::runtime_error("design_fir: normal equations singular");

  FirFilter fir;
  fir.coefficients.assign(taps, 0.0);
  fir.coefficients[half] = sol->solution[0].real();
  for (int q = 1; q <= half; ++q) {
    const double g = sol->solution[q].real();
    fir.coefficients[half + q] = g;
    fir.coefficients[half - q] = g;
  }
  return fir;
}

AudioBuffer apply_fir(const AudioBuffer& audio, const FirFilter& filt) {
  audio.validate("apply_fir");
  const int taps = filt.taps();
  if (taps == 0) throw std::invalid_argument("apply_fir: empty filter");
  const int delay = filt.group_delay();
  const std::size_t len = audio.length();

  // y[n] = sum_m h[m] x[n - m], evaluated as dot(h_rev, x window) over a
  // zero-padded input; output picks the slice [delay, delay + len).
  std::vector<double> h_rev(filt.coefficients.rbegin(),
                            filt.coefficients.rend());
  AudioBuffer out(audio.num_channels(), len, audio.sample_rate);
  std::vector<double> padded(len + 2 * std::size_t(taps) - 2, 0.0);
  for (int c = 0; c < audio.num_channels(); ++c) {
    std::fill(padded.begin(), padded.end(), 0.0);
    std::copy(audio.channels[c].begin(), audio.channels[c].end(),
              padded.begin() + taps - 1);
    for (std::size_t nidx = 0; nidx < len; ++nidx)
      out.channels[c][nidx] =
          kernels::dot(padded.data() + nidx + delay, h_rev.data(), taps);
  }
  return out;
}

double fir_response_db(const FirFilter& filt, double freq_hz, int sample_rate) {
  const double w = 2.0 * std::numbers::pi * freq_hz / sample_rate;
  std::complex<double> acc(0.0, 0.0);
  for (int n = 0; n < filt.taps(); ++n)
    acc += filt.coefficients[n] *
           std::complex<double>(std::cos(w * n), -std::sin(w * n));
  return 20.0 * std::log10(std::abs(acc));
}

}  // namespace remixkit
