#pragma once

#include <array>
#include <string>
#include <vector>

#include "remixkit/audio.hpp"

namespace remixkit {

// Hearing thresholds at the seven standard audiometric frequencies.
struct Audiogram {
  static constexpr std::array<double, 7> kFrequenciesHz = {
      250.0, 500.0, 1000.0, 2000.0, 3000.0, 4000.0, 6000.0};
  std::array<double, 7> levels_db_hl{};

  void validate() const;
};

struct ListenerProfile {
  std::string id;
  Audiogram left;
  Audiogram right;
};

// Symmetric (linear-phase) FIR with an odd tap count.
struct FirFilter {
  std::vector<double> coefficients;

  int taps() const { return int(coefficients.size()); }
  int group_delay() const { return (taps() - 1) / 2; }
};

// NAL-R insertion gains in dB at the audiogram frequencies:
//   X = 0.05 * (H500 + H1000 + H2000)
//   IG(f) = X + 0.31 * H(f) + k(f)
// Negative gains are kept (no clamping).
std::array<double, 7> nalr_gains(const Audiogram& audiogram);

// Linear-phase FIR realizing the prescribed per-frequency gains. The target
// magnitude is interpolated linearly in dB over log frequency between 250
// and 6000 Hz and held constant outside; coefficients come from a weighted
// least-squares fit with the prescription frequencies pinned. Realized
// response at each prescription frequency is within +-0.5 dB.
FirFilter design_fir(const std::array<double, 7>& gains_db, int sample_rate,
                     int taps = 221);

// Full convolution followed by group-delay compensation; output length
// equals input length.
AudioBuffer apply_fir(const AudioBuffer& audio, const FirFilter& filt);

// Magnitude response in dB at one frequency (direct DTFT of the taps).
double fir_response_db(const FirFilter& filt, double freq_hz, int sample_rate);

}  // namespace remixkit
