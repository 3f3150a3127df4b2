#pragma once

#include <vector>

#include "remixkit/audio.hpp"

namespace remixkit {

// Energy-ratio SDR cap: returned when the error energy underflows
// 1e-30 * reference energy (numerically identical signals).
inline constexpr double kSdrCapDb = 300.0;

struct SdrResult {
  std::vector<double> per_channel_db;
  double mean_db = 0.0;
};

struct MaeResult {
  std::vector<double> per_channel;
  double mean = 0.0;
};

// 10*log10(sum ref^2 / sum (ref-est)^2) per channel. Throws on shape or
// sample-rate mismatch and on a reference channel with zero energy.
SdrResult sdr(const AudioBuffer& reference, const AudioBuffer& estimate);

// Mean absolute sample error per channel.
MaeResult mae(const AudioBuffer& reference, const AudioBuffer& estimate);

}  // namespace remixkit
