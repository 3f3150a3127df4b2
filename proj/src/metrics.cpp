#include "remixkit/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "remixkit/kernels.hpp"

namespace remixkit {

namespace {

void check_pair(const AudioBuffer& reference, const AudioBuffer& estimate,
                bool check_rate, const char* what) {
  reference.validate(what);
  estimate.validate(what);
  if (reference.num_channels() != estimate.num_channels() ||
      reference.length() != estimate.length())
    throw std::invalid_argument(std::string(what) +
                                ": reference/estimate shapes differ");
  if (check_rate && reference.sample_rate != estimate.sample_rate)
    throw std::invalid_argument(std::string(what) +
                                ": sample rates differ");
}

}  // namespace

SdrResult sdr(const AudioBuffer& reference, const AudioBuffer& estimate) {
  check_pair(reference, estimate, true, "sdr");
  SdrResult out;
  double sum = 0.0;
  for (int c = 0; c < reference.num_channels(); ++c) {
    const auto& ref = reference.channels[c];
    const auto& est = estimate.channels[c];
    const double ref_energy = kernels::sum_squares(ref.data(), ref.size());
    if (ref_energy <= 0.0)
      throw std::invalid_argument(
          "sdr: reference channel " + std::to_string(c) +
          " has zero energy; metric undefined");
    const double err_energy =
        kernels::sum_sq_diff(ref.data(), est.data(), ref.size());
    const double value = err_energy < 1e-30 * ref_energy
                             ? kSdrCapDb
                             : 10.0 * std::log10(ref_energy / err_energy);
    out.per_channel_db.push_back(value);
    sum += value;
  }
  out.mean_db = sum / reference.num_channels();
  return out;
}

MaeResult mae(const AudioBuffer& reference, const AudioBuffer& estimate) {
  check_pair(reference, estimate, false, "mae");
  MaeResult out;
  double sum = 0.0;
  for (int c = 0; c < reference.num_channels(); ++c) {
    const auto& ref = reference.channels[c];
    const auto& est = estimate.channels[c];
    const double total =
        kernels::sum_abs_diff(ref.data(), est.data(), ref.size());
    const double value = ref.empty() ? 0.0 : total / double(ref.size());
    out.per_channel.push_back(value);
    sum += value;
  }
  out.mean = sum / reference.num_channels();
  return out;
}

}  // namespace remixkit
