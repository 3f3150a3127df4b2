#pragma once

#include <cstdint>
#include <random>

namespace remixkit {

// Seeded Gaussian/uniform source with a fixed algorithm (mt19937_64 bits,
// explicit Box-Muller) so streams are identical across platforms and
// standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform in [0, 1)
  double uniform() {
    return double(engine_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace remixkit
