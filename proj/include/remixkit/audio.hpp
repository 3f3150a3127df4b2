#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace remixkit {

// Multichannel time-domain audio. All channels share one length and sample
// rate; samples are doubles with nominal full scale 1.0.
struct AudioBuffer {
  int sample_rate = 44100;
  std::vector<std::vector<double>> channels;

  AudioBuffer() = default;
  AudioBuffer(int num_channels, std::size_t length, int rate = 44100)
      : sample_rate(rate),
        channels(num_channels, std::vector<double>(length, 0.0)) {}

  int num_channels() const { return static_cast<int>(channels.size()); }
  std::size_t length() const {
    return channels.empty() ? 0 : channels.front().size();
  }
  bool empty() const { return channels.empty() || length() == 0; }

  void validate(const std::string& what = "audio") const {
    if (sample_rate <= 0)
      throw std::invalid_argument(what + ": sample_rate must be positive");
    for (const auto& ch : channels)
      if (ch.size() != length())
        throw std::invalid_argument(what + ": channels differ in length");
  }
};

}  // namespace remixkit
