#include "remixkit/demo.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "remixkit/rng.hpp"
#include "remixkit/wav.hpp"

namespace remixkit {

namespace {

constexpr int kRate = 44100;
constexpr double kSeconds = 5.0;
constexpr double kPi = std::numbers::pi;

void fade(std::vector<double>& x, int samples) {
  const int n = int(x.size());
  for (int i = 0; i < samples && i < n; ++i) {
    const double g = double(i) / samples;
    x[i] *= g;
    x[n - 1 - i] *= g;
  }
}

AudioBuffer make_stem(int which, std::uint64_t seed) {
  const auto len = std::size_t(kRate * kSeconds);
  AudioBuffer out(2, len, kRate);
  Rng rng(seed * 977 + which);

  for (int c = 0; c < 2; ++c) {
    auto& x = out.channels[c];
    const double pan = c == 0 ? 1.0 : 0.92;
    const double detune = c == 0 ? 0.0 : 0.13;
    switch (which) {
      case 0: {  // drums: decaying noise bursts every half second
        for (std::size_t i = 0; i < len; ++i) {
          const int beat = int(i) % (kRate / 2);
          const double env = std::exp(-6.0 * double(beat) / (kRate / 2));
          x[i] = 0.22 * pan * env * rng.gaussian();
        }
        // low thump on each onset
        for (std::size_t i = 0; i < len; ++i) {
          const int beat = int(i) % (kRate / 2);
          const double t = double(beat) / kRate;
          x[i] += 0.25 * std::exp(-18.0 * t) *
                  std::sin(2.0 * kPi * (90.0 - 40.0 * t) * t + 0.2 * c);
        }
        break;
      }
      case 1: {  // bass: slow two-note line with a soft second harmonic
        for (std::size_t i = 0; i < len; ++i) {
          const double t = double(i) / kRate;
          const double f0 = (std::fmod(t, 2.0) < 1.0) ? 55.0 : 73.42;
          x[i] = pan * (0.35 * std::sin(2.0 * kPi * (f0 + detune) * t) +
                        0.12 * std::sin(4.0 * kPi * (f0 + detune) * t + 0.5));
        }
        break;
      }
      case 2: {  // other: sustained chord plus gentle noise bed
        for (std::size_t i = 0; i < len; ++i) {
          const double t = double(i) / kRate;
          const double am = 0.8 + 0.2 * std::sin(2.0 * kPi * 0.33 * t + c);
          x[i] = pan * am *
                 (0.11 * std::sin(2.0 * kPi * (329.63 + detune) * t + 0.1) +
                  0.11 * std::sin(2.0 * kPi * (415.30 + detune) * t + 1.2) +
                  0.11 * std::sin(2.0 * kPi * (493.88 + detune) * t + 2.3));
          x[i] += 0.03 * rng.gaussian();
        }
        break;
      }
      default: {  // vocal: vibrato carrier with phrase envelope and harmonics
        double phase = 0.0;
        for (std::size_t i = 0; i < len; ++i) {
          const double t = double(i) / kRate;
          const double f0 = 220.0 + detune + 7.0 * std::sin(2.0 * kPi * 5.0 * t);
          phase += 2.0 * kPi * f0 / kRate;
          const double phrase = std::pow(std::sin(2.0 * kPi * 0.35 * t), 2.0);
          x[i] = pan * phrase *
                 (0.26 * std::sin(phase) + 0.10 * std::sin(2.0 * phase + 0.3) +
                  0.05 * std::sin(3.0 * phase + 0.9));
        }
        break;
      }
    }
    fade(x, int(0.05 * kRate));
  }
  return out;
}

}  // namespace

SceneFile generate_demo(const std::string& out_dir, std::uint64_t seed) {
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);

  SceneFile scene;
  for (std::size_t i = 0; i < kStemNames.size(); ++i) {
    const AudioBuffer stem = make_stem(int(i), seed);
    const std::string name = std::string(kStemNames[i]) + ".wav";
    write_wav((dir / name).string(), stem, WavEncoding::float32);
    scene.stem_paths[i] = name;
  }

  scene.gains.db = {-3.0, 0.0, -2.0, 2.0};
  scene.listener.id = "demo-listener";
  scene.listener.left.levels_db_hl = {20.0, 25.0, 30.0, 40.0, 50.0, 55.0, 60.0};
  scene.listener.right.levels_db_hl = {15.0, 20.0, 30.0, 45.0, 55.0, 60.0, 65.0};
  scene.degradation.magnitude_jitter_db = 0.0;
  scene.degradation.phase_jitter_rad = 0.4;
  scene.degradation.fir_length = 0;
  scene.degradation.advance_frames = 1;
  scene.degradation.seed = seed;
  scene.mode = EnhanceMode::df;
  scene.estimator = EstimatorConfig{};
  scene.output_dir = ".";
  scene.seed = seed;

  std::ofstream os(dir / "scene.json");
  os << serialize_scene(scene);
  if (!os) throw std::runtime_error("gen-demo: cannot write scene.json");
  return scene;
}

}  // namespace remixkit
