#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "remixkit/audio.hpp"
#include "remixkit/estimator.hpp"
#include "remixkit/metrics.hpp"
#include "remixkit/nalr.hpp"

namespace remixkit {

inline constexpr std::array<const char*, 4> kStemNames = {"drums", "bass",
                                                          "other", "vocal"};

// The four stems of a scene: stereo, equal length, equal sample rate.
struct StemSet {
  std::array<AudioBuffer, 4> stems;  // kStemNames order

  AudioBuffer& drums() { return stems[0]; }
  AudioBuffer& bass() { return stems[1]; }
  AudioBuffer& other() { return stems[2]; }
  AudioBuffer& vocal() { return stems[3]; }
  const AudioBuffer& operator[](std::size_t i) const { return stems[i]; }
  AudioBuffer& operator[](std::size_t i) { return stems[i]; }

  void validate() const;
};

struct RemixGains {
  std::array<double, 4> db{};  // kStemNames order

  void validate() const;
};

// Synthetic stand-in for upstream separation artifacts. Stages run in a
// fixed order: frame advance, short FIR, STFT-domain per-frequency complex
// gain jitter, additive noise. All randomness derives from `seed`.
struct DegradationSpec {
  double magnitude_jitter_db = 0.0;
  double phase_jitter_rad = 0.0;
  int fir_length = 0;      // samples; 0 or 1 disables the FIR stage
  int advance_frames = 0;  // shift earlier by advance_frames * hop samples
  std::optional<double> noise_snr_db;  // absent = no noise
  std::uint64_t seed = 0;

  bool is_identity() const {
    return magnitude_jitter_db == 0.0 && phase_jitter_rad == 0.0 &&
           fir_length <= 1 && advance_frames == 0 && !noise_snr_db;
  }
  void validate() const;
};

// The three time-domain signals mirroring the pipeline taps: the raw stem
// mixture, the gain-adjusted remix, and the remix after per-ear NAL-R.
struct SignalStack {
  AudioBuffer mixture_at_mic;
  AudioBuffer pre_nalr_remix;
  AudioBuffer nalred_remix;
};

struct RemixScene {
  StemSet stems;
  RemixGains gains;
  ListenerProfile listener;
  DegradationSpec degradation;
  EnhanceMode mode = EnhanceMode::df;
  EstimatorConfig estimator;
};

struct PipelineResult {
  SignalStack stack;
  AudioBuffer degraded;
  AudioBuffer enhanced;
  SdrResult sdr_before;  // clean NALRed remix vs degraded
  SdrResult sdr_after;   // clean NALRed remix vs enhanced
  MaeResult mae_before;
  MaeResult mae_after;
  FitReport fit;
};

// Per-stem scaling by 10^(dB/20).
StemSet apply_gains(const StemSet& stems, const RemixGains& gains);

// Samplewise sum of the four stems; no normalization.
AudioBuffer mix(const StemSet& stems);

// Per-ear NAL-R amplification: the left audiogram shapes channel 0, the
// right channel 1.
AudioBuffer nalr_stereo(const AudioBuffer& audio,
                        const ListenerProfile& listener);

// Mixture, gained remix, and NALRed remix for a scene.
SignalStack build_signal_stack(const RemixScene& scene);

// Apply the degradation stages; deterministic under spec.seed.
AudioBuffer degrade(const AudioBuffer& audio, const DegradationSpec& spec);

// Full chain: gains -> mix -> NAL-R per ear -> degrade -> oracle enhancement
// fitted against the clean NALRed remix -> metrics.
PipelineResult run_pipeline(const RemixScene& scene);

}  // namespace remixkit
