#include "remixkit/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "remixkit/kernels.hpp"
#include "remixkit/log.hpp"
#include "remixkit/rng.hpp"
#include "remixkit/stft.hpp"

namespace remixkit {

namespace {

constexpr int kRequiredRate = 44100;

AudioBuffer convolve_same(const AudioBuffer& audio,
                          const std::vector<double>& h) {
  // causal convolution truncated to the input length
  const std::size_t len = audio.length();
  const std::size_t nh = h.size();
  std::vector<double> h_rev(h.rbegin(), h.rend());
  AudioBuffer out(audio.num_channels(), len, audio.sample_rate);
  std::vector<double> padded(len + nh - 1, 0.0);
  for (int c = 0; c < audio.num_channels(); ++c) {
    std::fill(padded.begin(), padded.end(), 0.0);
    std::copy(audio.channels[c].begin(), audio.channels[c].end(),
              padded.begin() + nh - 1);
    for (std::size_t i = 0; i < len; ++i)
      out.channels[c][i] = kernels::dot(padded.data() + i, h_rev.data(), nh);
  }
  return out;
}

}  // namespace

void StemSet::validate() const {
  const std::size_t len = stems[0].length();
  const int rate = stems[0].sample_rate;
  for (std::size_t i = 0; i < stems.size(); ++i) {
    stems[i].validate(std::string("stem ") + kStemNames[i]);
    if (stems[i].num_channels() != 2)
      throw std::invalid_argument(std::string("stem ") + kStemNames[i] +
                                  " must be stereo");
    if (stems[i].length() != len)
      throw std::invalid_argument(std::string("stem ") + kStemNames[i] +
                                  " length differs from the other stems");
    if (stems[i].sample_rate != rate)
      throw std::invalid_argument(std::string("stem ") + kStemNames[i] +
                                  " sample rate differs from the other stems");
  }
  if (len == 0) throw std::invalid_argument("stems are empty");
}

void RemixGains::validate() const {
  for (std::size_t i = 0; i < db.size(); ++i)
    if (!std::isfinite(db[i]) || std::abs(db[i]) > 60.0)
      throw std::invalid_argument(std::string("gain for ") + kStemNames[i] +
                                  " must be finite and within +-60 dB");
}

void DegradationSpec::validate() const {
  if (magnitude_jitter_db < 0.0 || phase_jitter_rad < 0.0)
    throw std::invalid_argument("degradation: jitter sigmas must be >= 0");
  if (fir_length < 0)
    throw std::invalid_argument("degradation: fir_length must be >= 0");
  if (advance_frames < 0)
    throw std::invalid_argument("degradation: advance_frames must be >= 0");
  if (noise_snr_db && !std::isfinite(*noise_snr_db))
    throw std::invalid_argument("degradation: noise SNR must be finite");
}

StemSet apply_gains(const StemSet& stems, const RemixGains& gains) {
  stems.validate();
  gains.validate();
  StemSet out = stems;
  for (std::size_t i = 0; i < out.stems.size(); ++i) {
    const double scale = std::pow(10.0, gains.db[i] / 20.0);
    for (auto& ch : out.stems[i].channels)
      for (double& v : ch) v *= scale;
  }
  return out;
}

AudioBuffer mix(const StemSet& stems) {
  stems.validate();
  AudioBuffer out(2, stems[0].length(), stems[0].sample_rate);
  for (const auto& stem : stems.stems)
    for (int c = 0; c < 2; ++c)
      for (std::size_t i = 0; i < out.length(); ++i)
        out.channels[c][i] += stem.channels[c][i];
  return out;
}

AudioBuffer degrade(const AudioBuffer& audio, const DegradationSpec& spec) {
  audio.validate("degrade");
  spec.validate();
  Rng rng(spec.seed);
  AudioBuffer out = audio;
  const StftParams params;

  if (spec.advance_frames > 0) {
    const std::size_t shift = std::size_t(spec.advance_frames) * params.hop;
    for (auto& ch : out.channels) {
      if (shift >= ch.size()) {
        std::fill(ch.begin(), ch.end(), 0.0);
      } else {
        std::copy(ch.begin() + shift, ch.end(), ch.begin());
        std::fill(ch.end() - shift, ch.end(), 0.0);
      }
    }
  }

  if (spec.fir_length > 1) {
    // unit tap plus a scaled random tail, normalized to unit energy
    std::vector<double> h(spec.fir_length);
    double tail_energy = 0.0;
    for (int i = 1; i < spec.fir_length; ++i) {
      h[i] = rng.gaussian();
      tail_energy += h[i] * h[i];
    }
    const double tail_scale =
        tail_energy > 0.0 ? 0.5 / std::sqrt(tail_energy) : 0.0;
    h[0] = 1.0;
    double energy = 1.0;
    for (int i = 1; i < spec.fir_length; ++i) {
      h[i] *= tail_scale;
      energy += h[i] * h[i];
    }
    const double norm = 1.0 / std::sqrt(energy);
    for (double& v : h) v *= norm;
    out = convolve_same(out, h);
  }

  if (spec.magnitude_jitter_db > 0.0 || spec.phase_jitter_rad > 0.0) {
    Spectrogram spec_d = stft(out, params);
    std::vector<std::complex<double>> jitter(spec_d.bins);
    for (int f = 0; f < spec_d.bins; ++f) {
      const double mag =
          std::pow(10.0, spec.magnitude_jitter_db * rng.gaussian() / 20.0);
      const double phase = spec.phase_jitter_rad * rng.gaussian();
      jitter[f] = std::polar(mag, phase);
    }
    for (int c = 0; c < spec_d.channels; ++c)
      for (int t = 0; t < spec_d.frames; ++t)
        kernels::cmultiply(spec_d.row(c, t).data(), spec_d.row(c, t).data(),
                           jitter.data(), spec_d.bins);
    out = istft(spec_d);
  }

  if (spec.noise_snr_db) {
    double signal_energy = 0.0;
    for (const auto& ch : out.channels)
      signal_energy += kernels::sum_squares(ch.data(), ch.size());
    std::vector<std::vector<double>> noise(out.num_channels());
    double noise_energy = 0.0;
    for (auto& ch : noise) {
      ch.resize(out.length());
      for (double& v : ch) {
        v = rng.gaussian();
        noise_energy += v * v;
      }
    }
    if (noise_energy > 0.0 && signal_energy > 0.0) {
      const double scale = std::sqrt(
          signal_energy / (noise_energy * std::pow(10.0, *spec.noise_snr_db / 10.0)));
      for (int c = 0; c < out.num_channels(); ++c)
        for (std::size_t i = 0; i < out.length(); ++i)
          out.channels[c][i] += scale * noise[c][i];
    }
  }

  return out;
}

AudioBuffer nalr_stereo(const AudioBuffer& audio,
                        const ListenerProfile& listener) {
  audio.validate("nalr_stereo");
  if (audio.num_channels() != 2)
    throw std::invalid_argument("nalr_stereo: expected a stereo buffer");
  const std::array<const Audiogram*, 2> ears = {&listener.left,
                                                &listener.right};
  AudioBuffer out = audio;
  for (int c = 0; c < 2; ++c) {
    const FirFilter fir = design_fir(nalr_gains(*ears[c]), audio.sample_rate);
    AudioBuffer mono(1, audio.length(), audio.sample_rate);
    mono.channels[0] = audio.channels[c];
    out.channels[c] = apply_fir(mono, fir).channels[0];
  }
  return out;
}

SignalStack build_signal_stack(const RemixScene& scene) {
  scene.stems.validate();
  scene.gains.validate();
  if (scene.stems[0].sample_rate != kRequiredRate)
    throw std::invalid_argument("pipeline: stems must be sampled at 44100 Hz");
  SignalStack stack;
  stack.mixture_at_mic = mix(scene.stems);
  stack.pre_nalr_remix = mix(apply_gains(scene.stems, scene.gains));
  stack.nalred_remix = nalr_stereo(stack.pre_nalr_remix, scene.listener);
  return stack;
}

PipelineResult run_pipeline(const RemixScene& scene) {
  scene.estimator.validate();
  scene.degradation.validate();

  PipelineResult result;
  result.stack = build_signal_stack(scene);

  result.degraded = scene.degradation.is_identity()
                        ? result.stack.nalred_remix
                        : degrade(result.stack.nalred_remix, scene.degradation);

  const Spectrogram reference = stft(result.stack.nalred_remix);
  const Spectrogram degraded_spec = stft(result.degraded);
  // crm mode is the order-1 per-frequency fit: the time-invariant mask
  // analogue of the multi-frame filter, so the two modes differ only in
  // filter order and stay directly comparable.
  EstimatorConfig cfg = scene.estimator;
  if (scene.mode == EnhanceMode::crm) cfg.order = FilterOrder::causal(1);
  auto [enhanced_spec, fit] =
      enhance_spectrogram(degraded_spec, reference, EnhanceMode::df, cfg);
  result.enhanced = istft(enhanced_spec);
  result.fit = std::move(fit);

  result.sdr_before = sdr(result.stack.nalred_remix, result.degraded);
  result.sdr_after = sdr(result.stack.nalred_remix, result.enhanced);
  result.mae_before = mae(result.stack.nalred_remix, result.degraded);
  result.mae_after = mae(result.stack.nalred_remix, result.enhanced);
  log::debug("pipeline: sdr before=%.2f dB after=%.2f dB",
             result.sdr_before.mean_db, result.sdr_after.mean_db);
  return result;
}

}  // namespace remixkit
