#include "remixkit/filtering.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "remixkit/kernels.hpp"

namespace remixkit {

void FilterOrder::validate() const {
  if (lookback < 0 || lookahead < 0)
    throw std::invalid_argument("filter order: lookback/lookahead must be >= 0");
}

UnfoldedSpectrogram unfold_time(const Spectrogram& spec,
                                const FilterOrder& order) {
  order.validate();
  const int n = order.order();
  const int lookback = order.lookback;

  UnfoldedSpectrogram out;
  out.order = order;
  out.params = spec.params;
  out.channels = spec.channels;
  out.frames = spec.frames;
  out.bins = spec.bins;
  out.source_length = spec.source_length;
  out.sample_rate = spec.sample_rate;
  out.data.assign(std::size_t(spec.channels) * n * spec.frames * spec.bins,
                  std::complex<double>(0.0, 0.0));

  for (int c = 0; c < spec.channels; ++c) {
    for (int k = 0; k < n; ++k) {
      const int shift = k - lookback;  // source frame = t + shift
      for (int t = 0; t < spec.frames; ++t) {
        const int src = t + shift;
        if (src < 0 || src >= spec.frames) continue;
        auto dst = out.plane_row(c, k, t);
        auto row = spec.row(c, src);
        std::copy(row.begin(), row.end(), dst.begin());
      }
    }
  }
  return out;
}

Spectrogram apply_crm(const Spectrogram& spec, const ComplexMask& mask) {
  if (mask.channels != spec.channels || mask.frames != spec.frames ||
      mask.bins != spec.bins)
    throw std::invalid_argument("apply_crm: mask shape does not match spectrogram");

  Spectrogram out = spec;
  kernels::cmultiply(out.data.data(), spec.data.data(), mask.data.data(),
                     spec.data.size());
  return out;
}

Spectrogram apply_deep_filter(const UnfoldedSpectrogram& unfolded,
                              const DeepFilterTensor& filt) {
  if (!(filt.order == unfolded.order))
    throw std::invalid_argument("apply_deep_filter: filter order mismatch");
  if (filt.channels != unfolded.channels || filt.frames != unfolded.frames ||
      filt.bins != unfolded.bins)
    throw std::invalid_argument("apply_deep_filter: shape mismatch");

  Spectrogram out;
  out.params = unfolded.params;
  out.channels = unfolded.channels;
  out.frames = unfolded.frames;
  out.bins = unfolded.bins;
  out.source_length = unfolded.source_length;
  out.sample_rate = unfolded.sample_rate;
  out.data.assign(std::size_t(out.channels) * out.frames * out.bins,
                  std::complex<double>(0.0, 0.0));

  const int n = unfolded.order.order();
  for (int c = 0; c < out.channels; ++c)
    for (int t = 0; t < out.frames; ++t) {
      auto* acc = out.row(c, t).data();
      for (int k = 0; k < n; ++k)
        kernels::cmultiply_add(acc, unfolded.plane_row(c, k, t).data(),
                               filt.row(c, k, t).data(), out.bins);
    }
  return out;
}

}  // namespace remixkit
