#include "remixkit/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace remixkit {

using cplx = std::complex<double>;

Fft::Fft(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("Fft: size must be positive");
  if (is_pow2(n)) {
    bitrev_.resize(n);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < bits; ++b)
        if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
      bitrev_[i] = r;
    }
    twiddle_.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
      const double ang = -2.0 * std::numbers::pi * double(k) / double(n);
      twiddle_[k] = cplx(std::cos(ang), std::sin(ang));
    }
  } else {
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    inner_ = std::make_unique<Fft>(m);
    chirp_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      // k^2 mod 2n keeps the phase argument small for long transforms
      const std::size_t k2 = (k * k) % (2 * n);
      const double ang = -std::numbers::pi * double(k2) / double(n);
      chirp_[k] = cplx(std::cos(ang), std::sin(ang));
    }
    std::vector<cplx> b(m, cplx(0.0, 0.0));
    b[0] = std::conj(chirp_[0]);
    for (std::size_t k = 1; k < n; ++k) {
      b[k] = std::conj(chirp_[k]);
      b[m - k] = std::conj(chirp_[k]);
    }
    inner_->forward(b.data());
    chirp_fft_ = std::move(b);
  }
}

void Fft::forward_pow2(cplx* data) const {
  const std::size_t n = n_;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = bitrev_[i];
    if (j > i) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t step = n / len;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const cplx w = twiddle_[k * step];
        const cplx odd = data[base + k + half] * w;
        const cplx even = data[base + k];
        data[base + k] = even + odd;
        data[base + k + half] = even - odd;
      }
    }
  }
}

void Fft::forward_bluestein(cplx* data) const {
  const std::size_t n = n_;
  const std::size_t m = inner_->size();
  std::vector<cplx> a(m, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) a[k] = data[k] * chirp_[k];
  inner_->forward(a.data());
  for (std::size_t k = 0; k < m; ++k) a[k] *= chirp_fft_[k];
  inner_->inverse(a.data());
  for (std::size_t k = 0; k < n; ++k) data[k] = a[k] * chirp_[k];
}

void Fft::forward(cplx* data) const {
  if (inner_)
    forward_bluestein(data);
  else
    forward_pow2(data);
}

void Fft::inverse(cplx* data) const {
  const std::size_t n = n_;
  for (std::size_t i = 0; i < n; ++i) data[i] = std::conj(data[i]);
  forward(data);
  const double inv = 1.0 / double(n);
  for (std::size_t i = 0; i < n; ++i) data[i] = std::conj(data[i]) * inv;
}

void Fft::rfft(const double* in, cplx* out) const {
  std::vector<cplx> buf(n_);
  for (std::size_t i = 0; i < n_; ++i) buf[i] = cplx(in[i], 0.0);
  forward(buf.data());
  const std::size_t bins = n_ / 2 + 1;
  for (std::size_t f = 0; f < bins; ++f) out[f] = buf[f];
}

void Fft::irfft(const cplx* in, double* out) const {
  std::vector<cplx> buf(n_);
  const std::size_t bins = n_ / 2 + 1;
  for (std::size_t f = 0; f < bins; ++f) buf[f] = in[f];
  for (std::size_t f = bins; f < n_; ++f) buf[f] = std::conj(in[n_ - f]);
  inverse(buf.data());
  for (std::size_t i = 0; i < n_; ++i) out[i] = buf[i].real();
}

}  // namespace remixkit
