#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace remixkit {

// Fixed-size complex FFT plan. Power-of-two sizes run an iterative radix-2
// transform; other sizes go through Bluestein's chirp-z algorithm on an
// internal power-of-two plan. Forward is unnormalized, inverse scales by 1/n.
class Fft {
 public:
  explicit Fft(std::size_t n);

  std::size_t size() const { return n_; }

  void forward(std::complex<double>* data) const;
  void inverse(std::complex<double>* data) const;

  // Real convenience transforms. rfft writes n/2+1 onesided bins; irfft
  // rebuilds the full Hermitian spectrum and returns the real signal.
  void rfft(const double* in, std::complex<double>* out) const;
  void irfft(const std::complex<double>* in, double* out) const;

  static bool is_pow2(std::size_t n) { return n && (n & (n - 1)) == 0; }

 private:
  void forward_pow2(std::complex<double>* data) const;
  void forward_bluestein(std::complex<double>* data) const;

  std::size_t n_;
  // radix-2 machinery
  std::vector<std::size_t> bitrev_;
  std::vector<std::complex<double>> twiddle_;  // e^{-2*pi*i*k/n}, k < n/2
  // bluestein machinery
  std::unique_ptr<Fft> inner_;
  std::vector<std::complex<double>> chirp_;      // e^{-i*pi*k^2/n}
  std::vector<std::complex<double>> chirp_fft_;  // FFT of the chirp kernel
};

}  // namespace remixkit
