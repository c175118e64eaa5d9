#pragma once

#include <complex>
#include <span>
#include <vector>

namespace sipkit {

using ComplexVector = std::vector<std::complex<double>>;

enum class FftSign { forward = -1, inverse = +1 };

/// X[k] = sum_j x[j] * exp(sign * 2 pi i j k / n), iterative radix-2.
/// The +1 direction also divides by n, so fft(fft(x, forward), inverse) == x.
/// Throws DomainError unless n is a power of two (n >= 1).
ComplexVector fft(std::span<const std::complex<double>> x, FftSign sign);

/// Direct O(n^2) evaluation of the same transform for any n >= 1.
ComplexVector dft(std::span<const std::complex<double>> x, FftSign sign);

/// Rotate right by floor(n/2) so bin 0 lands in the middle.
ComplexVector fftshift(std::span<const std::complex<double>> x);

bool is_power_of_two(std::size_t n) noexcept;

/// The three-cosine tutorial signal and its transforms.
struct FftDemo {
  std::vector<double> a;   // 1..32
  std::vector<double> c1;  // cos(a / 10)
  std::vector<double> c2;  // cos(a / 2)
  std::vector<double> c3;  // cos(a / 6)
  std::vector<double> c;   // c1 + c2 + c3
  ComplexVector spectrum;  // fft(c, forward)
  ComplexVector shifted;   // fftshift(spectrum)
  ComplexVector roundtrip; // fft(spectrum, inverse)
  double max_roundtrip_error = 0.0;
};

FftDemo run_fft_demo();

}  // namespace sipkit
