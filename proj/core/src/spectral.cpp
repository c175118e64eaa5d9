#include "sipkit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sipkit/error.hpp"

namespace sipkit {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

ComplexVector fft(std::span<const std::complex<double>> x, FftSign sign) {
  const std::size_t n = x.size();
  if (!is_power_of_two(n)) {
    throw DomainError("fft length must be a power of two, got " + std::to_string(n));
  }
  ComplexVector out(x.begin(), x.end());

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(out[i], out[j]);
  }

  const double s = static_cast<double>(static_cast<int>(sign));
  // Twiddles for the largest stage; smaller stages stride through them.
  std::vector<std::complex<double>> twiddle(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double angle = s * 2.0 * std::numbers::pi * static_cast<double>(k) / n;
    twiddle[k] = {std::cos(angle), std::sin(angle)};
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const auto t = twiddle[k * stride] * out[start + k + half];
        const auto u = out[start + k];
        out[start + k] = u + t;
        out[start + k + half] = u - t;
      }
    }
  }

  if (sign == FftSign::inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& v : out) v *= inv;
  }
  return out;
}

ComplexVector dft(std::span<const std::complex<double>> x, FftSign sign) {
  const std::size_t n = x.size();
  if (n == 0) throw DomainError("dft of an empty vector");
  const double s = static_cast<double>(static_cast<int>(sign));
  ComplexVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double angle =
          s * 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / n;
      acc += x[j] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    out[k] = sign == FftSign::inverse ? acc / static_cast<double>(n) : acc;
  }
  return out;
}

ComplexVector fftshift(std::span<const std::complex<double>> x) {
  ComplexVector out(x.begin(), x.end());
  const std::size_t n = out.size();
  if (n > 1) std::rotate(out.begin(), out.begin() + (n - n / 2), out.end());
  return out;
}

FftDemo run_fft_demo() {
  FftDemo demo;
  constexpr int kLength = 32;
  ComplexVector signal;
  for (int i = 1; i <= kLength; ++i) {
    const double a = i;
    demo.a.push_back(a);
    demo.c1.push_back(std::cos(a / 10.0));
    demo.c2.push_back(std::cos(a / 2.0));
    demo.c3.push_back(std::cos(a / 6.0));
    demo.c.push_back(demo.c1.back() + demo.c2.back() + demo.c3.back());
    signal.emplace_back(demo.c.back(), 0.0);
  }
  demo.spectrum = fft(signal, FftSign::forward);
  demo.shifted = fftshift(demo.spectrum);
  demo.roundtrip = fft(demo.spectrum, FftSign::inverse);
  for (int i = 0; i < kLength; ++i) {
    demo.max_roundtrip_error =
        std::max(demo.max_roundtrip_error, std::abs(demo.roundtrip[i] - signal[i]));
  }
  return demo;
}

}  // namespace sipkit
