#pragma once

#include <span>
#include <vector>

#include "sipkit/image.hpp"

namespace sipkit {

/// Sampled Gaussian truncated at 3 sigma: 2 * ceil(3 sigma) + 1 symmetric
/// taps, renormalized to sum to one.
class GaussianKernel {
 public:
  explicit GaussianKernel(double sigma);

  double sigma() const noexcept { return sigma_; }
  int radius() const noexcept { return static_cast<int>(taps_.size() / 2); }
  std::span<const double> taps() const noexcept { return taps_; }

 private:
  double sigma_;
  std::vector<double> taps_;
};

/// Separable Gaussian smoothing with replicate-edge padding.
///
/// Both pass orders (rows then columns, columns then rows) are evaluated and
/// averaged, which makes the result commute exactly with transposition. Each
/// tap is applied to the difference from the center sample, so constant
/// regions come out bit-exact.
RealImage gaussian_blur(const RealImage& img, double sigma);

/// Median of the (2r+1)^2 window around each pixel, replicate padding.
/// For an even count the lower of the two middle values is taken.
RealImage median_filter(const RealImage& img, int radius);

/// sqrt(gx^2 + gy^2) with the 3x3 Sobel pair, replicate padding.
RealImage sobel_magnitude(const RealImage& img);

/// 1 where magnitude / max(magnitude) >= t. All zero when the image has no
/// gradient. Throws DomainError unless 0 <= t <= 1.
BinaryImage sobel_edges(const RealImage& img, double t);

}  // namespace sipkit
