#pragma once

#include <utility>

#include "sipkit/image.hpp"

namespace sipkit {

enum class Interpolation { nearest, bilinear };

/// Inverse map from output pixel coordinates to input coordinates:
///   x_in = a11 * x + a12 * y + tx
///   y_in = a21 * x + a22 * y + ty
/// Pixel centers sit at integer coordinates.
struct AffineMap {
  double a11 = 1.0, a12 = 0.0, tx = 0.0;
  double a21 = 0.0, a22 = 1.0, ty = 0.0;

  double determinant() const noexcept { return a11 * a22 - a12 * a21; }
  std::pair<double, double> apply(double x, double y) const noexcept {
    return {a11 * x + a12 * y + tx, a21 * x + a22 * y + ty};
  }
};

struct Size {
  int width;
  int height;
  friend bool operator==(const Size&, const Size&) = default;
};

/// cos/sin of an angle in degrees, exact at multiples of 90.
std::pair<double, double> cos_sin_degrees(double degrees) noexcept;

/// Axis-aligned bounding box of a w x h rectangle rotated by `degrees`:
/// ceil(w|cos| + h|sin|) x ceil(w|sin| + h|cos|).
Size rotated_canvas(int width, int height, double degrees) noexcept;

/// The inverse map used by rotate(): clockwise on screen (y axis pointing
/// down) about the input center ((w-1)/2, (h-1)/2), landing on the center of
/// `canvas`.
AffineMap rotation_map(int width, int height, double degrees, Size canvas) noexcept;

/// Samples the input at map(x, y) for every output pixel. Points outside the
/// source (beyond half a pixel past the border pixel centers) are 0.
/// Throws DomainError if |det| <= 1e-12.
RealImage affine_warp(const RealImage& img, const AffineMap& map, Size out,
                      Interpolation interp = Interpolation::bilinear);

RealImage rotate(const RealImage& img, double degrees,
                 Interpolation interp = Interpolation::bilinear);

/// Output size round(factor * dims). Sampling is center-aligned and clamps
/// to the border instead of filling. Throws DomainError if factor <= 0 or an
/// output dimension would be 0.
RealImage zoom(const RealImage& img, double factor,
               Interpolation interp = Interpolation::bilinear);

}  // namespace sipkit
