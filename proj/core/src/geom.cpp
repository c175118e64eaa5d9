#include "sipkit/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sipkit/parallel.hpp"

namespace sipkit {
namespace {

constexpr double kEdgeSlack = 1e-9;

enum class Border { zero, clamp };

double sample(const RealImage& img, double x, double y, Interpolation interp,
              Border border) noexcept {
  const int w = img.width();
  const int h = img.height();
  if (border == Border::zero) {
    if (x < -0.5 - kEdgeSlack || y < -0.5 - kEdgeSlack ||
        x > w - 0.5 + kEdgeSlack || y > h - 0.5 + kEdgeSlack) {
      return 0.0;
    }
  }
  if (interp == Interpolation::nearest) {
    const int xi = std::clamp(static_cast<int>(std::floor(x + 0.5)), 0, w - 1);
    const int yi = std::clamp(static_cast<int>(std::floor(y + 0.5)), 0, h - 1);
    return img(xi, yi);
  }
  const double cx = std::clamp(x, 0.0, static_cast<double>(w - 1));
  const double cy = std::clamp(y, 0.0, static_cast<double>(h - 1));
  const int x0 = static_cast<int>(std::floor(cx));
  const int y0 = static_cast<int>(std::floor(cy));
  const int x1 = std::min(x0 + 1, w - 1);
  const int y1 = std::min(y0 + 1, h - 1);
  const double fx = cx - x0;
  const double fy = cy - y0;
  const double top = img(x0, y0) + fx * (img(x1, y0) - img(x0, y0));
  const double bottom = img(x0, y1) + fx * (img(x1, y1) - img(x0, y1));
  return top + fy * (bottom - top);
}

RealImage resample(const RealImage& img, const AffineMap& map, Size out,
                   Interpolation interp, Border border) {
  RealImage result(out.width, out.height);
  parallel_for(out.height, [&](int y) {
    auto dst = result.row(y);
    for (int x = 0; x < out.width; ++x) {
      const auto [sx, sy] = map.apply(x, y);
      dst[x] = sample(img, sx, sy, interp, border);
    }
  });
  return result;
}

}  // namespace

std::pair<double, double> cos_sin_degrees(double degrees) noexcept {
  double d = std::fmod(degrees, 360.0);
  if (d < 0) d += 360.0;
  if (d == 0.0) return {1.0, 0.0};
  if (d == 90.0) return {0.0, 1.0};
  if (d == 180.0) return {-1.0, 0.0};
  if (d == 270.0) return {0.0, -1.0};
  const double rad = d * std::numbers::pi / 180.0;
  return {std::cos(rad), std::sin(rad)};
}

Size rotated_canvas(int width, int height, double degrees) noexcept {
  const auto [c, s] = cos_sin_degrees(degrees);
  const double w = width * std::abs(c) + height * std::abs(s);
  const double h = width * std::abs(s) + height * std::abs(c);
  // Absorb rounding noise so an exact integer extent does not grow by one.
  return {std::max(1, static_cast<int>(std::ceil(w - 1e-9))),
          std::max(1, static_cast<int>(std::ceil(h - 1e-9)))};
}

AffineMap rotation_map(int width, int height, double degrees,
                       Size canvas) noexcept {
  const auto [c, s] = cos_sin_degrees(degrees);
  const double cx_in = (width - 1) / 2.0;
  const double cy_in = (height - 1) / 2.0;
  const double cx_out = (canvas.width - 1) / 2.0;
  const double cy_out = (canvas.height - 1) / 2.0;
  AffineMap m;
  m.a11 = c;
  m.a12 = s;
  m.tx = cx_in - (c * cx_out + s * cy_out);
  m.a21 = -s;
  m.a22 = c;
  m.ty = cy_in - (-s * cx_out + c * cy_out);
  return m;
}

RealImage affine_warp(const RealImage& img, const AffineMap& map, Size out,
                      Interpolation interp) {
  if (!(std::abs(map.determinant()) > 1e-12)) {
    throw DomainError("affine map is singular");
  }
  if (out.width < 1 || out.height < 1) {
    throw DomainError("affine output size must be at least 1x1");
  }
  return resample(img, map, out, interp, Border::zero);
}

RealImage rotate(const RealImage& img, double degrees, Interpolation interp) {
  const Size canvas = rotated_canvas(img.width(), img.height(), degrees);
  return affine_warp(img, rotation_map(img.width(), img.height(), degrees, canvas),
                     canvas, interp);
}

RealImage zoom(const RealImage& img, double factor, Interpolation interp) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw DomainError("zoom factor must be positive");
  }
  const double w = std::round(factor * img.width());
  const double h = std::round(factor * img.height());
  if (w < 1 || h < 1 || w > 1e6 || h > 1e6) {
    throw DomainError("zoom by " + std::to_string(factor) +
                      " gives a degenerate output size");
  }
  const Size out{static_cast<int>(w), static_cast<int>(h)};
  // Align pixel-area centers: x_in = (x_out + 0.5) / sx - 0.5.
  const double sx = out.width / static_cast<double>(img.width());
  const double sy = out.height / static_cast<double>(img.height());
  AffineMap m;
  m.a11 = 1.0 / sx;
  m.a12 = 0.0;
  m.tx = 0.5 / sx - 0.5;
  m.a21 = 0.0;
  m.a22 = 1.0 / sy;
  m.ty = 0.5 / sy - 0.5;
  return resample(img, m, out, interp, Border::clamp);
}

}  // namespace sipkit
