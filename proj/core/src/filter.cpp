#include "sipkit/filter.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sipkit/parallel.hpp"

namespace sipkit {
namespace {

int clamp_index(int i, int n) noexcept { return std::clamp(i, 0, n - 1); }

RealImage convolve_rows(const RealImage& img, std::span<const double> taps) {
  const int r = static_cast<int>(taps.size() / 2);
  const int w = img.width();
  RealImage out(w, img.height());
  parallel_for(img.height(), [&](int y) {
    const auto src = img.row(y);
    auto dst = out.row(y);
    for (int x = 0; x < w; ++x) {
      const double center = src[x];
      double acc = 0.0;
      for (int i = -r; i <= r; ++i) {
        acc += taps[i + r] * (src[clamp_index(x + i, w)] - center);
      }
      dst[x] = center + acc;
    }
  });
  return out;
}

RealImage convolve_cols(const RealImage& img, std::span<const double> taps) {
  const int r = static_cast<int>(taps.size() / 2);
  const int h = img.height();
  RealImage out(img.width(), h);
  parallel_for(h, [&](int y) {
    for (int x = 0; x < img.width(); ++x) {
      const double center = img(x, y);
      double acc = 0.0;
      for (int i = -r; i <= r; ++i) {
        acc += taps[i + r] * (img(x, clamp_index(y + i, h)) - center);
      }
      out(x, y) = center + acc;
    }
  });
  return out;
}

}  // namespace

GaussianKernel::GaussianKernel(double sigma) : sigma_(sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("gaussian sigma must be positive, got " +
                      std::to_string(sigma));
  }
  const int r = static_cast<int>(std::ceil(3.0 * sigma));
  taps_.resize(2 * r + 1);
  double sum = 0.0;
  for (int i = -r; i <= r; ++i) {
    taps_[i + r] = std::exp(-(i * i) / (2.0 * sigma * sigma));
  }
  // Sum from the tails inward so that mirrored taps see the same rounding.
  for (int i = r; i >= 1; --i) sum += taps_[r - i] + taps_[r + i];
  sum += taps_[r];
  for (double& t : taps_) t /= sum;
}

RealImage gaussian_blur(const RealImage& img, double sigma) {
  const GaussianKernel kernel(sigma);
  const auto taps = kernel.taps();
  const RealImage hv = convolve_cols(convolve_rows(img, taps), taps);
  const RealImage vh = convolve_rows(convolve_cols(img, taps), taps);
  RealImage out(img.width(), img.height());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 0.5 * (hv[i] + vh[i]);
  return out;
}

RealImage median_filter(const RealImage& img, int radius) {
  if (radius < 0) throw DomainError("median radius must be >= 0");
  if (radius == 0) return img;
  const int w = img.width();
  const int h = img.height();
  const int side = 2 * radius + 1;
  RealImage out(w, h);
  parallel_for(h, [&](int y) {
    std::vector<double> window(static_cast<std::size_t>(side) * side);
    for (int x = 0; x < w; ++x) {
      std::size_t n = 0;
      for (int dy = -radius; dy <= radius; ++dy) {
        const auto src = img.row(clamp_index(y + dy, h));
        for (int dx = -radius; dx <= radius; ++dx) {
          window[n++] = src[clamp_index(x + dx, w)];
        }
      }
      const auto mid = window.begin() + (n - 1) / 2;
      std::nth_element(window.begin(), mid, window.begin() + n);
      out(x, y) = *mid;
    }
  });
  return out;
}

RealImage sobel_magnitude(const RealImage& img) {
  const int w = img.width();
  const int h = img.height();
  RealImage out(w, h);
  parallel_for(h, [&](int y) {
    const auto up = img.row(clamp_index(y - 1, h));
    const auto mid = img.row(y);
    const auto down = img.row(clamp_index(y + 1, h));
    for (int x = 0; x < w; ++x) {
      const int l = clamp_index(x - 1, w);
      const int r = clamp_index(x + 1, w);
      const double gx = (up[r] - up[l]) + 2.0 * (mid[r] - mid[l]) + (down[r] - down[l]);
      const double gy = (down[l] - up[l]) + 2.0 * (down[x] - up[x]) + (down[r] - up[r]);
      out(x, y) = std::sqrt(gx * gx + gy * gy);
    }
  });
  return out;
}

BinaryImage sobel_edges(const RealImage& img, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("edge threshold must lie in [0,1], got " + std::to_string(t));
  }
  const RealImage g = sobel_magnitude(img);
  const double gmax = *std::max_element(g.samples().begin(), g.samples().end());
  BinaryImage out(img.width(), img.height(), 0);
  if (!(gmax > 0.0)) return out;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = g[i] / gmax >= t ? 1 : 0;
  return out;
}

}  // namespace sipkit
