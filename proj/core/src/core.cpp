#include "sipkit/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sipkit {

TruecolorImage::TruecolorImage(Gray16Image r, Gray16Image g, Gray16Image b)
    : red(std::move(r)), green(std::move(g)), blue(std::move(b)) {
  require_same_shape(red, green, "truecolor");
  require_same_shape(red, blue, "truecolor");
}

TruecolorImage::TruecolorImage(int width, int height)
    : red(width, height), green(width, height), blue(width, height) {}

IndexedImage::IndexedImage(Image<std::uint32_t> idx, ColorMap m)
    : index(std::move(idx)), map(std::move(m)) {
  if (map.empty()) throw DomainError("indexed image: empty colormap");
  for (const auto& row : map) {
    for (double c : row) {
      if (!(c >= 0.0 && c <= 1.0)) {
        throw DomainError("indexed image: colormap entries must lie in [0,1]");
      }
    }
  }
  for (std::uint32_t i : index.samples()) {
    if (i < 1 || i > map.size()) {
      throw DomainError("indexed image: index " + std::to_string(i) +
                        " outside colormap of " + std::to_string(map.size()) +
                        " rows");
    }
  }
}

std::uint16_t luma16(std::uint16_t r, std::uint16_t g,
                     std::uint16_t b) noexcept {
  // Integer weights sum to 1000, so equal channels map to themselves exactly.
  const std::uint64_t acc = 299ull * r + 587ull * g + 114ull * b + 500ull;
  return static_cast<std::uint16_t>(std::min<std::uint64_t>(acc / 1000, 65535));
}

Gray16Image to_gray(const TruecolorImage& img) {
  Gray16Image out(img.width(), img.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = luma16(img.red[i], img.green[i], img.blue[i]);
  }
  return out;
}

RealImage normalize(const RealImage& img) {
  double lo = img[0];
  double hi = img[0];
  for (double v : img.samples()) {
    if (!std::isfinite(v)) throw DomainError("normalize: non-finite sample");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  RealImage out(img.width(), img.height(), 0.0);
  if (hi == lo) return out;
  const double range = hi - lo;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (img[i] - lo) / range;
  }
  return out;
}

BinaryImage threshold(const RealImage& img, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("threshold must lie in [0,1], got " + std::to_string(t));
  }
  BinaryImage out(img.width(), img.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::clamp(img[i], 0.0, 1.0) >= t ? 1 : 0;
  }
  return out;
}

RealImage invert(const RealImage& img) {
  RealImage out(img.width(), img.height());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 1.0 - img[i];
  return out;
}

BinaryImage invert(const BinaryImage& mask) {
  BinaryImage out(mask.width(), mask.height());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mask[i] ? 0 : 1;
  return out;
}

Gray16Image scale8to16(const Gray8Image& img) {
  Gray16Image out(img.width(), img.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint16_t>(img[i] * 257u);
  }
  return out;
}

RealImage mask_multiply(const RealImage& img, const BinaryImage& mask) {
  require_same_shape(img, mask, "mask_multiply");
  RealImage out(img.width(), img.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = mask[i] ? img[i] : 0.0;
  }
  return out;
}

Gray16Image equalize(const Gray16Image& img) {
  std::vector<std::uint64_t> cdf(65536, 0);
  for (std::uint16_t v : img.samples()) ++cdf[v];
  std::uint16_t first = 0;
  while (cdf[first] == 0) ++first;
  for (std::size_t v = 1; v < cdf.size(); ++v) cdf[v] += cdf[v - 1];

  const std::uint64_t total = img.size();
  const std::uint64_t base = cdf[first];
  if (base == total) return img;

  // Counts instead of fractions keep the mapping exact for small images.
  const double denom = static_cast<double>(total - base);
  Gray16Image out(img.width(), img.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double num = static_cast<double>(cdf[img[i]] - base);
    out[i] = static_cast<std::uint16_t>(std::lround(65535.0 * num / denom));
  }
  return out;
}

RealImage to_real(const Gray16Image& img) {
  RealImage out(img.width(), img.height());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = img[i] / 65535.0;
  return out;
}

Gray16Image to_gray16(const RealImage& img) {
  Gray16Image out(img.width(), img.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double v = std::isnan(img[i]) ? 0.0 : std::clamp(img[i], 0.0, 1.0);
    out[i] = static_cast<std::uint16_t>(std::lround(v * 65535.0));
  }
  return out;
}

RealImage to_real(const BinaryImage& mask) {
  RealImage out(mask.width(), mask.height());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mask[i] ? 1.0 : 0.0;
  return out;
}

Gray16Image mask_to_gray16(const BinaryImage& mask) {
  Gray16Image out(mask.width(), mask.height());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mask[i] ? 65535 : 0;
  return out;
}

bool is_binary(const BinaryImage& mask) noexcept {
  return std::all_of(mask.samples().begin(), mask.samples().end(),
                     [](std::uint8_t v) { return v <= 1; });
}

}  // namespace sipkit
