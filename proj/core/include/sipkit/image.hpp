#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sipkit/error.hpp"

namespace sipkit {

/// Dense row-major 2D raster. Pixel (x, y) lives at index y * width + x.
/// Dimensions are always at least 1x1.
template <class T>
class Image {
 public:
  using value_type = T;

  Image() : Image(1, 1) {}

  Image(int width, int height, T fill = T{}) : width_(width), height_(height) {
    if (width < 1 || height < 1) {
      throw DomainError("image dimensions must be at least 1x1, got " +
                        std::to_string(width) + "x" + std::to_string(height));
    }
    samples_.assign(static_cast<std::size_t>(width) * height, fill);
  }

  Image(int width, int height, std::vector<T> samples)
      : width_(width), height_(height), samples_(std::move(samples)) {
    if (width < 1 || height < 1) {
      throw DomainError("image dimensions must be at least 1x1");
    }
    if (samples_.size() != static_cast<std::size_t>(width) * height) {
      throw DomainError("sample count does not match " + std::to_string(width) +
                        "x" + std::to_string(height));
    }
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return samples_.size(); }

  T& operator()(int x, int y) noexcept {
    return samples_[static_cast<std::size_t>(y) * width_ + x];
  }
  const T& operator()(int x, int y) const noexcept {
    return samples_[static_cast<std::size_t>(y) * width_ + x];
  }

  T& operator[](std::size_t i) noexcept { return samples_[i]; }
  const T& operator[](std::size_t i) const noexcept { return samples_[i]; }

  bool contains(int x, int y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  std::span<T> samples() noexcept { return samples_; }
  std::span<const T> samples() const noexcept { return samples_; }

  std::span<T> row(int y) noexcept {
    return std::span<T>(samples_).subspan(static_cast<std::size_t>(y) * width_,
                                          width_);
  }
  std::span<const T> row(int y) const noexcept {
    return std::span<const T>(samples_).subspan(
        static_cast<std::size_t>(y) * width_, width_);
  }

  template <class U>
  bool same_shape(const Image<U>& other) const noexcept {
    return width_ == other.width() && height_ == other.height();
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  int width_;
  int height_;
  std::vector<T> samples_;
};

/// Normalized working representation, nominally in [0, 1].
using RealImage = Image<double>;
/// Storage-level grayscale, 0..65535.
using Gray16Image = Image<std::uint16_t>;
using Gray8Image = Image<std::uint8_t>;
/// Samples are exactly 0 or 1. Foreground is 1.
using BinaryImage = Image<std::uint8_t>;
/// Region identifiers; 0 is reserved for "unlabeled" in intermediate results.
using LabelImage = Image<std::int32_t>;

struct TruecolorImage {
  Gray16Image red;
  Gray16Image green;
  Gray16Image blue;

  TruecolorImage(Gray16Image r, Gray16Image g, Gray16Image b);
  TruecolorImage(int width, int height);

  int width() const noexcept { return red.width(); }
  int height() const noexcept { return red.height(); }

  friend bool operator==(const TruecolorImage&, const TruecolorImage&) = default;
};

using ColorMapEntry = std::array<double, 3>;

/// N x 3 colormap, channel values in [0, 1].
using ColorMap = std::vector<ColorMapEntry>;

/// Paletted image. Index entries are 1-based rows of `map`.
struct IndexedImage {
  Image<std::uint32_t> index;
  ColorMap map;

  IndexedImage(Image<std::uint32_t> idx, ColorMap m);

  int width() const noexcept { return index.width(); }
  int height() const noexcept { return index.height(); }
};

template <class T, class U>
void require_same_shape(const Image<T>& a, const Image<U>& b, const char* op) {
  if (!a.same_shape(b)) {
    throw DomainError(std::string(op) + ": dimension mismatch (" +
                      std::to_string(a.width()) + "x" +
                      std::to_string(a.height()) + " vs " +
                      std::to_string(b.width()) + "x" +
                      std::to_string(b.height()) + ")");
  }
}

}  // namespace sipkit
