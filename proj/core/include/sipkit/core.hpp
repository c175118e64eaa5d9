#pragma once

#include <cstdint>

#include "sipkit/image.hpp"

namespace sipkit {

/// Luma with weights 0.299 / 0.587 / 0.114, rounded half up.
Gray16Image to_gray(const TruecolorImage& img);

/// Same weights applied to a single 16-bit color.
std::uint16_t luma16(std::uint16_t r, std::uint16_t g, std::uint16_t b) noexcept;

/// Affine rescale so the minimum maps to 0 and the maximum to 1.
/// A constant image yields all zeros. Throws DomainError on NaN/Inf samples.
RealImage normalize(const RealImage& img);

/// 1 where clamp(sample, 0, 1) >= t. Throws DomainError unless 0 <= t <= 1.
BinaryImage threshold(const RealImage& img, double t);

RealImage invert(const RealImage& img);
BinaryImage invert(const BinaryImage& mask);

Gray16Image scale8to16(const Gray8Image& img);

/// Elementwise product; background pixels of `mask` become exactly 0.
RealImage mask_multiply(const RealImage& img, const BinaryImage& mask);

/// Histogram equalization over 65536 bins:
///   out = round(65535 * (cdf(v) - cdf_min) / (1 - cdf_min)).
/// Constant images are returned unchanged.
Gray16Image equalize(const Gray16Image& img);

/// real = v / 65535
RealImage to_real(const Gray16Image& img);
/// v = round(clamp(real, 0, 1) * 65535)
Gray16Image to_gray16(const RealImage& img);

RealImage to_real(const BinaryImage& mask);
/// Binary masks as stored images: 1 -> 65535.
Gray16Image mask_to_gray16(const BinaryImage& mask);

bool is_binary(const BinaryImage& mask) noexcept;

}  // namespace sipkit
