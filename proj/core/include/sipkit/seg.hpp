#pragma once

#include <cstdint>

#include "sipkit/image.hpp"

namespace sipkit {

/// floor(clamp(x, 0, 1) * 255), so 1.0 lands on level 255.
/// Throws DomainError on NaN.
Image<std::uint8_t> quantize_levels(const RealImage& img);

struct Minima {
  /// 0 off-minimum; 1..count on each minimum plateau, numbered in raster
  /// order of the plateau's first pixel.
  LabelImage labels;
  int count = 0;
};

/// Regional minima of the 256-level quantized image: 8-connected plateaus of
/// equal level with no strictly lower 8-neighbor.
Minima label_regional_minima(const RealImage& img);

/// Marker mask: 1 on every regional-minimum plateau.
BinaryImage regional_minima(const RealImage& img);

/// Watershed by priority flooding of the quantized image from its regional
/// minima (8-connectivity). Within a level, pixels are processed first in,
/// first out, and a pixel joins the first basin that reaches it, so there
/// are no watershed-line pixels. Labels are 1..n where n is the number of
/// regional minima.
LabelImage watershed(const RealImage& img);

/// max(label) - 1: the background basin is not counted.
int count_objects(const LabelImage& labels);

}  // namespace sipkit
