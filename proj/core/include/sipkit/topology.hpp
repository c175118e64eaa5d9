#pragma once

#include "sipkit/image.hpp"

namespace sipkit {

enum class Connectivity { four = 4, eight = 8 };

struct Components {
  /// 0 on background, 1..count on foreground, numbered in raster order of
  /// each component's first pixel.
  LabelImage labels;
  int count = 0;
};

Components label_components(const BinaryImage& mask, Connectivity conn);

/// Background components (4-connected, the dual of 8-connected foreground)
/// that do not touch the image border.
int count_holes(const BinaryImage& mask);

/// True if some 2x2 block is entirely foreground.
bool has_full_2x2_block(const BinaryImage& mask) noexcept;

bool is_subset(const BinaryImage& inner, const BinaryImage& outer);

}  // namespace sipkit
