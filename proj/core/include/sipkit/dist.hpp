#pragma once

#include <cstdint>

#include "sipkit/image.hpp"

namespace sipkit {

/// Exact squared distances; integers.
using SquaredDistanceImage = Image<std::int64_t>;
/// Euclidean distances in pixel units.
using DistanceImage = RealImage;

/// For every pixel, min over background (0) pixels q of |p - q|^2, computed
/// exactly in integer arithmetic. Background pixels get 0.
///
/// Two separable passes: a per-column scan to the nearest background row,
/// then a per-row lower envelope of parabolas with integer breakpoints.
/// Throws DomainError if the mask has no background pixel (every distance
/// would be infinite).
SquaredDistanceImage edt_squared(const BinaryImage& mask);

/// Elementwise sqrt of edt_squared.
DistanceImage edt(const BinaryImage& mask);

/// Exact distance where it is <= dmax, exactly dmax elsewhere. Unlike edt(),
/// a mask without background is accepted (everything saturates).
/// Throws DomainError if dmax <= 0.
DistanceImage edt_limited(const BinaryImage& mask, double dmax);

struct FeatureTransform {
  SquaredDistanceImage distance;
  /// Linear index (y * width + x) of a nearest background pixel.
  Image<std::int32_t> nearest;
};

/// edt_squared plus the location of one nearest background pixel per pixel.
FeatureTransform feature_transform(const BinaryImage& mask);

}  // namespace sipkit
