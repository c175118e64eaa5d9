#pragma once

#include "sipkit/image.hpp"

namespace sipkit {

/// Multiscale skeleton: 0 off the skeleton, otherwise the scale in (0, 1] at
/// which the pixel's branch disappears. threshold(field, tau) gives the
/// skeleton pruned at scale tau.
using SkeletonField = RealImage;

/// 1 where the squared distance to the foreground is <= r^2, i.e. the
/// Minkowski sum with the digital disc {(dx, dy) : dx^2 + dy^2 <= r^2}.
/// Throws DomainError if r < 0.
BinaryImage dilate_disc(const BinaryImage& mask, double r);

/// complement(dilate_disc(complement(mask), r)). Pixels outside the image
/// never erode anything.
BinaryImage erode_disc(const BinaryImage& mask, double r);

/// Multiscale skeleton by contour-label propagation.
///
/// Every contour of every foreground component is walked (outer contours
/// counterclockwise, holes clockwise, foreground always on the left) and
/// each boundary crack gets its arc-length position as a label. An exact
/// feature transform hands each foreground pixel the label of its nearest
/// contour pixel. Where two neighboring pixels inherit labels that are far
/// apart along the contour, a medial branch runs between them; its scale is
/// the shorter arc between the two labels divided by half the total contour
/// length of the component. Labels from two different contours of one
/// component (outer boundary and a hole) always give scale 1, so loops
/// around holes survive every threshold.
///
/// The mask is padded by one background pixel before processing.
/// Throws DomainError unless the mask has at least one foreground and one
/// background pixel.
SkeletonField skeleton(const BinaryImage& mask);

}  // namespace sipkit
