#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

#include "sipkit/image.hpp"

// Synthetic test images. All generators are deterministic across platforms
// (noise comes straight from std::mt19937 output bits).
namespace sipkit::fixtures {

/// 100x100 noisy dark letter 'A' on a light background.
RealImage glyph_a(std::uint32_t seed = 7);

/// Dark discs (0.45) on a white background.
RealImage discs(int width, int height,
                std::initializer_list<std::array<double, 3>> centers_and_radii);

/// Two overlapping discs, radius 20, centers 30 px apart, 100x70.
RealImage two_cells();

/// One disc of radius 20, 70x70.
RealImage single_cell();

/// 120x90 smooth scene with a few shapes, for edge and rotation demos.
RealImage scene();

/// Random mask with the given foreground probability.
BinaryImage random_mask(int width, int height, double density, std::uint32_t seed);

}  // namespace sipkit::fixtures
