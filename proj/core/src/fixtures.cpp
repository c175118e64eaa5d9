#include "sipkit/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace sipkit::fixtures {
namespace {

double unit(std::mt19937& rng) {
  return static_cast<double>(rng() >> 8) * 0x1.0p-24;
}

double segment_distance(double px, double py, double ax, double ay, double bx,
                        double by) {
  const double vx = bx - ax;
  const double vy = by - ay;
  const double t =
      std::clamp(((px - ax) * vx + (py - ay) * vy) / (vx * vx + vy * vy), 0.0, 1.0);
  return std::hypot(px - (ax + t * vx), py - (ay + t * vy));
}

}  // namespace

RealImage glyph_a(std::uint32_t seed) {
  constexpr int kSize = 100;
  constexpr double kHalfStroke = 6.0;
  std::mt19937 rng(seed);
  RealImage img(kSize, kSize);
  for (int y = 0; y < kSize; ++y) {
    for (int x = 0; x < kSize; ++x) {
      const double left = segment_distance(x, y, 50, 10, 18, 90);
      const double right = segment_distance(x, y, 50, 10, 82, 90);
      const double bar = segment_distance(x, y, 33, 60, 67, 60);
      const bool ink = std::min({left, right}) <= kHalfStroke || bar <= 4.5;
      const double base = ink ? 0.12 : 0.92;
      img(x, y) = std::clamp(base + 0.16 * (unit(rng) - 0.5), 0.0, 1.0);
    }
  }
  return img;
}

RealImage discs(int width, int height,
                std::initializer_list<std::array<double, 3>> centers_and_radii) {
  RealImage img(width, height, 1.0);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      for (const auto& [cx, cy, r] : centers_and_radii) {
        if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r) img(x, y) = 0.45;
      }
    }
  }
  return img;
}

RealImage two_cells() { return discs(100, 70, {{35, 35, 20}, {65, 35, 20}}); }

RealImage single_cell() { return discs(70, 70, {{35, 35, 20}}); }

RealImage scene() {
  constexpr int kW = 120;
  constexpr int kH = 90;
  RealImage img(kW, kH);
  for (int y = 0; y < kH; ++y) {
    for (int x = 0; x < kW; ++x) {
      double v = 0.2 + 0.3 * x / kW + 0.1 * y / kH;
      if ((x - 40) * (x - 40) + (y - 45) * (y - 45) <= 18 * 18) v = 0.85;
      if (x >= 70 && x < 105 && y >= 20 && y < 50) v = 0.05;
      if (x >= 60 && x < 110 && y >= 62 && y < 70) v = 0.65;
      img(x, y) = v;
    }
  }
  return img;
}

BinaryImage random_mask(int width, int height, double density, std::uint32_t seed) {
  std::mt19937 rng(seed);
  BinaryImage mask(width, height);
  for (auto& v : mask.samples()) v = unit(rng) < density ? 1 : 0;
  return mask;
}

}  // namespace sipkit::fixtures
