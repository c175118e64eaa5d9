#include "sipkit/seg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <vector>

namespace sipkit {
namespace {

constexpr int kLevels = 256;
constexpr std::array<int, 8> kDx = {-1, 0, 1, -1, 1, -1, 0, 1};
constexpr std::array<int, 8> kDy = {-1, -1, -1, 0, 0, 1, 1, 1};

}  // namespace

Image<std::uint8_t> quantize_levels(const RealImage& img) {
  Image<std::uint8_t> out(img.width(), img.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (std::isnan(img[i])) throw DomainError("watershed input contains NaN");
    const double v = std::clamp(img[i], 0.0, 1.0);
    out[i] = static_cast<std::uint8_t>(std::min(255.0, std::floor(v * 255.0)));
  }
  return out;
}

Minima label_regional_minima(const RealImage& img) {
  const auto level = quantize_levels(img);
  const int w = img.width();
  const int h = img.height();
  Minima out{LabelImage(w, h, 0), 0};

  // Plateau ids: 0 = not yet visited.
  LabelImage plateau(w, h, 0);
  std::vector<int> members;
  int next_id = 0;
  for (int y0 = 0; y0 < h; ++y0) {
    for (int x0 = 0; x0 < w; ++x0) {
      if (plateau(x0, y0)) continue;
      const std::uint8_t v = level(x0, y0);
      const int id = ++next_id;
      bool is_min = true;
      members.assign(1, y0 * w + x0);
      plateau(x0, y0) = id;
      for (std::size_t k = 0; k < members.size(); ++k) {
        const int px = members[k] % w;
        const int py = members[k] / w;
        for (int d = 0; d < 8; ++d) {
          const int nx = px + kDx[d];
          const int ny = py + kDy[d];
          if (!level.contains(nx, ny)) continue;
          if (level(nx, ny) < v) {
            is_min = false;
          } else if (level(nx, ny) == v && !plateau(nx, ny)) {
            plateau(nx, ny) = id;
            members.push_back(ny * w + nx);
          }
        }
      }
      if (is_min) {
        ++out.count;
        for (int p : members) out.labels[p] = out.count;
      }
    }
  }
  return out;
}

BinaryImage regional_minima(const RealImage& img) {
  const auto minima = label_regional_minima(img);
  BinaryImage out(img.width(), img.height());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = minima.labels[i] ? 1 : 0;
  return out;
}

LabelImage watershed(const RealImage& img) {
  const auto level = quantize_levels(img);
  auto minima = label_regional_minima(img);
  LabelImage& labels = minima.labels;
  const int w = img.width();

  std::array<std::deque<int>, kLevels> queue;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i]) queue[level[i]].push_back(static_cast<int>(i));
  }

  for (int current = 0; current < kLevels;) {
    if (queue[current].empty()) {
      ++current;
      continue;
    }
    const int p = queue[current].front();
    queue[current].pop_front();
    const int px = p % w;
    const int py = p / w;
    for (int d = 0; d < 8; ++d) {
      const int nx = px + kDx[d];
      const int ny = py + kDy[d];
      if (!labels.contains(nx, ny) || labels(nx, ny)) continue;
      labels(nx, ny) = labels[p];
      queue[std::max<int>(level(nx, ny), current)].push_back(ny * w + nx);
    }
  }
  return labels;
}

int count_objects(const LabelImage& labels) {
  const auto top = *std::max_element(labels.samples().begin(), labels.samples().end());
  return top - 1;
}

}  // namespace sipkit
