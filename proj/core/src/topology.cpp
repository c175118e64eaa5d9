#include "sipkit/topology.hpp"

#include <vector>

namespace sipkit {

Components label_components(const BinaryImage& mask, Connectivity conn) {
  const int w = mask.width();
  const int h = mask.height();
  Components out{LabelImage(w, h, 0), 0};
  const int reach = conn == Connectivity::eight ? 1 : 0;
  std::vector<int> stack;
  for (int y0 = 0; y0 < h; ++y0) {
    for (int x0 = 0; x0 < w; ++x0) {
      if (!mask(x0, y0) || out.labels(x0, y0) != 0) continue;
      const int id = ++out.count;
      out.labels(x0, y0) = id;
      stack.assign(1, y0 * w + x0);
      while (!stack.empty()) {
        const int p = stack.back();
        stack.pop_back();
        const int px = p % w;
        const int py = p / w;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            if (!reach && dx != 0 && dy != 0) continue;
            const int nx = px + dx;
            const int ny = py + dy;
            if (!mask.contains(nx, ny) || !mask(nx, ny) || out.labels(nx, ny)) continue;
            out.labels(nx, ny) = id;
            stack.push_back(ny * w + nx);
          }
        }
      }
    }
  }
  return out;
}

int count_holes(const BinaryImage& mask) {
  BinaryImage background(mask.width(), mask.height());
  for (std::size_t i = 0; i < mask.size(); ++i) background[i] = mask[i] ? 0 : 1;
  const auto comps = label_components(background, Connectivity::four);
  std::vector<bool> touches(comps.count + 1, false);
  const int w = mask.width();
  const int h = mask.height();
  for (int x = 0; x < w; ++x) {
    touches[comps.labels(x, 0)] = true;
    touches[comps.labels(x, h - 1)] = true;
  }
  for (int y = 0; y < h; ++y) {
    touches[comps.labels(0, y)] = true;
    touches[comps.labels(w - 1, y)] = true;
  }
  int holes = 0;
  for (int id = 1; id <= comps.count; ++id) holes += touches[id] ? 0 : 1;
  return holes;
}

bool has_full_2x2_block(const BinaryImage& mask) noexcept {
  for (int y = 0; y + 1 < mask.height(); ++y) {
    for (int x = 0; x + 1 < mask.width(); ++x) {
      if (mask(x, y) && mask(x + 1, y) && mask(x, y + 1) && mask(x + 1, y + 1)) {
        return true;
      }
    }
  }
  return false;
}

bool is_subset(const BinaryImage& inner, const BinaryImage& outer) {
  require_same_shape(inner, outer, "is_subset");
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] && !outer[i]) return false;
  }
  return true;
}

}  // namespace sipkit
