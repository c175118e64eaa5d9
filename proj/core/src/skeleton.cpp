#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "sipkit/dist.hpp"
#include "sipkit/morph.hpp"
#include "sipkit/topology.hpp"

namespace sipkit {
namespace {

struct Vec {
  int x;
  int y;
};

// Crack sides, indexed by bit position in the visited mask.
constexpr std::array<Vec, 4> kSide = {{{0, -1}, {1, 0}, {0, 1}, {-1, 0}}};

int side_index(Vec n) noexcept {
  for (int s = 0; s < 4; ++s) {
    if (kSide[s].x == n.x && kSide[s].y == n.y) return s;
  }
  return -1;
}

// Screen-left of a direction with y pointing down.
Vec left_of(Vec v) noexcept { return {v.y, -v.x}; }
Vec right_of(Vec v) noexcept { return {-v.y, v.x}; }

struct Label {
  int loop;
  int pos;
};

struct ContourLabels {
  // Up to one label per crack, so at most four per pixel.
  Image<std::array<Label, 4>> labels;
  Image<std::uint8_t> count;
  std::vector<int> loop_length;
  std::vector<int> loop_component;
};

ContourLabels trace_contours(const BinaryImage& padded, const LabelImage& comp) {
  const int w = padded.width();
  const int h = padded.height();
  ContourLabels out{Image<std::array<Label, 4>>(w, h), Image<std::uint8_t>(w, h, 0),
                    {}, {}};
  Image<std::uint8_t> visited(w, h, 0);
  auto fg = [&](int x, int y) { return padded.contains(x, y) && padded(x, y) != 0; };

  for (int y0 = 0; y0 < h; ++y0) {
    for (int x0 = 0; x0 < w; ++x0) {
      if (!fg(x0, y0)) continue;
      for (int s0 = 0; s0 < 4; ++s0) {
        if (fg(x0 + kSide[s0].x, y0 + kSide[s0].y)) continue;
        if (visited(x0, y0) & (1u << s0)) continue;

        const int loop = static_cast<int>(out.loop_length.size());
        int length = 0;
        int px = x0;
        int py = y0;
        int side = s0;
        do {
          visited(px, py) |= static_cast<std::uint8_t>(1u << side);
          auto& n_labels = out.count(px, py);
          out.labels(px, py)[n_labels++] = {loop, length++};

          // Walk the crack with the foreground pixel on the left, then pick
          // the next crack at its end vertex. Diagonal foreground neighbors
          // stay on one contour (8-connected foreground).
          const Vec n = kSide[side];
          const Vec v = left_of(n);
          const Vec lv = left_of(v);
          const int qx = px + (1 + n.x + v.x) / 2;
          const int qy = py + (1 + n.y + v.y) / 2;
          auto pixel_x = [&](int ax) { return qx + (ax - 1) / 2; };
          auto pixel_y = [&](int ay) { return qy + (ay - 1) / 2; };
          const int alx = pixel_x(v.x + lv.x), aly = pixel_y(v.y + lv.y);
          const int arx = pixel_x(v.x - lv.x), ary = pixel_y(v.y - lv.y);
          Vec next;
          if (fg(arx, ary)) {
            px = arx;
            py = ary;
            next = right_of(v);
          } else if (fg(alx, aly)) {
            px = alx;
            py = aly;
            next = v;
          } else {
            next = lv;
          }
          side = side_index(right_of(next));
        } while (!(px == x0 && py == y0 && side == s0));

        out.loop_length.push_back(length);
        out.loop_component.push_back(comp(x0, y0));
      }
    }
  }
  return out;
}

}  // namespace

SkeletonField skeleton(const BinaryImage& mask) {
  const int w = mask.width();
  const int h = mask.height();
  std::size_t ones = 0;
  for (std::uint8_t v : mask.samples()) ones += v ? 1 : 0;
  if (ones == 0) throw DomainError("skeleton: mask has no foreground pixel");
  if (ones == mask.size()) throw DomainError("skeleton: mask has no background pixel");

  const int pw = w + 2;
  const int ph = h + 2;
  BinaryImage padded(pw, ph, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) padded(x + 1, y + 1) = mask(x, y) ? 1 : 0;
  }

  const auto comps = label_components(padded, Connectivity::eight);
  const auto contours = trace_contours(padded, comps.labels);

  std::vector<double> perimeter(comps.count + 1, 0.0);
  for (std::size_t k = 0; k < contours.loop_length.size(); ++k) {
    perimeter[contours.loop_component[k]] += contours.loop_length[k];
  }

  auto scale = [&](Label a, Label b, int component) {
    if (a.loop != b.loop) return 1.0;
    const int len = contours.loop_length[a.loop];
    const int d = std::abs(a.pos - b.pos);
    const int arc = std::min(d, len - d);
    return std::min(1.0, 2.0 * arc / perimeter[component]);
  };

  // Contour pixels generate; every other pixel inherits a nearest one.
  BinaryImage generators(pw, ph, 1);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (contours.count[i] > 0) generators[i] = 0;
  }
  const auto ft = feature_transform(generators);

  SkeletonField field(pw, ph, 0.0);
  for (int y = 1; y < ph - 1; ++y) {
    for (int x = 1; x < pw - 1; ++x) {
      if (!padded(x, y)) continue;
      const int component = comps.labels(x, y);
      double value = 0.0;

      // A contour pixel met more than once by the contour walk (one pixel
      // wide parts) separates its own labels.
      const int n_own = contours.count(x, y);
      for (int i = 0; i < n_own; ++i) {
        for (int j = i + 1; j < n_own; ++j) {
          value = std::max(value, scale(contours.labels(x, y)[i],
                                        contours.labels(x, y)[j], component));
        }
      }

      const int a = ft.nearest(x, y);
      if (comps.labels[a] == component) {
        for (const Vec step : {Vec{1, 0}, Vec{0, 1}}) {
          const int qx = x + step.x;
          const int qy = y + step.y;
          if (!padded(qx, qy)) continue;
          const int b = ft.nearest(qx, qy);
          if (b == a || comps.labels[b] != component) continue;
          value = std::max(value, scale(contours.labels[a][0],
                                        contours.labels[b][0], component));
        }
      }
      field(x, y) = value;
    }
  }

  SkeletonField out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) out(x, y) = field(x + 1, y + 1);
  }
  return out;
}

}  // namespace sipkit
