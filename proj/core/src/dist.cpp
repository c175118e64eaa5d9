#include "sipkit/dist.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "sipkit/parallel.hpp"

namespace sipkit {
namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den) noexcept {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

bool has_background(const BinaryImage& mask) noexcept {
  return std::any_of(mask.samples().begin(), mask.samples().end(),
                     [](std::uint8_t v) { return v == 0; });
}

/// Shared engine. Column distances are capped at `cap`; any cap larger than
/// the image diagonal gives the unrestricted transform. When `nearest` is
/// non-null it receives the linear index of the minimizing background pixel.
SquaredDistanceImage transform(const BinaryImage& mask, std::int64_t cap,
                               Image<std::int32_t>* nearest) {
  const int w = mask.width();
  const int h = mask.height();

  // Pass 1: per column, distance to the nearest background row.
  Image<std::int64_t> g(w, h);
  Image<std::int32_t> source_row(nearest ? w : 1, nearest ? h : 1, -1);
  parallel_for(w, [&](int x) {
    g(x, 0) = mask(x, 0) ? cap : 0;
    if (nearest && !mask(x, 0)) source_row(x, 0) = 0;
    for (int y = 1; y < h; ++y) {
      if (!mask(x, y)) {
        g(x, y) = 0;
        if (nearest) source_row(x, y) = y;
      } else {
        g(x, y) = std::min(cap, g(x, y - 1) + 1);
        if (nearest) source_row(x, y) = source_row(x, y - 1);
      }
    }
    for (int y = h - 2; y >= 0; --y) {
      if (g(x, y + 1) + 1 < g(x, y)) {
        g(x, y) = g(x, y + 1) + 1;
        if (nearest) source_row(x, y) = source_row(x, y + 1);
      }
    }
  });

  // Pass 2: per row, lower envelope of f_i(u) = (u - i)^2 + g(i)^2.
  SquaredDistanceImage out(w, h);
  parallel_for(h, [&](int y) {
    const auto gy = g.row(y);
    auto f = [&](std::int64_t u, std::int64_t i) {
      return (u - i) * (u - i) + gy[i] * gy[i];
    };
    // First integer abscissa at which parabola u is at or below parabola i.
    auto sep = [&](std::int64_t i, std::int64_t u) {
      return floor_div(u * u - i * i + gy[u] * gy[u] - gy[i] * gy[i], 2 * (u - i));
    };
    std::vector<std::int64_t> s(w), t(w);
    int q = 0;
    s[0] = 0;
    t[0] = 0;
    for (int u = 1; u < w; ++u) {
      while (q >= 0 && f(t[q], s[q]) > f(t[q], u)) --q;
      if (q < 0) {
        q = 0;
        s[0] = u;
      } else {
        const std::int64_t start = 1 + sep(s[q], u);
        if (start < w) {
          ++q;
          s[q] = u;
          t[q] = start;
        }
      }
    }
    auto dst = out.row(y);
    for (int u = w - 1; u >= 0; --u) {
      dst[u] = f(u, s[q]);
      if (nearest) {
        const int col = static_cast<int>(s[q]);
        (*nearest)(u, y) = source_row(col, y) < 0
                               ? -1
                               : source_row(col, y) * w + col;
      }
      if (u == t[q]) --q;
    }
  });
  return out;
}

std::int64_t unbounded_cap(const BinaryImage& mask) noexcept {
  return static_cast<std::int64_t>(mask.width()) + mask.height();
}

}  // namespace

SquaredDistanceImage edt_squared(const BinaryImage& mask) {
  if (!has_background(mask)) {
    throw DomainError(
        "distance transform undefined: mask has no background pixel "
        "(infinite distance everywhere)");
  }
  return transform(mask, unbounded_cap(mask), nullptr);
}

DistanceImage edt(const BinaryImage& mask) {
  const auto sq = edt_squared(mask);
  DistanceImage out(mask.width(), mask.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::sqrt(static_cast<double>(sq[i]));
  }
  return out;
}

DistanceImage edt_limited(const BinaryImage& mask, double dmax) {
  if (!(dmax > 0.0) || std::isnan(dmax)) {
    throw DomainError("edt_limited: dmax must be positive, got " +
                      std::to_string(dmax));
  }
  // Columns farther than dmax only matter through values above dmax^2, so
  // capping them one past dmax keeps every in-range distance exact.
  const double diag = static_cast<double>(unbounded_cap(mask));
  const std::int64_t cap =
      dmax >= diag ? unbounded_cap(mask)
                   : static_cast<std::int64_t>(std::floor(dmax)) + 1;
  const auto sq = transform(mask, cap, nullptr);
  DistanceImage out(mask.width(), mask.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::min(std::sqrt(static_cast<double>(sq[i])), dmax);
  }
  return out;
}

FeatureTransform feature_transform(const BinaryImage& mask) {
  if (!has_background(mask)) {
    throw DomainError("feature transform undefined: mask has no background pixel");
  }
  Image<std::int32_t> nearest(mask.width(), mask.height(), -1);
  auto distance = transform(mask, unbounded_cap(mask), &nearest);
  return {std::move(distance), std::move(nearest)};
}

}  // namespace sipkit
