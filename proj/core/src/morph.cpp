#include "sipkit/morph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sipkit/core.hpp"
#include "sipkit/dist.hpp"

namespace sipkit {

BinaryImage dilate_disc(const BinaryImage& mask, double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("disc radius must be >= 0, got " + std::to_string(r));
  }
  BinaryImage out(mask.width(), mask.height(), 0);
  const bool empty = std::none_of(mask.samples().begin(), mask.samples().end(),
                                  [](std::uint8_t v) { return v != 0; });
  if (empty) return out;

  const auto d2 = edt_squared(invert(mask));
  const double r2 = r * r;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<double>(d2[i]) <= r2 ? 1 : 0;
  }
  return out;
}

BinaryImage erode_disc(const BinaryImage& mask, double r) {
  return invert(dilate_disc(invert(mask), r));
}

}  // namespace sipkit
