#pragma once

// Backend entry points behind codec.hpp.

#include <cstdint>
#include <span>
#include <vector>

#include "sipkit/codec.hpp"

namespace sipkit::detail {

DecodedImage decode_png(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_png(const Gray16Image& img);
std::vector<std::uint8_t> encode_png(const TruecolorImage& img);
std::vector<std::uint8_t> encode_png(const IndexedImage& img);

DecodedImage decode_pnm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_pgm(const Gray16Image& img);
std::vector<std::uint8_t> encode_ppm(const TruecolorImage& img);

}  // namespace sipkit::detail
