#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <variant>
#include <vector>

#include "sipkit/image.hpp"

namespace sipkit {

/// Exactly one of the three image models. The variant index is the tag.
using DecodedImage = std::variant<Gray16Image, TruecolorImage, IndexedImage>;

enum class FileFormat { unknown, png, pnm };
enum class WriteFormat { png, pgm, ppm };

/// Classifies by magic bytes only; looks at no more than the first 8 bytes.
FileFormat detect_format(std::span<const std::uint8_t> head) noexcept;

/// Decodes PNG or PNM from memory. 8-bit (and other sub-16-bit) samples are
/// promoted to 16 bits, so 255 becomes 65535.
DecodedImage decode_image(std::span<const std::uint8_t> bytes);

/// Encodes `img`. PNG output is 16-bit for gray and truecolor payloads and
/// paletted for indexed payloads (at most 256 colors). PGM/PPM output is
/// binary with maxval 65535. A payload whose model differs from the target
/// format is converted: gray is replicated into RGB, truecolor and indexed
/// payloads go through luma for PGM, indexed payloads are expanded for PPM.
std::vector<std::uint8_t> encode_image(const DecodedImage& img, WriteFormat format);

DecodedImage read_image(const std::filesystem::path& path);
void write_image(const DecodedImage& img, const std::filesystem::path& path,
                 WriteFormat format);

/// Gray payloads pass through; color payloads are reduced with luma16.
Gray16Image as_gray16(const DecodedImage& img);

/// Any model converted to grayscale and scaled into [0, 1].
RealImage read_gray(const std::filesystem::path& path);
RealImage to_real_gray(const DecodedImage& img);

/// Maps ".png", ".pgm", ".ppm" (case-insensitive); throws DomainError
/// otherwise.
WriteFormat format_for_path(const std::filesystem::path& path);

}  // namespace sipkit
