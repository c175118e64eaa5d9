#include "sipkit/codec.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>

#include "formats.hpp"
#include "sipkit/core.hpp"

namespace sipkit {
namespace {

constexpr std::uint8_t kPngMagic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

std::array<std::uint16_t, 3> map_entry16(const ColorMapEntry& c) {
  return {static_cast<std::uint16_t>(std::lround(c[0] * 65535.0)),
          static_cast<std::uint16_t>(std::lround(c[1] * 65535.0)),
          static_cast<std::uint16_t>(std::lround(c[2] * 65535.0))};
}

TruecolorImage expand(const IndexedImage& img) {
  TruecolorImage out(img.width(), img.height());
  for (std::size_t i = 0; i < img.index.size(); ++i) {
    const auto c = map_entry16(img.map[img.index[i] - 1]);
    out.red[i] = c[0];
    out.green[i] = c[1];
    out.blue[i] = c[2];
  }
  return out;
}

TruecolorImage as_truecolor(const DecodedImage& img) {
  if (const auto* t = std::get_if<TruecolorImage>(&img)) return *t;
  if (const auto* g = std::get_if<Gray16Image>(&img)) return {*g, *g, *g};
  return expand(std::get<IndexedImage>(img));
}

std::vector<std::uint8_t> slurp(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw FileNotFoundError(path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return bytes;
}

}  // namespace

FileFormat detect_format(std::span<const std::uint8_t> head) noexcept {
  if (head.size() >= 8 && std::equal(kPngMagic, kPngMagic + 8, head.begin())) {
    return FileFormat::png;
  }
  if (head.size() >= 2 && head[0] == 'P' &&
      (head[1] == '2' || head[1] == '3' || head[1] == '5' || head[1] == '6')) {
    return FileFormat::pnm;
  }
  return FileFormat::unknown;
}

DecodedImage decode_image(std::span<const std::uint8_t> bytes) {
  switch (detect_format(bytes.first(std::min<std::size_t>(bytes.size(), 8)))) {
    case FileFormat::png:
      return detail::decode_png(bytes);
    case FileFormat::pnm:
      return detail::decode_pnm(bytes);
    case FileFormat::unknown:
      break;
  }
  throw UnsupportedFormatError("unrecognized image format (expected PNG or PNM)");
}

std::vector<std::uint8_t> encode_image(const DecodedImage& img,
                                       WriteFormat format) {
  switch (format) {
    case WriteFormat::png:
      return std::visit([](const auto& v) { return detail::encode_png(v); }, img);
    case WriteFormat::pgm:
      return detail::encode_pgm(as_gray16(img));
    case WriteFormat::ppm:
      return detail::encode_ppm(as_truecolor(img));
  }
  throw DomainError("unknown output format");
}

DecodedImage read_image(const std::filesystem::path& path) {
  const auto bytes = slurp(path);
  try {
    return decode_image(bytes);
  } catch (const UnsupportedFormatError& e) {
    throw UnsupportedFormatError(path.string() + ": " + e.what());
  } catch (const CorruptFileError& e) {
    throw CorruptFileError(path.string() + ": corrupt file", e.offset());
  }
}

void write_image(const DecodedImage& img, const std::filesystem::path& path,
                 WriteFormat format) {
  const auto bytes = encode_image(img, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

Gray16Image as_gray16(const DecodedImage& img) {
  if (const auto* g = std::get_if<Gray16Image>(&img)) return *g;
  if (const auto* t = std::get_if<TruecolorImage>(&img)) return to_gray(*t);
  const auto& ind = std::get<IndexedImage>(img);
  std::vector<std::uint16_t> levels(ind.map.size());
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const auto c = map_entry16(ind.map[k]);
    levels[k] = luma16(c[0], c[1], c[2]);
  }
  Gray16Image out(ind.width(), ind.height());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = levels[ind.index[i] - 1];
  return out;
}

RealImage to_real_gray(const DecodedImage& img) { return to_real(as_gray16(img)); }

RealImage read_gray(const std::filesystem::path& path) {
  return to_real_gray(read_image(path));
}

WriteFormat format_for_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".png") return WriteFormat::png;
  if (ext == ".pgm") return WriteFormat::pgm;
  if (ext == ".ppm") return WriteFormat::ppm;
  throw DomainError("cannot infer output format from '" + path.string() +
                    "' (use .png, .pgm or .ppm)");
}

}  // namespace sipkit
