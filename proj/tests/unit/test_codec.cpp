#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "sipkit/codec.hpp"
#include "sipkit/core.hpp"

namespace {

using namespace sipkit;
namespace fs = std::filesystem;

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

Gray16Image random_gray16(int w, int h, std::mt19937& rng) {
  Gray16Image img(w, h);
  for (auto& v : img.samples()) v = static_cast<std::uint16_t>(rng() >> 16);
  return img;
}

TEST(Detect, MagicBytes) {
  const std::uint8_t png[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  EXPECT_EQ(detect_format(png), FileFormat::png);
  for (const char* magic : {"P2\n", "P3\n", "P5\n", "P6\n"}) {
    const auto b = bytes_of(magic);
    EXPECT_EQ(detect_format(b), FileFormat::pnm) << magic;
  }
  const auto gif = bytes_of("GIF89a");
  EXPECT_EQ(detect_format(gif), FileFormat::unknown);
  EXPECT_EQ(detect_format({}), FileFormat::unknown);
}

TEST(Decode, AsciiPgmScalesTo16Bit) {
  const auto img = decode_image(bytes_of("P2 2 2 255\n0 85 170 255\n"));
  const auto& g = std::get<Gray16Image>(img);
  EXPECT_EQ(g, Gray16Image(2, 2, std::vector<std::uint16_t>{0, 21845, 43690, 65535}));
}

TEST(Decode, AsciiPgmWithComments) {
  const auto img = decode_image(bytes_of("P2\n# comment\n3 1\n# more\n15\n0 5 15\n"));
  EXPECT_EQ(std::get<Gray16Image>(img),
            Gray16Image(3, 1, std::vector<std::uint16_t>{0, 21845, 65535}));
}

TEST(Decode, AsciiPpm) {
  const auto img = decode_image(bytes_of("P3 1 1 255 10 20 30"));
  const auto& t = std::get<TruecolorImage>(img);
  EXPECT_EQ(t.red[0], 10 * 257);
  EXPECT_EQ(t.green[0], 20 * 257);
  EXPECT_EQ(t.blue[0], 30 * 257);
}

TEST(Decode, UnsupportedFormat) {
  EXPECT_THROW(decode_image(bytes_of("GIF89a......")), UnsupportedFormatError);
}

TEST(Decode, TruncatedPnmReportsOffset) {
  const auto bytes = bytes_of("P5 4 4 255\n\x01\x02");
  try {
    decode_image(bytes);
    FAIL() << "expected CorruptFileError";
  } catch (const CorruptFileError& e) {
    EXPECT_LE(e.offset(), bytes.size());
  }
}

TEST(Decode, TruncatedPng) {
  const Gray16Image img(8, 8, 1000);
  auto png = encode_image(img, WriteFormat::png);
  png.resize(png.size() / 2);
  EXPECT_THROW(decode_image(png), CorruptFileError);
}

TEST(Roundtrip, Gray16ThroughPngAndPgm) {
  std::mt19937 rng(11);
  const Gray16Image img = random_gray16(17, 9, rng);
  for (auto fmt : {WriteFormat::png, WriteFormat::pgm}) {
    EXPECT_EQ(std::get<Gray16Image>(decode_image(encode_image(img, fmt))), img);
  }
}

TEST(Roundtrip, TruecolorConstantPng) {
  TruecolorImage t(5, 3);
  for (auto* plane : {&t.red, &t.green, &t.blue}) {
    const std::uint16_t v = plane == &t.red ? 10 : plane == &t.green ? 20 : 30;
    for (auto& s : plane->samples()) s = v;
  }
  const auto back = std::get<TruecolorImage>(decode_image(encode_image(t, WriteFormat::png)));
  EXPECT_EQ(back, t);
}

TEST(Indexed, MapIsNByThreeAndRoundTrips) {
  Image<std::uint32_t> index(4, 2);
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = static_cast<std::uint32_t>(i % 4) + 1;
  const ColorMap map = {{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}, {0.2, 0.4, 0.6}, {0.123456, 0.5, 0.9}};
  const IndexedImage ind(index, map);
  const auto back = std::get<IndexedImage>(decode_image(encode_image(ind, WriteFormat::png)));
  ASSERT_EQ(back.map.size(), 4u);
  EXPECT_EQ(back.map.front().size(), 3u);
  EXPECT_EQ(back.index, index);
  for (std::size_t k = 0; k < map.size(); ++k) {
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(back.map[k][c], map[k][c], 1.0 / 65535);
  }
}

TEST(Indexed, TooManyColorsRejected) {
  Image<std::uint32_t> index(300, 1);
  ColorMap map(300, {0.5, 0.5, 0.5});
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = static_cast<std::uint32_t>(i) + 1;
  EXPECT_THROW(encode_image(IndexedImage(index, map), WriteFormat::png), IoError);
}

TEST(Indexed, ExtremePaletteReadsAsZeroOne) {
  Image<std::uint32_t> index(3, 1, std::vector<std::uint32_t>{1, 2, 1});
  const IndexedImage ind(index, {{0, 0, 0}, {1, 1, 1}});
  const RealImage g = to_real_gray(decode_image(encode_image(ind, WriteFormat::png)));
  EXPECT_EQ(g, RealImage(3, 1, std::vector<double>{0, 1, 0}));
}

TEST(Conversion, GrayToPpmReplicates) {
  const Gray16Image g(2, 1, std::vector<std::uint16_t>{7, 9});
  const auto t = std::get<TruecolorImage>(decode_image(encode_image(g, WriteFormat::ppm)));
  EXPECT_EQ(t.red, g);
  EXPECT_EQ(t.green, g);
  EXPECT_EQ(t.blue, g);
}

TEST(Files, ReadWriteAndErrors) {
  const fs::path dir = fs::temp_directory_path() / "sipkit_codec_test";
  fs::create_directories(dir);
  const Gray16Image white(3, 3, 65535);
  write_image(white, dir / "white.png", format_for_path("white.png"));
  EXPECT_EQ(read_gray(dir / "white.png"), RealImage(3, 3, 1.0));

  EXPECT_THROW(read_image(dir / "missing.png"), FileNotFoundError);
  {
    std::ofstream(dir / "junk.png", std::ios::binary) << "not an image";
  }
  EXPECT_THROW(read_image(dir / "junk.png"), UnsupportedFormatError);
  EXPECT_THROW(format_for_path("x.tiff"), DomainError);
  EXPECT_EQ(format_for_path("X.PGM"), WriteFormat::pgm);
  fs::remove_all(dir);
}

}  // namespace
