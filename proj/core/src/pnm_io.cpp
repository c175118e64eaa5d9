// Netpbm graymap/pixmap: P2 and P3 (ASCII), P5 and P6 (binary).

#include <cctype>
#include <string>

#include "formats.hpp"

namespace sipkit::detail {
namespace {

class Parser {
 public:
  explicit Parser(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t pos() const noexcept { return pos_; }
  void advance(std::size_t n) noexcept { pos_ += n; }

  [[noreturn]] void fail(const std::string& what) const {
    throw CorruptFileError("pnm: " + what, pos_);
  }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') {
          ++pos_;
        }
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  unsigned long number() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size()) fail("unexpected end of file");
    if (!std::isdigit(bytes_[pos_])) fail("expected a decimal number");
    unsigned long v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_] - '0');
      if (v > 0xffffffffUL) fail("number too large");
      ++pos_;
    }
    return v;
  }

  // Exactly one whitespace byte separates the header from a binary raster.
  void single_space() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      fail("missing whitespace after header");
    }
    ++pos_;
  }

  unsigned binary_sample(bool wide) {
    const std::size_t n = wide ? 2 : 1;
    if (bytes_.size() - pos_ < n) fail("truncated raster");
    unsigned v = bytes_[pos_];
    if (wide) v = (v << 8) | bytes_[pos_ + 1];
    pos_ += n;
    return v;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void put16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

std::vector<std::uint8_t> header(char kind, int w, int h) {
  const std::string text = std::string("P") + kind + "\n" + std::to_string(w) +
                           " " + std::to_string(h) + "\n65535\n";
  return {text.begin(), text.end()};
}

}  // namespace

DecodedImage decode_pnm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') {
    throw UnsupportedFormatError("not a netpbm file");
  }
  const char kind = static_cast<char>(bytes[1]);
  if (kind != '2' && kind != '3' && kind != '5' && kind != '6') {
    throw UnsupportedFormatError(std::string("unsupported netpbm variant P") + kind);
  }
  Parser p(bytes);
  p.advance(2);

  const auto w = p.number();
  const auto h = p.number();
  const auto maxval = p.number();
  if (w < 1 || h < 1 || w > (1u << 20) || h > (1u << 20)) p.fail("bad dimensions");
  if (maxval < 1 || maxval > 65535) p.fail("maxval must be in 1..65535");

  const bool ascii = kind == '2' || kind == '3';
  const bool color = kind == '3' || kind == '6';
  const bool wide = maxval > 255;
  if (!ascii) p.single_space();

  auto next = [&]() -> std::uint16_t {
    const unsigned long v = ascii ? p.number() : p.binary_sample(wide);
    if (v > maxval) p.fail("sample exceeds maxval");
    // Rounded rescale to 16 bits; maxval 255 reduces to v * 257.
    return static_cast<std::uint16_t>((v * 65535UL + maxval / 2) / maxval);
  };

  const int iw = static_cast<int>(w);
  const int ih = static_cast<int>(h);
  if (!color) {
    Gray16Image img(iw, ih);
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = next();
    return img;
  }
  TruecolorImage img(iw, ih);
  for (std::size_t i = 0; i < img.red.size(); ++i) {
    img.red[i] = next();
    img.green[i] = next();
    img.blue[i] = next();
  }
  return img;
}

std::vector<std::uint8_t> encode_pgm(const Gray16Image& img) {
  auto out = header('5', img.width(), img.height());
  out.reserve(out.size() + img.size() * 2);
  for (std::uint16_t v : img.samples()) put16(out, v);
  return out;
}

std::vector<std::uint8_t> encode_ppm(const TruecolorImage& img) {
  auto out = header('6', img.width(), img.height());
  out.reserve(out.size() + img.red.size() * 6);
  for (std::size_t i = 0; i < img.red.size(); ++i) {
    put16(out, img.red[i]);
    put16(out, img.green[i]);
    put16(out, img.blue[i]);
  }
  return out;
}

}  // namespace sipkit::detail
