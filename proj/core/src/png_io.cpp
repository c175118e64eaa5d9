// PNG support on top of libpng.
//
// libpng reports errors with longjmp. Every function below that installs a
// setjmp point keeps only trivially destructible locals, and all buffers are
// owned by the calling C++ frame, so a longjmp never skips a destructor.

#include <png.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <csetjmp>
#include <cstring>
#include <string>

#include "formats.hpp"

namespace sipkit::detail {
namespace {

// Private ancillary chunk carrying the colormap at 16 bits per channel, so
// colormaps survive a write/read cycle at better than PLTE's 8-bit precision.
constexpr png_byte kMapChunk[5] = {'s', 'm', 'A', 'P', '\0'};

struct Session {
  const std::uint8_t* data = nullptr;
  std::size_t size = 0;
  std::size_t pos = 0;
  std::vector<std::uint8_t>* sink = nullptr;
  char message[256] = {};
};

void on_error(png_structp png, png_const_charp msg) {
  auto* s = static_cast<Session*>(png_get_error_ptr(png));
  std::snprintf(s->message, sizeof s->message, "%s", msg);
  png_longjmp(png, 1);
}

void on_warning(png_structp, png_const_charp) {}

void read_bytes(png_structp png, png_bytep out, png_size_t n) {
  auto* s = static_cast<Session*>(png_get_io_ptr(png));
  if (n > s->size - s->pos) {
    s->pos = s->size;
    png_error(png, "unexpected end of file");
  }
  std::memcpy(out, s->data + s->pos, n);
  s->pos += n;
}

void write_bytes(png_structp png, png_bytep in, png_size_t n) {
  auto* s = static_cast<Session*>(png_get_io_ptr(png));
  s->sink->insert(s->sink->end(), in, in + n);
}

void flush_bytes(png_structp) {}

struct Header {
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int bit_depth = 0;      // after transforms
  int color_type = 0;     // before alpha stripping
  int channels = 0;       // after transforms
  png_size_t rowbytes = 0;
  int palette_size = 0;
  std::array<png_color, 256> palette{};
  std::size_t map_chunk_size = 0;
  std::array<png_byte, 256 * 6> map_chunk{};
};

class Reader {
 public:
  explicit Reader(Session* session) : session_(session) {
    png_ = png_create_read_struct(PNG_LIBPNG_VER_STRING, session, on_error,
                                  on_warning);
    if (png_) info_ = png_create_info_struct(png_);
  }
  ~Reader() { png_destroy_read_struct(&png_, &info_, nullptr); }
  Reader(const Reader&) = delete;
  Reader& operator=(const Reader&) = delete;

  bool ok() const { return png_ && info_; }

  bool read_header(Header* h) {
    if (setjmp(png_jmpbuf(png_))) return false;
    png_set_read_fn(png_, session_, read_bytes);
    png_set_keep_unknown_chunks(png_, PNG_HANDLE_CHUNK_ALWAYS, kMapChunk, 1);
    png_set_user_limits(png_, 1u << 20, 1u << 20);
    png_read_info(png_, info_);

    h->color_type = png_get_color_type(png_, info_);
    const int depth = png_get_bit_depth(png_, info_);
    if (h->color_type == PNG_COLOR_TYPE_PALETTE) {
      png_set_packing(png_);
      png_colorp colors = nullptr;
      int n = 0;
      if (png_get_PLTE(png_, info_, &colors, &n) && n > 0) {
        h->palette_size = std::min(n, 256);
        std::copy(colors, colors + h->palette_size, h->palette.begin());
      }
      png_unknown_chunkp chunks = nullptr;
      const int count = png_get_unknown_chunks(png_, info_, &chunks);
      for (int i = 0; i < count; ++i) {
        if (std::memcmp(chunks[i].name, kMapChunk, 4) == 0 &&
            chunks[i].size <= h->map_chunk.size()) {
          h->map_chunk_size = chunks[i].size;
          std::memcpy(h->map_chunk.data(), chunks[i].data, chunks[i].size);
        }
      }
    } else if (depth < 8) {
      png_set_expand_gray_1_2_4_to_8(png_);
    }
    if (h->color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png_);
    png_set_interlace_handling(png_);
    png_read_update_info(png_, info_);

    h->width = png_get_image_width(png_, info_);
    h->height = png_get_image_height(png_, info_);
    h->bit_depth = png_get_bit_depth(png_, info_);
    h->channels = png_get_channels(png_, info_);
    h->rowbytes = png_get_rowbytes(png_, info_);
    return true;
  }

  bool read_rows(png_bytepp rows) {
    if (setjmp(png_jmpbuf(png_))) return false;
    png_read_image(png_, rows);
    png_read_end(png_, nullptr);
    return true;
  }

 private:
  Session* session_;
  png_structp png_ = nullptr;
  png_infop info_ = nullptr;
};

struct Layout {
  png_uint_32 width;
  png_uint_32 height;
  int bit_depth;
  int color_type;
  int palette_size = 0;
  const png_color* palette = nullptr;
  const png_byte* map_chunk = nullptr;
  std::size_t map_chunk_size = 0;
};

class Writer {
 public:
  explicit Writer(Session* session) : session_(session) {
    png_ = png_create_write_struct(PNG_LIBPNG_VER_STRING, session, on_error,
                                   on_warning);
    if (png_) info_ = png_create_info_struct(png_);
  }
  ~Writer() { png_destroy_write_struct(&png_, &info_); }
  Writer(const Writer&) = delete;
  Writer& operator=(const Writer&) = delete;

  bool ok() const { return png_ && info_; }

  bool write(const Layout* layout, png_bytepp rows) {
    if (setjmp(png_jmpbuf(png_))) return false;
    png_set_write_fn(png_, session_, write_bytes, flush_bytes);
    png_set_IHDR(png_, info_, layout->width, layout->height,
                 layout->bit_depth, layout->color_type, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    if (layout->palette_size > 0) {
      png_set_PLTE(png_, info_, layout->palette, layout->palette_size);
    }
    if (layout->map_chunk_size > 0) {
      png_set_keep_unknown_chunks(png_, PNG_HANDLE_CHUNK_ALWAYS, kMapChunk, 1);
      png_unknown_chunk chunk;
      std::memcpy(chunk.name, kMapChunk, 5);
      chunk.data = const_cast<png_bytep>(layout->map_chunk);
      chunk.size = layout->map_chunk_size;
      chunk.location = PNG_HAVE_PLTE;
      png_set_unknown_chunks(png_, info_, &chunk, 1);
    }
    png_write_info(png_, info_);
    png_write_image(png_, rows);
    png_write_end(png_, info_);
    return true;
  }

 private:
  Session* session_;
  png_structp png_ = nullptr;
  png_infop info_ = nullptr;
};

std::uint16_t sample_at(const std::uint8_t* row, std::size_t i, int depth) {
  if (depth == 16) {
    return static_cast<std::uint16_t>((row[2 * i] << 8) | row[2 * i + 1]);
  }
  return static_cast<std::uint16_t>(row[i] * 257u);
}

void put16(std::uint8_t* row, std::size_t i, std::uint16_t v) {
  row[2 * i] = static_cast<std::uint8_t>(v >> 8);
  row[2 * i + 1] = static_cast<std::uint8_t>(v & 0xff);
}

std::vector<std::uint8_t> write_png(const Layout& layout,
                                    std::vector<std::uint8_t>& raster,
                                    std::size_t rowbytes) {
  std::vector<png_bytep> rows(layout.height);
  for (png_uint_32 y = 0; y < layout.height; ++y) {
    rows[y] = raster.data() + y * rowbytes;
  }
  std::vector<std::uint8_t> out;
  Session session;
  session.sink = &out;
  Writer writer(&session);
  if (!writer.ok()) throw IoError("png: cannot allocate encoder");
  if (!writer.write(&layout, rows.data())) {
    throw IoError(std::string("png encode failed: ") + session.message);
  }
  return out;
}

}  // namespace

DecodedImage decode_png(std::span<const std::uint8_t> bytes) {
  Session session;
  session.data = bytes.data();
  session.size = bytes.size();
  Reader reader(&session);
  if (!reader.ok()) throw IoError("png: cannot allocate decoder");

  Header h;
  if (!reader.read_header(&h)) {
    throw CorruptFileError(std::string("png: ") + session.message, session.pos);
  }
  if (h.width < 1 || h.height < 1 || h.width > (1u << 20) ||
      h.height > (1u << 20)) {
    throw CorruptFileError("png: bad dimensions", session.pos);
  }

  std::vector<std::uint8_t> raster(h.rowbytes * h.height);
  std::vector<png_bytep> rows(h.height);
  for (png_uint_32 y = 0; y < h.height; ++y) {
    rows[y] = raster.data() + y * h.rowbytes;
  }
  if (!reader.read_rows(rows.data())) {
    throw CorruptFileError(std::string("png: ") + session.message, session.pos);
  }

  const int w = static_cast<int>(h.width);
  const int ht = static_cast<int>(h.height);

  if (h.color_type == PNG_COLOR_TYPE_PALETTE) {
    if (h.palette_size == 0) {
      throw CorruptFileError("png: paletted image without PLTE", session.pos);
    }
    ColorMap map(h.palette_size);
    const bool wide = h.map_chunk_size == static_cast<std::size_t>(h.palette_size) * 6;
    for (int i = 0; i < h.palette_size; ++i) {
      if (wide) {
        for (int c = 0; c < 3; ++c) {
          const auto* p = &h.map_chunk[6 * i + 2 * c];
          map[i][c] = ((p[0] << 8) | p[1]) / 65535.0;
        }
      } else {
        map[i] = {h.palette[i].red / 255.0, h.palette[i].green / 255.0,
                  h.palette[i].blue / 255.0};
      }
    }
    Image<std::uint32_t> index(w, ht);
    for (int y = 0; y < ht; ++y) {
      for (int x = 0; x < w; ++x) {
        const std::uint32_t k = rows[y][x];
        if (k >= map.size()) {
          throw CorruptFileError("png: palette index out of range", session.pos);
        }
        index(x, y) = k + 1;
      }
    }
    return IndexedImage(std::move(index), std::move(map));
  }

  if (h.channels == 1) {
    Gray16Image img(w, ht);
    for (int y = 0; y < ht; ++y) {
      for (int x = 0; x < w; ++x) img(x, y) = sample_at(rows[y], x, h.bit_depth);
    }
    return img;
  }

  TruecolorImage img(w, ht);
  for (int y = 0; y < ht; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = static_cast<std::size_t>(x) * 3;
      img.red(x, y) = sample_at(rows[y], i, h.bit_depth);
      img.green(x, y) = sample_at(rows[y], i + 1, h.bit_depth);
      img.blue(x, y) = sample_at(rows[y], i + 2, h.bit_depth);
    }
  }
  return img;
}

std::vector<std::uint8_t> encode_png(const Gray16Image& img) {
  const std::size_t rowbytes = static_cast<std::size_t>(img.width()) * 2;
  std::vector<std::uint8_t> raster(rowbytes * img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      put16(raster.data() + y * rowbytes, x, img(x, y));
    }
  }
  Layout layout{static_cast<png_uint_32>(img.width()),
                static_cast<png_uint_32>(img.height()), 16, PNG_COLOR_TYPE_GRAY};
  return write_png(layout, raster, rowbytes);
}

std::vector<std::uint8_t> encode_png(const TruecolorImage& img) {
  const std::size_t rowbytes = static_cast<std::size_t>(img.width()) * 6;
  std::vector<std::uint8_t> raster(rowbytes * img.height());
  for (int y = 0; y < img.height(); ++y) {
    auto* row = raster.data() + y * rowbytes;
    for (int x = 0; x < img.width(); ++x) {
      put16(row, 3 * x, img.red(x, y));
      put16(row, 3 * x + 1, img.green(x, y));
      put16(row, 3 * x + 2, img.blue(x, y));
    }
  }
  Layout layout{static_cast<png_uint_32>(img.width()),
                static_cast<png_uint_32>(img.height()), 16, PNG_COLOR_TYPE_RGB};
  return write_png(layout, raster, rowbytes);
}

std::vector<std::uint8_t> encode_png(const IndexedImage& img) {
  if (img.map.size() > 256) {
    throw IoError("png: paletted output supports at most 256 colors, got " +
                  std::to_string(img.map.size()));
  }
  std::array<png_color, 256> palette{};
  std::vector<png_byte> wide(img.map.size() * 6);
  for (std::size_t i = 0; i < img.map.size(); ++i) {
    std::array<std::uint16_t, 3> c16{};
    for (int c = 0; c < 3; ++c) {
      c16[c] = static_cast<std::uint16_t>(std::lround(img.map[i][c] * 65535.0));
      put16(wide.data() + 6 * i, c, c16[c]);
    }
    // Nearest 8-bit value for viewers that ignore the private chunk.
    palette[i] = {static_cast<png_byte>((c16[0] + 128u) / 257u),
                  static_cast<png_byte>((c16[1] + 128u) / 257u),
                  static_cast<png_byte>((c16[2] + 128u) / 257u)};
  }

  const std::size_t rowbytes = static_cast<std::size_t>(img.width());
  std::vector<std::uint8_t> raster(rowbytes * img.height());
  for (std::size_t i = 0; i < raster.size(); ++i) {
    raster[i] = static_cast<std::uint8_t>(img.index[i] - 1);
  }
  Layout layout{static_cast<png_uint_32>(img.width()),
                static_cast<png_uint_32>(img.height()),
                8,
                PNG_COLOR_TYPE_PALETTE,
                static_cast<int>(img.map.size()),
                palette.data(),
                wide.data(),
                wide.size()};
  return write_png(layout, raster, rowbytes);
}

}  // namespace sipkit::detail
