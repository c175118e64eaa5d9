// Writes the bundled synthetic fixtures as 16-bit PNGs into a directory.

#include <filesystem>
#include <iostream>

#include "sipkit/codec.hpp"
#include "sipkit/core.hpp"
#include "sipkit/error.hpp"
#include "sipkit/fixtures.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: sipkit-fixtures OUTDIR\n";
    return 1;
  }
  namespace fs = std::filesystem;
  namespace fx = sipkit::fixtures;
  const fs::path dir = argv[1];
  try {
    fs::create_directories(dir);
    const auto put = [&](const char* name, const sipkit::RealImage& img) {
      sipkit::write_image(sipkit::to_gray16(img), dir / name, sipkit::WriteFormat::png);
    };
    put("glyph_a.png", fx::glyph_a());
    put("two_cells.png", fx::two_cells());
    put("single_cell.png", fx::single_cell());
    put("scene.png", fx::scene());
  } catch (const std::exception& e) {
    std::cerr << "sipkit-fixtures: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
