// sipkit command-line front end. Each subcommand reads its input, calls one
// library operation and writes the result; format follows the output
// extension (.png, .pgm, .ppm).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sipkit/codec.hpp"
#include "sipkit/core.hpp"
#include "sipkit/dist.hpp"
#include "sipkit/error.hpp"
#include "sipkit/filter.hpp"
#include "sipkit/geom.hpp"
#include "sipkit/morph.hpp"
#include "sipkit/pipeline.hpp"
#include "sipkit/seg.hpp"

namespace {

using namespace sipkit;

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitDomain = 3;

void save(const DecodedImage& img, const std::string& path) {
  write_image(img, path, format_for_path(path));
}

BinaryImage read_mask(const std::string& path) { return threshold(read_gray(path), 0.5); }

Gray16Image clamp16(const SquaredDistanceImage& d2) {
  Gray16Image out(d2.width(), d2.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint16_t>(std::min<std::int64_t>(d2[i], 65535));
  }
  return out;
}

Gray16Image round16(const DistanceImage& d) {
  Gray16Image out(d.width(), d.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint16_t>(std::min(std::round(d[i]), 65535.0));
  }
  return out;
}

Gray16Image labels16(const LabelImage& labels) {
  Gray16Image out(labels.width(), labels.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint16_t>(std::clamp(labels[i], 0, 65535));
  }
  return out;
}

LabelImage read_labels(const std::string& path) {
  const Gray16Image raw = as_gray16(read_image(path));
  LabelImage out(raw.width(), raw.height());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = raw[i];
  return out;
}

void print_report(const PipelineReport& report, bool timing) {
  std::cout << report.to_text(timing);
}

struct Args {
  std::string input;
  std::string output;
  std::string outdir;
  double sigma = 2.0;
  double threshold = 0.5;
  double skel_threshold = 0.5;
  double spur_threshold = 0.1;
  int radius = 1;
  double disc_radius = 1.0;
  double degrees = 0.0;
  double factor = 1.0;
  double dmax = -1.0;
  bool squared = false;
  bool timing = false;
  std::string interp = "bilinear";
  std::vector<double> matrix;
  int width = 0;
  int height = 0;
};

Interpolation parse_interp(const std::string& name) {
  return name == "nearest" ? Interpolation::nearest : Interpolation::bilinear;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sipkit: scientific image processing toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sipkit 0.1.0");

  Args a;
  std::function<void()> action;

  auto io = [&](CLI::App* sub) {
    sub->add_option("input", a.input, "input image")->required();
    sub->add_option("output", a.output, "output image (.png, .pgm, .ppm)")->required();
  };
  auto interp = [&](CLI::App* sub) {
    sub->add_option("--interp", a.interp, "nearest or bilinear")
        ->check(CLI::IsMember({"nearest", "bilinear"}));
  };
  auto command = [&](const char* name, const char* help, std::function<void()> body) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, body] { action = body; });
    return sub;
  };

  io(command("to-gray", "convert to 16-bit grayscale",
             [&] { save(as_gray16(read_image(a.input)), a.output); }));

  auto* thr = command("threshold", "binarize: 1 where value >= threshold", [&] {
    save(mask_to_gray16(threshold(read_gray(a.input), a.threshold)), a.output);
  });
  io(thr);
  thr->add_option("--threshold", a.threshold, "level in [0, 1]")->required();

  io(command("invert", "1 - x", [&] {
    save(to_gray16(invert(read_gray(a.input))), a.output);
  }));

  io(command("equalize", "histogram equalization",
             [&] { save(equalize(as_gray16(read_image(a.input))), a.output); }));

  auto* blur = command("blur", "Gaussian blur", [&] {
    save(to_gray16(gaussian_blur(read_gray(a.input), a.sigma)), a.output);
  });
  io(blur);
  blur->add_option("--sigma", a.sigma, "standard deviation in pixels")->required();

  auto* median = command("median", "median filter over a (2r+1)^2 window", [&] {
    save(to_gray16(median_filter(read_gray(a.input), a.radius)), a.output);
  });
  io(median);
  median->add_option("--radius", a.radius, "window radius")->required();

  auto* edge = command("edge", "Sobel edge map", [&] {
    save(mask_to_gray16(sobel_edges(read_gray(a.input), a.threshold)), a.output);
  });
  io(edge);
  edge->add_option("--threshold", a.threshold, "gradient magnitude threshold")->required();

  auto* rot = command("rotate", "rotate clockwise by degrees onto an enclosing canvas", [&] {
    save(to_gray16(rotate(read_gray(a.input), a.degrees, parse_interp(a.interp))),
         a.output);
  });
  io(rot);
  interp(rot);
  rot->add_option("--degrees", a.degrees, "angle")->required();

  auto* zm = command("zoom", "resample by a scale factor", [&] {
    save(to_gray16(zoom(read_gray(a.input), a.factor, parse_interp(a.interp))), a.output);
  });
  io(zm);
  interp(zm);
  zm->add_option("--factor", a.factor, "scale factor > 0")->required();

  auto* aff = command("affine", "inverse-mapped affine warp", [&] {
    const AffineMap m{a.matrix[0], a.matrix[1], a.matrix[2],
                      a.matrix[3], a.matrix[4], a.matrix[5]};
    const RealImage img = read_gray(a.input);
    const Size out{a.width > 0 ? a.width : img.width(),
                   a.height > 0 ? a.height : img.height()};
    save(to_gray16(affine_warp(img, m, out, parse_interp(a.interp))), a.output);
  });
  io(aff);
  interp(aff);
  aff->add_option("--matrix", a.matrix,
                  "output-to-input map a11,a12,tx,a21,a22,ty")
      ->required()
      ->delimiter(',')
      ->expected(6);
  aff->add_option("--width", a.width, "output width (default: input width)");
  aff->add_option("--height", a.height, "output height (default: input height)");

  auto* bwd = command("bwdist", "Euclidean distance to the nearest background pixel", [&] {
    const BinaryImage mask = read_mask(a.input);
    if (a.squared) {
      save(clamp16(edt_squared(mask)), a.output);
    } else if (a.dmax >= 0.0) {
      save(round16(edt_limited(mask, a.dmax)), a.output);
    } else {
      save(round16(edt(mask)), a.output);
    }
  });
  io(bwd);
  auto* squared = bwd->add_flag("--squared", a.squared,
                                "write exact squared distances, clamped at 65535");
  bwd->add_option("--dmax", a.dmax, "saturate distances at dmax")->excludes(squared);

  auto* dil = command("dilate", "binary dilation by a Euclidean disc", [&] {
    save(mask_to_gray16(dilate_disc(read_mask(a.input), a.disc_radius)), a.output);
  });
  io(dil);
  dil->add_option("--radius", a.disc_radius, "disc radius")->required();

  auto* ero = command("erode", "binary erosion by a Euclidean disc", [&] {
    save(mask_to_gray16(erode_disc(read_mask(a.input), a.disc_radius)), a.output);
  });
  io(ero);
  ero->add_option("--radius", a.disc_radius, "disc radius")->required();

  io(command("skel", "skeleton significance field in [0, 1]", [&] {
    save(to_gray16(skeleton(read_mask(a.input))), a.output);
  }));

  io(command("watershed", "watershed labels as raw 16-bit values", [&] {
    save(labels16(watershed(read_gray(a.input))), a.output);
  }));

  command("count", "number of objects in a raw label image (max label - 1)", [&] {
    std::cout << count_objects(read_labels(a.input)) << '\n';
  })->add_option("input", a.input, "label image")->required();

  OcrParams ocr;
  auto* pocr = command("pipeline-ocr", "blur, binarize, skeletonize and prune a glyph",
                       [&] { print_report(pipeline_ocr(a.input, a.outdir, ocr), a.timing); });
  pocr->add_option("input", a.input, "input image")->required();
  pocr->add_option("--outdir", a.outdir, "stage output directory")->required();
  pocr->add_option("--sigma", ocr.sigma, "blur sigma")->capture_default_str();
  pocr->add_option("--threshold", ocr.bin_threshold, "binarization level")
      ->capture_default_str();
  pocr->add_option("--skel-threshold", ocr.skel_threshold, "final pruning level")
      ->capture_default_str();
  pocr->add_option("--spur-threshold", ocr.spur_threshold, "fine pruning level")
      ->capture_default_str();
  pocr->add_flag("--timing", a.timing, "print per-stage wall time");

  CellsParams cells;
  auto* pcells = command("pipeline-cells", "segment and count touching cells", [&] {
    print_report(pipeline_cells(a.input, a.outdir, cells), a.timing);
  });
  pcells->add_option("input", a.input, "input image")->required();
  pcells->add_option("--outdir", a.outdir, "stage output directory")->required();
  pcells->add_option("--threshold", cells.bin_threshold, "binarization level")
      ->capture_default_str();
  pcells->add_option("--radius", cells.median_radius, "median radius")
      ->capture_default_str();
  pcells->add_flag("--timing", a.timing, "print per-stage wall time");

  auto* fftd = command("demo-fft", "three-cosine FFT demo", [&] {
    print_report(demo_fft(a.outdir), a.timing);
  });
  fftd->add_option("--outdir", a.outdir, "output directory")->required();
  fftd->add_flag("--timing", a.timing, "print per-stage wall time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    action();
  } catch (const IoError& e) {
    std::cerr << "sipkit: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    std::cerr << "sipkit: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "sipkit: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
