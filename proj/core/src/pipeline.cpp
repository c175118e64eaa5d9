#include "sipkit/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sipkit/codec.hpp"
#include "sipkit/core.hpp"
#include "sipkit/filter.hpp"
#include "sipkit/seg.hpp"
#include "sipkit/topology.hpp"

namespace sipkit {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

class StageWriter {
 public:
  StageWriter(fs::path outdir, PipelineReport& report)
      : outdir_(std::move(outdir)), report_(report) {
    std::error_code ec;
    fs::create_directories(outdir_, ec);
    if (ec) throw IoError("cannot create output directory " + outdir_.string());
  }

  void image(const std::string& name, const std::string& file,
             const DecodedImage& img, Clock::time_point started) {
    const double ms = elapsed_ms(started);
    write_image(img, outdir_ / file, format_for_path(file));
    report_.stages.push_back({name, file, ms});
  }

  void text(const std::string& name, const std::string& file,
            const std::string& body, Clock::time_point started) {
    const double ms = elapsed_ms(started);
    std::ofstream out(outdir_ / file, std::ios::binary | std::ios::trunc);
    out << body;
    if (!out) throw IoError("write failed: " + (outdir_ / file).string());
    report_.stages.push_back({name, file, ms});
  }

  void finish() {
    std::ofstream out(outdir_ / "report.txt", std::ios::binary | std::ios::trunc);
    out << report_.to_text(false);
    if (!out) throw IoError("write failed: " + (outdir_ / "report.txt").string());
  }

 private:
  fs::path outdir_;
  PipelineReport& report_;
};

std::size_t count_ones(const BinaryImage& mask) {
  return static_cast<std::size_t>(
      std::count_if(mask.samples().begin(), mask.samples().end(),
                    [](std::uint8_t v) { return v != 0; }));
}

IndexedImage render_labels(const LabelImage& labels) {
  const auto& palette = label_palette();
  Image<std::uint32_t> index(labels.width(), labels.height());
  for (std::size_t i = 0; i < index.size(); ++i) {
    index[i] = static_cast<std::uint32_t>((labels[i] - 1) % palette.size()) + 1;
  }
  return IndexedImage(std::move(index), palette);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string PipelineReport::to_text(bool with_timing) const {
  std::ostringstream out;
  out << "pipeline=" << pipeline << '\n';
  for (const auto& s : stages) {
    out << "stage." << s.name << '=' << s.file << '\n';
    if (with_timing) {
      char ms[32];
      std::snprintf(ms, sizeof ms, "%.3f", s.millis);
      out << "stage." << s.name << ".ms=" << ms << '\n';
    }
  }
  for (const auto& [k, v] : results) out << "result." << k << '=' << v << '\n';
  return out.str();
}

const std::string* PipelineReport::result(const std::string& key) const {
  for (const auto& [k, v] : results) {
    if (k == key) return &v;
  }
  return nullptr;
}

const ColorMap& label_palette() {
  static const ColorMap palette = {
      {0.0, 0.0, 0.0},       {0.90, 0.10, 0.10}, {0.10, 0.70, 0.20},
      {0.15, 0.35, 0.90},    {0.95, 0.75, 0.10}, {0.60, 0.20, 0.80},
      {0.10, 0.80, 0.85},    {0.95, 0.45, 0.70}, {0.55, 0.35, 0.15},
      {0.70, 0.70, 0.70},
  };
  return palette;
}

OcrStages run_ocr(const RealImage& input, const OcrParams& params) {
  OcrStages s;
  s.input = input;
  s.blurred = gaussian_blur(input, params.sigma);
  s.binary = invert(threshold(s.blurred, params.bin_threshold));
  s.field = skeleton(s.binary);
  s.skeleton_fine = threshold(s.field, params.spur_threshold);
  s.skeleton_pruned = threshold(s.field, params.skel_threshold);
  return s;
}

CellsStages run_cells(const RealImage& input, const CellsParams& params) {
  CellsStages s;
  s.input = input;
  s.cells = invert(threshold(input, params.bin_threshold));
  s.distance2 = edt_squared(s.cells);
  RealImage d(input.width(), input.height());
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = std::sqrt(static_cast<double>(s.distance2[i]));
  }
  s.distance = normalize(d);
  s.relief = mask_multiply(median_filter(invert(s.distance), params.median_radius),
                           s.cells);
  s.labels = watershed(s.relief);
  s.count = count_objects(s.labels);
  return s;
}

PipelineReport pipeline_ocr(const fs::path& input, const fs::path& outdir,
                            const OcrParams& params) {
  PipelineReport report;
  report.pipeline = "ocr";
  StageWriter out(outdir, report);

  auto t = Clock::now();
  const RealImage a = read_gray(input);
  out.image("input", "a_input.png", to_gray16(a), t);

  t = Clock::now();
  const RealImage b = gaussian_blur(a, params.sigma);
  out.image("blur", "b_blur.png", to_gray16(b), t);

  t = Clock::now();
  const BinaryImage c = invert(threshold(b, params.bin_threshold));
  out.image("binary", "c_binary.png", mask_to_gray16(c), t);

  t = Clock::now();
  const SkeletonField field = skeleton(c);
  out.image("skeleton_field", "skeleton_field.png", to_gray16(field), t);

  t = Clock::now();
  const BinaryImage fine = threshold(field, params.spur_threshold);
  out.image("skeleton_fine", "d_skeleton_fine.png", mask_to_gray16(fine), t);

  t = Clock::now();
  const BinaryImage pruned = threshold(field, params.skel_threshold);
  out.image("skeleton_pruned", "e_skeleton_pruned.png", mask_to_gray16(pruned), t);

  const auto comps = label_components(pruned, Connectivity::eight);
  report.results = {
      {"fine_pixels", std::to_string(count_ones(fine))},
      {"pruned_pixels", std::to_string(count_ones(pruned))},
      {"components", std::to_string(comps.count)},
      {"holes", std::to_string(count_holes(pruned))},
  };
  out.finish();
  return report;
}

PipelineReport pipeline_cells(const fs::path& input, const fs::path& outdir,
                              const CellsParams& params) {
  PipelineReport report;
  report.pipeline = "cells";
  StageWriter out(outdir, report);

  auto t = Clock::now();
  const RealImage a = read_gray(input);
  out.image("input", "a_input.png", to_gray16(a), t);

  t = Clock::now();
  const BinaryImage b = invert(threshold(a, params.bin_threshold));
  out.image("binary", "b_binary.png", mask_to_gray16(b), t);

  t = Clock::now();
  const auto d2 = edt_squared(b);
  Gray16Image raw(d2.width(), d2.height());
  std::size_t clamped = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (d2[i] > 65535) ++clamped;
    raw[i] = static_cast<std::uint16_t>(std::min<std::int64_t>(d2[i], 65535));
  }
  out.image("distance_squared", "c_distance_squared.pgm", raw, t);

  t = Clock::now();
  RealImage d(a.width(), a.height());
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = std::sqrt(static_cast<double>(d2[i]));
  }
  d = normalize(d);
  out.image("distance", "c_distance.png", to_gray16(d), t);

  t = Clock::now();
  std::string csv = "row,col,value\n";
  for (int y = 0; y < d.height(); ++y) {
    for (int x = 0; x < d.width(); ++x) {
      csv += std::to_string(y) + ',' + std::to_string(x) + ',' +
             format_double(d(x, y)) + '\n';
    }
  }
  out.text("distance_surface", "c_distance_surface.csv", csv, t);

  t = Clock::now();
  const RealImage dm =
      mask_multiply(median_filter(invert(d), params.median_radius), b);
  out.image("relief", "d_relief.png", to_gray16(dm), t);

  t = Clock::now();
  const LabelImage w = watershed(dm);
  Gray16Image raw_labels(w.width(), w.height());
  for (std::size_t i = 0; i < raw_labels.size(); ++i) {
    raw_labels[i] = static_cast<std::uint16_t>(std::min(w[i], 65535));
  }
  out.image("labels_raw", "e_labels_raw.png", raw_labels, t);

  t = Clock::now();
  out.image("labels", "e_labels.png", render_labels(w), t);

  const int regions = *std::max_element(w.samples().begin(), w.samples().end());
  report.results = {
      {"regions", std::to_string(regions)},
      {"count", std::to_string(count_objects(w))},
      {"distance_clamped_pixels", std::to_string(clamped)},
  };
  out.finish();
  return report;
}

PipelineReport demo_fft(const fs::path& outdir) {
  PipelineReport report;
  report.pipeline = "fft";
  StageWriter out(outdir, report);

  auto t = Clock::now();
  const FftDemo demo = run_fft_demo();
  std::string csv = "index,a,c1,c2,c3,c,hc_shift_re,hc_shift_im,roundtrip_re,roundtrip_im\n";
  for (std::size_t i = 0; i < demo.c.size(); ++i) {
    csv += std::to_string(i) + ',' + format_double(demo.a[i]) + ',' +
           format_double(demo.c1[i]) + ',' + format_double(demo.c2[i]) + ',' +
           format_double(demo.c3[i]) + ',' + format_double(demo.c[i]) + ',' +
           format_double(demo.shifted[i].real()) + ',' +
           format_double(demo.shifted[i].imag()) + ',' +
           format_double(demo.roundtrip[i].real()) + ',' +
           format_double(demo.roundtrip[i].imag()) + '\n';
  }
  out.text("signals", "fft_demo.csv", csv, t);

  report.results = {
      {"length", std::to_string(demo.c.size())},
      {"max_roundtrip_error", format_double(demo.max_roundtrip_error)},
  };
  out.finish();
  return report;
}

}  // namespace sipkit
