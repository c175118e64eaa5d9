// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Usage: sipkit_acceptance PATH_TO_SIPKIT_CLI

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "process.hpp"
#include "sipkit/codec.hpp"
#include "sipkit/core.hpp"
#include "sipkit/dist.hpp"
#include "sipkit/filter.hpp"
#include "sipkit/fixtures.hpp"
#include "sipkit/geom.hpp"
#include "sipkit/morph.hpp"
#include "sipkit/pipeline.hpp"
#include "sipkit/seg.hpp"
#include "sipkit/spectral.hpp"
#include "sipkit/topology.hpp"

namespace {

using namespace sipkit;
namespace fs = std::filesystem;

/// Collects failure messages for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += "\n    - " + f;
    if (count_ > failures_.size()) s += "\n    - ... " + std::to_string(count_) + " failures total";
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

std::size_t ones(const BinaryImage& m) {
  return static_cast<std::size_t>(std::count(m.samples().begin(), m.samples().end(), 1));
}

void edt_exactness(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  for (std::uint32_t seed = 0; seed < 200; ++seed) {
    // Densities sweep sparse to nearly full foreground.
    const double density = 0.05 + 0.9 * (seed % 10) / 9.0;
    BinaryImage m = oracle::random_mask(32, 32, density, seed);
    if (ones(m) == m.size()) m(static_cast<int>(seed % 32), 0) = 0;
    c.expect(edt_squared(m) == oracle::edt_squared(m), "mask " + std::to_string(seed));
  }
  const double s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(s < 2.0, "took " + std::to_string(s) + " s");
}

void fft_accuracy(Check& c) {
  const FftDemo demo = run_fft_demo();
  c.expect(demo.c.size() == 32, "demo length");
  c.expect(demo.max_roundtrip_error < 1e-9,
           "roundtrip error " + std::to_string(demo.max_roundtrip_error));
  std::mt19937 rng(2024);
  for (std::size_t n : {8u, 16u, 32u, 64u}) {
    ComplexVector x(n);
    for (auto& z : x) z = {oracle::uniform(rng) - 0.5, oracle::uniform(rng) - 0.5};
    const auto got = fft(x, FftSign::forward);
    const auto want = oracle::dft(x, -1);
    for (std::size_t k = 0; k < n; ++k) {
      c.expect(std::abs(got[k] - want[k]) < 1e-9,
               "n=" + std::to_string(n) + " bin " + std::to_string(k));
    }
  }
}

void ocr_pipeline(Check& c) {
  const OcrStages s = run_ocr(fixtures::glyph_a(), OcrParams{2.0, 0.8, 0.1, 0.5});
  c.expect(is_subset(s.skeleton_pruned, s.binary), "pruned skeleton leaves the mask");
  c.expect(is_subset(s.skeleton_pruned, s.skeleton_fine), "0.5 set not inside 0.1 set");
  c.expect(ones(s.skeleton_pruned) < ones(s.skeleton_fine), "pruning removed nothing");
  const int comps = label_components(s.skeleton_pruned, Connectivity::eight).count;
  const int holes = count_holes(s.skeleton_pruned);
  c.expect(comps == 1, "components = " + std::to_string(comps));
  c.expect(holes == 1, "holes = " + std::to_string(holes));
  c.expect(!has_full_2x2_block(s.skeleton_pruned), "2x2 block in final skeleton");
}

void cells_pipeline(Check& c) {
  const int two = run_cells(fixtures::two_cells(), CellsParams{0.9, 2}).count;
  const int one = run_cells(fixtures::single_cell(), CellsParams{0.9, 2}).count;
  c.expect(two == 2, "two-disc count = " + std::to_string(two));
  c.expect(one == 1, "single-disc count = " + std::to_string(one));
  for (std::uint32_t seed = 0; seed < 50; ++seed) {
    const RealImage img = gaussian_blur(oracle::random_image(48, 36, 9000 + seed), 1.5);
    const LabelImage w = watershed(img);
    const int regions = *std::max_element(w.samples().begin(), w.samples().end());
    const int minima = oracle::count_regional_minima(img);
    c.expect(regions == minima, "image " + std::to_string(seed) + ": " +
                                    std::to_string(regions) + " regions vs " +
                                    std::to_string(minima) + " minima");
  }
}

void filters(Check& c) {
  for (double v : {0.0, 0.37, 1.0}) {
    c.expect(gaussian_blur(RealImage(33, 21, v), 2.0) == RealImage(33, 21, v), "DC gain");
  }

  const int n = 41;
  RealImage impulse(n, n, 0.0);
  impulse(n / 2, n / 2) = 1.0;
  const RealImage h = gaussian_blur(impulse, 2.0);
  double norm = 0.0;
  for (int d = -6; d <= 6; ++d) norm += std::exp(-d * d / 8.0);
  for (int dy = -4; dy <= 4; ++dy) {
    for (int dx = -4; dx <= 4; ++dx) {
      const double want = std::exp(-(dx * dx + dy * dy) / 8.0) / (norm * norm);
      const double got = h(n / 2 + dx, n / 2 + dy);
      c.expect(std::abs(got - want) <= 1e-3 * want, "impulse tap " + std::to_string(dx) +
                                                         "," + std::to_string(dy));
    }
  }

  std::mt19937 rng(55);
  const RealImage noisy = oracle::random_image(40, 40, 56);
  const RealImage med1 = median_filter(noisy, 1);
  const RealImage med2 = median_filter(noisy, 2);
  const RealImage med3 = median_filter(noisy, 3);
  for (int k = 0; k < 1000; ++k) {
    const int r = 1 + static_cast<int>(rng() % 3);
    const int x = static_cast<int>(rng() % 40);
    const int y = static_cast<int>(rng() % 40);
    const RealImage& med = r == 1 ? med1 : r == 2 ? med2 : med3;
    const auto w = oracle::window(noisy, x, y, r);
    c.expect(std::find(w.begin(), w.end(), med(x, y)) != w.end(), "median window");
  }

  const RealImage scene = fixtures::scene();
  std::size_t previous = scene.size() + 1;
  for (int k = 0; k <= 19; ++k) {
    const std::size_t count = ones(sobel_edges(scene, k / 19.0));
    c.expect(count <= previous, "edge count rose at step " + std::to_string(k));
    previous = count;
  }
}

void morphology(Check& c) {
  for (int r = 1; r <= 3; ++r) {
    for (std::uint32_t seed = 0; seed < 50; ++seed) {
      const BinaryImage m = oracle::random_mask(16, 16, 0.35, 300 + seed);
      const BinaryImage d = dilate_disc(m, r);
      const BinaryImage e = erode_disc(m, r);
      const std::string id = "r=" + std::to_string(r) + " mask " + std::to_string(seed);
      c.expect(d == oracle::dilate(m, r), "dilation " + id);
      c.expect(e == oracle::erode(m, r), "erosion " + id);
      c.expect(e == invert(dilate_disc(invert(m), r)), "duality " + id);
      c.expect(is_subset(dilate_disc(e, r), m), "opening not anti-extensive " + id);
      c.expect(is_subset(m, erode_disc(d, r)), "closing not extensive " + id);
    }
  }
}

void geometry(Check& c) {
  const RealImage img = fixtures::scene();
  c.expect(rotate(img, 0.0) == img, "rotate 0 bilinear");
  c.expect(rotate(img, 0.0, Interpolation::nearest) == img, "rotate 0 nearest");

  // Byte-exact through the 16-bit codec.
  const Gray16Image g = to_gray16(img);
  RealImage cur = to_real(g);
  for (int k = 0; k < 4; ++k) cur = rotate(cur, 90.0, Interpolation::nearest);
  c.expect(encode_image(to_gray16(cur), WriteFormat::pgm) == encode_image(g, WriteFormat::pgm),
           "four quarter turns");

  for (int deg = 0; deg < 360; ++deg) {
    long double vw = 0;
    long double vh = 0;
    if (deg % 90 == 0) {
      vw = deg % 180 == 0 ? img.width() : img.height();
      vh = deg % 180 == 0 ? img.height() : img.width();
    } else {
      const long double t = deg * 3.14159265358979323846264338327950288L / 180.0L;
      const long double cs = std::fabs(std::cos(t));
      const long double sn = std::fabs(std::sin(t));
      vw = img.width() * cs + img.height() * sn;
      vh = img.width() * sn + img.height() * cs;
    }
    const Size want{static_cast<int>(std::ceil(vw)), static_cast<int>(std::ceil(vh))};
    const Size got = rotated_canvas(img.width(), img.height(), deg);
    c.expect(got == want, "canvas at " + std::to_string(deg) + " degrees");
  }
}

void codecs(Check& c) {
  std::mt19937 rng(4242);
  const auto rand16 = [&](int w, int h) {
    Gray16Image g(w, h);
    for (auto& v : g.samples()) v = static_cast<std::uint16_t>(rng() >> 16);
    return g;
  };
  for (int k = 0; k < 100; ++k) {
    const int w = 1 + static_cast<int>(rng() % 48);
    const int h = 1 + static_cast<int>(rng() % 48);
    const Gray16Image g = rand16(w, h);
    const TruecolorImage t(rand16(w, h), rand16(w, h), rand16(w, h));
    const std::string id = " image " + std::to_string(k);
    try {
      c.expect(std::get<Gray16Image>(decode_image(encode_image(g, WriteFormat::png))) == g,
               "gray png" + id);
      c.expect(std::get<Gray16Image>(decode_image(encode_image(g, WriteFormat::pgm))) == g,
               "gray pgm" + id);
      c.expect(std::get<TruecolorImage>(decode_image(encode_image(t, WriteFormat::png))) == t,
               "truecolor png" + id);
      c.expect(std::get<TruecolorImage>(decode_image(encode_image(t, WriteFormat::ppm))) == t,
               "truecolor ppm" + id);
    } catch (const std::exception& e) {
      c.expect(false, std::string(e.what()) + id);
    }
  }
  Image<std::uint32_t> index(5, 3);
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = static_cast<std::uint32_t>(i % 4) + 1;
  const ColorMap map = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0.5}, {0.25, 0.5, 1}};
  const auto back = decode_image(encode_image(IndexedImage(index, map), WriteFormat::png));
  const auto* ind = std::get_if<IndexedImage>(&back);
  c.expect(ind != nullptr, "indexed payload not decoded as indexed");
  if (ind) {
    c.expect(ind->map.size() == 4, "map rows");
    c.expect(ind->index == index, "index plane");
    for (const auto& row : ind->map) c.expect(row.size() == 3, "map columns");
  }
}

struct CliCase {
  std::string name;
  std::string args;  // {in}, {mask}, {labels} and {out} are substituted
  bool writes_dir = false;
};

void cli_determinism(Check& c, const std::string& cli) {
  const fs::path root = fs::temp_directory_path() / "sipkit_acceptance_cli";
  fs::remove_all(root);
  fs::create_directories(root / "inputs");
  const fs::path in = root / "inputs" / "scene.png";
  const fs::path glyph = root / "inputs" / "glyph.png";
  const fs::path cells = root / "inputs" / "cells.png";
  const fs::path mask = root / "inputs" / "mask.png";
  write_image(to_gray16(fixtures::scene()), in, WriteFormat::png);
  write_image(to_gray16(fixtures::glyph_a()), glyph, WriteFormat::png);
  write_image(to_gray16(fixtures::two_cells()), cells, WriteFormat::png);
  write_image(mask_to_gray16(invert(threshold(fixtures::two_cells(), 0.9))), mask,
              WriteFormat::png);
  const fs::path labels = root / "inputs" / "labels.png";
  {
    const auto r = testproc::run(cli, "watershed " + testproc::quote(cells.string()) + " " +
                                          testproc::quote(labels.string()),
                                 root);
    c.expect(r.status == 0, "could not prepare label image: " + r.err);
  }

  const std::vector<CliCase> cases = {
      {"to-gray", "to-gray {in} {out}.png"},
      {"threshold", "threshold --threshold 0.5 {in} {out}.png"},
      {"invert", "invert {in} {out}.png"},
      {"equalize", "equalize {in} {out}.png"},
      {"blur", "blur --sigma 2 {in} {out}.png"},
      {"median", "median --radius 2 {in} {out}.png"},
      {"edge", "edge --threshold 0.15 {in} {out}.png"},
      {"rotate", "rotate --degrees 30 {in} {out}.png"},
      {"zoom", "zoom --factor 1.5 --interp nearest {in} {out}.png"},
      {"affine", "affine --matrix 1,0.3,-5,0,1,2 {in} {out}.png"},
      {"bwdist", "bwdist --squared {mask} {out}.pgm"},
      {"dilate", "dilate --radius 2 {mask} {out}.png"},
      {"erode", "erode --radius 2 {mask} {out}.png"},
      {"skel", "skel {mask} {out}.png"},
      {"watershed", "watershed {cells} {out}.png"},
      {"count", "count {labels}"},
      {"pipeline-ocr", "pipeline-ocr {glyph} --outdir {out}", true},
      {"pipeline-cells", "pipeline-cells {cells} --outdir {out}", true},
      {"demo-fft", "demo-fft --outdir {out}", true},
  };

  const auto substitute = [&](std::string s, const fs::path& out) {
    const std::pair<std::string, fs::path> keys[] = {
        {"{in}", in}, {"{glyph}", glyph}, {"{cells}", cells},
        {"{mask}", mask}, {"{labels}", labels}, {"{out}", out}};
    for (const auto& [k, v] : keys) {
      for (auto pos = s.find(k); pos != std::string::npos; pos = s.find(k)) {
        s.replace(pos, k.size(), v.string());
      }
    }
    return s;
  };

  // Everything a run produced: stdout plus every file below its directory.
  const auto snapshot = [](const fs::path& dir, const std::string& out) {
    std::vector<std::pair<std::string, std::string>> files{{"<stdout>", out}};
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
      if (!e.is_regular_file()) continue;
      const auto rel = fs::relative(e.path(), dir).string();
      if (rel == "stdout.txt" || rel == "stderr.txt") continue;
      files.emplace_back(rel, testproc::slurp(e.path()));
    }
    std::sort(files.begin(), files.end());
    return files;
  };

  for (const auto& cc : cases) {
    std::vector<std::pair<std::string, std::string>> runs[2];
    for (int k = 0; k < 2; ++k) {
      const fs::path dir = root / cc.name / ("run" + std::to_string(k));
      fs::create_directories(dir);
      const fs::path out = dir / "artifact";
      const auto r = testproc::run(cli, substitute(cc.args, out), dir);
      c.expect(r.status == 0, cc.name + " exited " + std::to_string(r.status) + ": " + r.err);
      runs[k] = snapshot(dir, r.out);
    }
    const bool produced = runs[0].size() > 1 || cc.name == "count";
    c.expect(produced, cc.name + " produced no artifact");
    c.expect(runs[0] == runs[1], cc.name + " artifacts differ between runs");
  }
  fs::remove_all(root);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: sipkit_acceptance PATH_TO_SIPKIT_CLI\n";
    return 2;
  }
  const std::string cli = argv[1];

  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"EDT exactness vs brute force, 200 random 32x32 masks, under 2 s", edt_exactness},
      {"FFT roundtrip < 1e-9 and agreement with direct DFT for n in {8,16,32,64}",
       fft_accuracy},
      {"OCR pipeline on glyph: containment, monotone pruning, 1 component, 1 hole, thin",
       ocr_pipeline},
      {"Cells pipeline: counts 2 and 1; regions equal minima on 50 smoothed images",
       cells_pipeline},
      {"Filters: DC gain, impulse response, median membership, monotone Sobel sweep",
       filters},
      {"Morphology: disc oracles on 50 masks for r=1..3, duality and adjunction", morphology},
      {"Geometry: rotate 0 identity, four quarter turns, canvas for 0..359 degrees",
       geometry},
      {"Codecs: 100 gray and truecolor roundtrips via PNG and PNM; indexed N x 3 map",
       codecs},
      {"Determinism: every CLI command twice gives byte-identical artifacts",
       [&](Check& c) { cli_determinism(c, cli); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first << check.summary() << '\n';
    failed += check.ok() ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
