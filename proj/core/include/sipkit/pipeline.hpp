#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "sipkit/dist.hpp"
#include "sipkit/image.hpp"
#include "sipkit/morph.hpp"
#include "sipkit/spectral.hpp"

namespace sipkit {

/// Outcome of a canned pipeline: the artifacts it wrote and its scalar
/// results, rendered as key=value lines.
struct PipelineReport {
  struct Stage {
    std::string name;
    std::string file;  // relative to the output directory
    double millis = 0.0;
  };

  std::string pipeline;
  std::vector<Stage> stages;
  std::vector<std::pair<std::string, std::string>> results;

  /// key=value lines. Timings are optional so the on-disk report stays
  /// byte-identical between runs.
  std::string to_text(bool with_timing) const;
  const std::string* result(const std::string& key) const;
};

struct OcrParams {
  double sigma = 2.0;
  double bin_threshold = 0.8;
  double spur_threshold = 0.1;
  double skel_threshold = 0.5;
};

struct OcrStages {
  RealImage input;
  RealImage blurred;
  BinaryImage binary;  // glyph = 1 (after inversion)
  SkeletonField field;
  BinaryImage skeleton_fine;    // field >= spur_threshold
  BinaryImage skeleton_pruned;  // field >= skel_threshold
};

/// blur -> threshold -> invert -> skeleton -> two pruning levels.
OcrStages run_ocr(const RealImage& input, const OcrParams& params = {});

struct CellsParams {
  double bin_threshold = 0.9;
  int median_radius = 2;
};

struct CellsStages {
  RealImage input;
  BinaryImage cells;               // thresholded and inverted, cells = 1
  SquaredDistanceImage distance2;  // exact squared distances
  RealImage distance;              // sqrt, normalized to [0, 1]
  RealImage relief;                // 1 - distance, median filtered, masked
  LabelImage labels;
  int count = 0;
};

/// threshold -> invert -> EDT -> sqrt -> normalize -> invert -> median ->
/// mask -> watershed -> count.
CellsStages run_cells(const RealImage& input, const CellsParams& params = {});

/// Fixed 10-entry palette used to render label images.
const ColorMap& label_palette();

PipelineReport pipeline_ocr(const std::filesystem::path& input,
                            const std::filesystem::path& outdir,
                            const OcrParams& params = {});
PipelineReport pipeline_cells(const std::filesystem::path& input,
                              const std::filesystem::path& outdir,
                              const CellsParams& params = {});
PipelineReport demo_fft(const std::filesystem::path& outdir);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace sipkit
