#include <gtest/gtest.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sipkit/codec.hpp"
#include "sipkit/core.hpp"
#include "sipkit/fixtures.hpp"
#include "sipkit/pipeline.hpp"

namespace {

using namespace sipkit;
namespace fs = std::filesystem;

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sipkit_pipeline_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write_fixture(const char* name, const RealImage& img) {
    const fs::path p = dir_ / name;
    write_image(to_gray16(img), p, WriteFormat::png);
    return p;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  static void expect_report_consistent(const PipelineReport& r, const fs::path& out) {
    for (const auto& s : r.stages) EXPECT_TRUE(fs::exists(out / s.file)) << s.file;
    std::istringstream lines(slurp(out / "report.txt"));
    std::string line;
    while (std::getline(lines, line)) {
      EXPECT_NE(line.find('='), std::string::npos) << line;
    }
    EXPECT_EQ(slurp(out / "report.txt"), r.to_text(false));
  }

  fs::path dir_;
};

TEST_F(PipelineTest, OcrOnGlyph) {
  const auto input = write_fixture("glyph.png", fixtures::glyph_a());
  const auto r = pipeline_ocr(input, dir_ / "out");
  expect_report_consistent(r, dir_ / "out");
  EXPECT_EQ(r.stages.size(), 6u);
  EXPECT_EQ(*r.result("components"), "1");
  EXPECT_EQ(*r.result("holes"), "1");
  EXPECT_LT(std::stoi(*r.result("pruned_pixels")), std::stoi(*r.result("fine_pixels")));
}

TEST_F(PipelineTest, OcrReportFrozen) {
  const auto input = write_fixture("glyph.png", fixtures::glyph_a());
  pipeline_ocr(input, dir_ / "out");
  EXPECT_EQ(slurp(dir_ / "out" / "report.txt"),
            "pipeline=ocr\n"
            "stage.input=a_input.png\n"
            "stage.blur=b_blur.png\n"
            "stage.binary=c_binary.png\n"
            "stage.skeleton_field=skeleton_field.png\n"
            "stage.skeleton_fine=d_skeleton_fine.png\n"
            "stage.skeleton_pruned=e_skeleton_pruned.png\n"
            "result.fine_pixels=214\n"
            "result.pruned_pixels=123\n"
            "result.components=1\n"
            "result.holes=1\n");
}

TEST_F(PipelineTest, OcrOnBlankInputIsDomainError) {
  const auto input = write_fixture("blank.png", RealImage(30, 30, 1.0));
  EXPECT_THROW(pipeline_ocr(input, dir_ / "out"), DomainError);
}

TEST_F(PipelineTest, CellsCounts) {
  const auto two = write_fixture("two.png", fixtures::two_cells());
  const auto one = write_fixture("one.png", fixtures::single_cell());
  const auto r2 = pipeline_cells(two, dir_ / "two");
  const auto r1 = pipeline_cells(one, dir_ / "one");
  expect_report_consistent(r2, dir_ / "two");
  EXPECT_EQ(*r2.result("count"), "2");
  EXPECT_EQ(*r1.result("count"), "1");
  EXPECT_EQ(*r2.result("distance_clamped_pixels"), "0");

  const auto labels = std::get<IndexedImage>(read_image(dir_ / "two" / "e_labels.png"));
  ASSERT_EQ(labels.map.size(), label_palette().size());
  for (std::size_t k = 0; k < labels.map.size(); ++k) {
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(labels.map[k][c], label_palette()[k][c], 1.0 / 65535);
  }
}

TEST_F(PipelineTest, CellsSurfaceCsvParsesBackExactly) {
  const auto input = write_fixture("two.png", fixtures::two_cells());
  pipeline_cells(input, dir_ / "out");
  const RealImage d = run_cells(read_gray(input)).distance;
  std::istringstream csv(slurp(dir_ / "out" / "c_distance_surface.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "row,col,value");
  std::size_t rows = 0;
  while (std::getline(csv, line)) {
    int r = 0;
    int c = 0;
    double v = 0;
    const char* p = line.data();
    const char* end = p + line.size();
    p = std::from_chars(p, end, r).ptr + 1;
    p = std::from_chars(p, end, c).ptr + 1;
    std::from_chars(p, end, v);
    ASSERT_EQ(v, d(c, r)) << line;
    ++rows;
  }
  EXPECT_EQ(rows, d.size());
}

TEST_F(PipelineTest, FftDemoCsv) {
  const auto r = demo_fft(dir_);
  expect_report_consistent(r, dir_);
  EXPECT_EQ(*r.result("length"), "32");
  EXPECT_LT(std::stod(*r.result("max_roundtrip_error")), 1e-9);

  const FftDemo demo = run_fft_demo();
  std::istringstream csv(slurp(dir_ / "fft_demo.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "index,a,c1,c2,c3,c,hc_shift_re,hc_shift_im,roundtrip_re,roundtrip_im");
  for (std::size_t i = 0; i < 32; ++i) {
    ASSERT_TRUE(std::getline(csv, line));
    std::vector<double> cols;
    std::istringstream fields(line);
    std::string f;
    while (std::getline(fields, f, ',')) {
      double v = 0;
      std::from_chars(f.data(), f.data() + f.size(), v);
      cols.push_back(v);
    }
    ASSERT_EQ(cols.size(), 10u);
    EXPECT_EQ(cols[1], demo.a[i]);
    EXPECT_EQ(cols[5], demo.c[i]);
    EXPECT_EQ(cols[6], demo.shifted[i].real());
    EXPECT_EQ(cols[9], demo.roundtrip[i].imag());
  }
}

TEST(FormatDouble, ShortestRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 12345.678, -0.0}) {
    const std::string s = format_double(v);
    double back = 1;
    std::from_chars(s.data(), s.data() + s.size(), back);
    EXPECT_EQ(back, v) << s;
  }
}

}  // namespace
