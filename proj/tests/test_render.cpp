#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bowditch/render.hpp"

using namespace bowditch;

namespace {

SliceConfig zero_slice(int px, double width) {
  SliceConfig c;
  for (char k : std::string("abcxyz")) c.fixed[k] = 0.0;
  c.varying = 'd';
  c.width = c.height = width;
  c.px_w = c.px_h = px;
  return c;
}

// Mixed slice: varying a with b = c = 5, omega = -2. An odd pixel count
// puts the middle row on the real axis, where a in (-0.8, 0) gives a face
// value inside [-2, 2].
SliceConfig mixed_slice(int px) {
  SliceConfig c;
  c.fixed = {{'b', 5.0}, {'c', 5.0}, {'x', -2.0}, {'y', -2.0}, {'z', -2.0}};
  c.varying = 'a';
  c.center = 1.0;
  c.width = c.height = 6.0;
  c.px_w = c.px_h = px;
  c.mode = SliceMode::SolveMinus;
  c.params.max_total_edges = 20000;
  return c;
}

}  // namespace

TEST(Render, PixelGeometry) {
  SliceConfig c = zero_slice(4, 4.0);
  EXPECT_EQ(pixel_value(c, 0, 0), Complex(-1.5, 1.5));
  EXPECT_EQ(pixel_value(c, 3, 3), Complex(1.5, -1.5));
  SliceConfig one = zero_slice(1, 1.0);
  one.center = Complex(2.0, 0.0);
  EXPECT_EQ(pixel_value(one, 0, 0), Complex(2.0, 0.0));
}

TEST(Render, SinglePixelNotBqIsBlue) {
  SliceConfig c = zero_slice(1, 1.0);
  c.center = 2.0;
  RenderResult r = render_slice(c, 1);
  ASSERT_EQ(r.rgb.size(), 3u);
  EXPECT_EQ(r.rgb, (std::vector<std::uint8_t>{0, 0, 255}));
  EXPECT_EQ(r.pixels[0].tag, 0);
  std::string ppm = ppm_bytes(r);
  EXPECT_EQ(ppm, std::string("P6\n1 1\n255\n") + std::string("\x00\x00\xff", 3));
}

TEST(Render, Palette) {
  EXPECT_EQ(pixel_color({4, 10, 0}), (std::array<std::uint8_t, 3>{0, 0, 0}));
  EXPECT_EQ(pixel_color({3, 10, 0}), (std::array<std::uint8_t, 3>{255, 255, 255}));
  EXPECT_EQ(pixel_color({1, 10, 0}), (std::array<std::uint8_t, 3>{0, 255, 0}));
  EXPECT_EQ(pixel_color({0, 1000, 0}), (std::array<std::uint8_t, 3>{0, 0, 63}));
  EXPECT_EQ(pixel_color({2, 5, 0}), (std::array<std::uint8_t, 3>{250, 0, 0}));
}

TEST(Render, DeterministicAcrossRunsAndThreads) {
  SliceConfig c = mixed_slice(9);
  RenderResult a = render_slice(c, 1);
  RenderResult b = render_slice(c, 1);
  RenderResult d = render_slice(c, 3);
  EXPECT_EQ(ppm_bytes(a), ppm_bytes(b));
  EXPECT_EQ(ppm_bytes(a), ppm_bytes(d));
  long in = 0, out = 0;
  for (const PixelResult& p : a.pixels) {
    in += p.tag == 4;
    out += p.tag <= 2;
  }
  EXPECT_GT(in, 0);
  EXPECT_GT(out, 0);
}

TEST(Render, SymmetryInD) {
  SliceConfig c = zero_slice(10, 6.0);
  RenderResult r = render_slice(c, 2);
  for (int j = 0; j < c.px_h; ++j)
    for (int i = 0; i < c.px_w; ++i) {
      const PixelResult& p = r.pixels[j * c.px_w + i];
      const PixelResult& q = r.pixels[(c.px_h - 1 - j) * c.px_w + (c.px_w - 1 - i)];
      EXPECT_EQ(p.tag == 4, q.tag == 4);
      EXPECT_EQ(p.tag <= 2, q.tag <= 2);
    }
}

TEST(Render, ReportCounts) {
  SliceConfig c = zero_slice(3, 1.0);
  RenderResult r = render_slice(c, 1);
  std::string rep = render_report(c, r);
  EXPECT_NE(rep.find("pixels 3x3"), std::string::npos);
  EXPECT_NE(rep.find("notbq_bq1 9"), std::string::npos);
}

TEST(SliceConfig, JsonParsing) {
  SliceConfig c = SliceConfig::from_json(R"({
    "fixed": {"a": 0, "b": [0, 0], "c": 0, "x": 0, "y": 0, "z": 0},
    "varying": "d", "center": [0.5, -0.5], "width": 2, "height": 3,
    "px": [5, 7], "budgets": {"max_total_edges": 77}, "mode": "raw"})");
  EXPECT_EQ(c.varying, 'd');
  EXPECT_EQ(c.center, Complex(0.5, -0.5));
  EXPECT_EQ(c.px_w, 5);
  EXPECT_EQ(c.px_h, 7);
  EXPECT_DOUBLE_EQ(c.height, 3.0);
  EXPECT_EQ(c.params.max_total_edges, 77);

  EXPECT_THROW(SliceConfig::from_json("{"), std::invalid_argument);
  EXPECT_THROW(SliceConfig::from_json(R"({"fixed": {"a": 0}, "varying": "d"})"),
               std::invalid_argument);
  EXPECT_THROW(SliceConfig::from_json(R"({"fixed": {"q": 0}})"), std::invalid_argument);
  EXPECT_THROW(SliceConfig::from_json(
                   R"({"fixed": {"a":0,"b":0,"c":0,"x":0,"y":0,"z":0}, "mode": "solve_plus"})"),
               std::invalid_argument);
  EXPECT_THROW(SliceConfig::from_json(
                   R"({"fixed": {"a":0,"b":0,"c":0,"x":0,"y":0,"z":0}, "mode": "bogus"})"),
               std::invalid_argument);
  EXPECT_THROW(SliceConfig::from_json(
                   R"({"fixed": {"a":0,"b":0,"c":0,"x":0,"y":0,"z":0}, "px": [0, 4]})"),
               std::invalid_argument);
}

TEST(SliceConfig, KOverrideBelowBoundRejected) {
  SliceConfig c = zero_slice(2, 1.0);
  c.fixed['x'] = 3.0;
  c.params.K = 2.5;
  EXPECT_THROW(render_slice(c, 1), std::invalid_argument);
}

TEST(Render, WritePpm) {
  SliceConfig c = zero_slice(2, 1.0);
  RenderResult r = render_slice(c, 1);
  std::string path = ::testing::TempDir() + "render_test.ppm";
  write_ppm(r, path);
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), ppm_bytes(r));
  std::remove(path.c_str());
  EXPECT_THROW(write_ppm(r, "/nonexistent-dir/x.ppm"), std::runtime_error);
}
