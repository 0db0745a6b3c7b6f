#pragma once

// Slice rendering: a complex window in one coordinate, the other six fixed,
// every pixel decided by decide_bq and painted with a fixed palette.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bowditch/algebra.hpp"
#include "bowditch/bq.hpp"

namespace bowditch {

enum class SliceMode { Raw, SolvePlus, SolveMinus };

struct SliceConfig {
  std::map<char, Complex> fixed;  // keys among a,b,c,d,x,y,z
  char varying = 'd';
  Complex center = 0.0;
  double width = 4.0, height = 4.0;
  int px_w = 64, px_h = 64;
  BqParams params;
  SliceMode mode = SliceMode::Raw;

  // Throws std::invalid_argument on an inconsistent config.
  void validate() const;
  // Parses the JSON document; throws std::invalid_argument.
  static SliceConfig from_json(const std::string& text);
};

// Tags: 0 NotBQ-BQ1, 1 NotBQ-sigma, 2 NotBQ-arc, 3 Undecided, 4 InBQ.
struct PixelResult {
  std::uint8_t tag = 3;
  long steps = 0;
  double residual = 0.0;
};

std::uint8_t verdict_tag(const BqVerdict& v);
std::array<std::uint8_t, 3> pixel_color(const PixelResult& p);

// Coordinate value at pixel (i, j), top-left origin.
Complex pixel_value(const SliceConfig& cfg, int i, int j);
// Root quad and boundary at pixel (i, j).
MarkoffQuad pixel_quad(const SliceConfig& cfg, int i, int j);

PixelResult decide_pixel(const SliceConfig& cfg, int i, int j);

struct RenderResult {
  int width = 0, height = 0;
  std::vector<PixelResult> pixels;  // row-major
  std::vector<std::uint8_t> rgb;
};

RenderResult render_slice(const SliceConfig& cfg, int threads = 1);

std::string ppm_bytes(const RenderResult& r);
// Throws std::runtime_error when the file cannot be written.
void write_ppm(const RenderResult& r, const std::string& path);
std::string render_report(const SliceConfig& cfg, const RenderResult& r);

}  // namespace bowditch
