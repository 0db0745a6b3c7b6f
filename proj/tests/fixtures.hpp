#pragma once

// Frozen curated points. Each InBQ point was checked against the brute-force
// oracle (all faces to depth 14: the level set is finite and matches the
// certificate) before being recorded here. Each NotBQ point has a face value
// inside [-2, 2], re-rooted by a short move word so the root is generic.

#include <array>
#include <complex>
#include <vector>

namespace fixtures {

using C = std::complex<double>;

struct Point {
  const char* name;
  std::array<C, 4> quad;
  C x, y, z;
};

inline const std::vector<Point>& in_bq() {
  static const std::vector<Point> pts = {
      {"t4_w-2", {C{4, 0}, C{4, 0}, C{4, 0}, C{-86.332020977033451, 0}}, -2, -2, -2},
      {"t5_w-2", {C{5, 0}, C{5, 0}, C{5, 0}, C{-1.465468371272254, 0}}, -2, -2, -2},
      {"t6_w-2", {C{6, 0}, C{6, 0}, C{6, 0}, C{-250.70765814495917, 0}}, -2, -2, -2},
      {"t7_w-2", {C{7, 0}, C{7, 0}, C{7, 0}, C{-1.1488829402869674, 0}}, -2, -2, -2},
      {"t4_w-1.5", {C{4, 0}, C{4, 0}, C{4, 0}, C{-1.4825987696559173, 0}}, -1.5, -1.5, -1.5},
      {"t5_w-1.5", {C{5, 0}, C{5, 0}, C{5, 0}, C{-146.22197734297029, 0}}, -1.5, -1.5, -1.5},
      {"456_w-2", {C{4, 0}, C{5, 0}, C{6, 0}, C{-148.48469228349535, 0}}, -2, -2, -2},
      {"t5i_w-2",
       {C{5, 0.5}, C{5, 0}, C{5, 0}, C{-1.4610603447050909, 0.031065100821600897}},
       -2, -2, -2},
      {"conj4_w-2", {C{4, 1}, C{4, -1}, C{5, 0}, C{-109.45600059307583, 0}}, -2, -2, -2},
      {"t5_wcplx",
       {C{5, 0}, C{5, 0}, C{5, 0}, C{-1.4702683842506143, 0.10463533102605579}},
       C{-2, 0.3}, C{-2, 0.3}, C{-2, 0.3}},
  };
  return pts;
}

inline const std::vector<Point>& not_bq() {
  static const std::vector<Point> pts = {
      {"b1",
       {C{-1.5481456008918131, 0}, C{1, 0}, C{0.5, 0}, C{1.0962912017836262, 0}},
       0, 0, 0},
      {"b2",
       {C{1, 0}, C{-0.19847190626525313, 0}, C{1.3284265355508695, 0},
        C{1.7576404686737341, 0}},
       0.5, 0.5, 0.5},
      {"b3",
       {C{-1.0278551896157511, 0}, C{-0.27340886085151739, 0}, C{1, 0},
        C{1.0806929372216587, 0}},
       0.2, 0.2, 0.2},
      {"b4",
       {C{-1.7916799464575894, 0}, C{1, 0}, C{-0.16631932368296831, 0},
        C{-0.13664010708482105, 0}},
       -0.3, -0.3, -0.3},
      {"b5",
       {C{1, 0}, C{-1.1022909358384441, 0}, C{0.4, 0}, C{1.4743031194614802, 0}},
       0.1, 0.1, 0.1},
      {"b6",
       {C{-0.20185439910818703, 0}, C{-1.0539269066157826, 0},
        C{-0.15740899944261683, 0}, C{1.6972184013377194, 0}},
       0, 0, 0},
      {"b7",
       {C{0.7, 0}, C{1.3539999999999999, -1.7628057181663555}, C{2, 0},
        C{-1.1271999999999998, 2.1937137826070199}},
       0, 0.4, -0.4},
      {"b8",
       {C{-0.5855823048033113, 0}, C{1.2426756691045531, 0}, C{1.5, 0},
        C{0.60961179679779243, 0}},
       0.5, 0, 0},
      {"b9_deep",
       {C{-0.086129363171565165, -0.49067886415003792},
        C{-1.6065187825646259, 0.048758655742948853}, C{0.5, 0.1},
        C{1.1175195432042553, -0.15054700913291649}},
       C{0, 0.2}, 0, 0},
      {"b10",
       {C{0.98550000000000038, 2.947319078416859}, C{0.9, 0}, C{3, 0},
        C{1.1849999999999998, -1.7337171049510935}},
       1, 1, 1},
  };
  return pts;
}

}  // namespace fixtures
