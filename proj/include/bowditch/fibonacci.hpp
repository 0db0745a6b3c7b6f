#pragma once

// Fibonacci functions F_e on regions and faces relative to a base edge e,
// word representatives whose lengths realize F_e, and growth diagnostics.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "bowditch/free_group.hpp"
#include "bowditch/markoff.hpp"
#include "bowditch/tree.hpp"

namespace bowditch {

// Face slot for colors i < j: {1,2},{1,3},{1,4},{2,3},{2,4},{3,4}.
int face_slot(int i, int j);

struct FibState {
  std::array<std::uint64_t, 4> regions{};
  std::array<std::uint64_t, 6> faces{};
};

// Stateless after construction; safe to share between threads.
class FibTable {
 public:
  explicit FibTable(EdgeKey base = EdgeKey{VertexKey("4")},
                    std::size_t max_depth = 12);

  const EdgeKey& base_edge() const { return base_; }
  std::size_t max_depth() const { return max_depth_; }

  FibState state_at(const VertexKey& v) const;
  std::uint64_t fib_region(const RegionKey& r) const;
  std::uint64_t fib_face(const FaceKey& f) const;

  bool is_base(const RegionKey& r) const;
  bool is_base(const FaceKey& f) const;

  // phi_v: the automorphism taking base words to words at v.
  Automorphism frame(const VertexKey& v) const;
  // Throws std::out_of_range past max_depth.
  FreeWord word_rep(const RegionKey& r) const;
  FreeWord word_rep(const FaceKey& f) const;

  // Word at the base parent vertex for a region color / face pair.
  FreeWord base_region_word(int color) const;
  FreeWord base_face_word(int i, int j) const;

  // Depth-first walk over all vertices of depth <= depth with the F state
  // and frame carried along.
  void for_each_vertex(
      std::size_t depth,
      const std::function<void(const VertexKey&, const FibState&,
                               const Automorphism&)>& visit) const;

 private:
  // Colors crossed from the base start vertex to v, and whether the walk
  // starts at the child endpoint.
  std::pair<bool, std::string> path_from_base(const VertexKey& v) const;
  Involution role_of(int color) const;
  static FibState initial_state(int l);
  static void cross(FibState& s, int c);

  EdgeKey base_;
  std::size_t max_depth_;
  std::array<int, 5> role_{};  // color -> 1..4 (A, B, C, product)
};

struct GrowthReport {
  double kappa_lower = 0.0, kappa_upper = 0.0;
  std::variant<RegionKey, FaceKey> argmin;
  long evaluated = 0;
  long skipped_huge = 0;
  long upper_bound_violations = 0;  // per-vertex log 32 inequality
};

// Throws std::invalid_argument when depth < 2.
GrowthReport growth_report(const MarkoffMap& m, const FibTable& t,
                           std::size_t depth);

// max(log|v|, 0).
double log_plus(Complex v);

// L = 2 arccosh(t / 2), principal branch.
Complex trace_length(Complex t);

}  // namespace bowditch
