#pragma once

// The 4-valent tree: vertices are reduced words over colors 1..4 (no letter
// repeated consecutively), the root is the empty word. Crossing the edge of
// color c changes only the region of color c.

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace bowditch {

// Reduced word over '1'..'4'.
class VertexKey {
 public:
  VertexKey() = default;
  // Throws std::invalid_argument unless w is a reduced word over '1'..'4'.
  explicit VertexKey(std::string w);

  const std::string& word() const { return word_; }
  std::size_t depth() const { return word_.size(); }
  bool is_root() const { return word_.empty(); }
  // Color of the edge to the parent; 0 at the root.
  int last() const { return word_.empty() ? 0 : word_.back() - '0'; }
  VertexKey parent() const;
  // Neighbor across the edge of color c.
  VertexKey step(int c) const;
  std::string str() const { return word_.empty() ? "()" : word_; }

  auto operator<=>(const VertexKey&) const = default;

 private:
  std::string word_;
};

// Region of color c through the anchor; canonical when the anchor has no
// trailing letter other than c.
struct RegionKey {
  VertexKey anchor;
  int color = 0;
  auto operator<=>(const RegionKey&) const = default;
};

// Face shared by the regions of colors i < j; canonical when the anchor has
// no trailing letter outside {i, j}. Its boundary geodesic alternates the
// two complementary colors.
struct FaceKey {
  VertexKey anchor;
  int i = 0, j = 0;
  auto operator<=>(const FaceKey&) const = default;
  // Complementary colors k < l.
  std::pair<int, int> complement() const;
};

// Edge identified by its endpoint farther from the root; color = last letter.
struct EdgeKey {
  VertexKey child;
  auto operator<=>(const EdgeKey&) const = default;
  int color() const { return child.last(); }
  VertexKey parent() const { return child.parent(); }
};

RegionKey canonical_region(const VertexKey& v, int color);
FaceKey canonical_face(const VertexKey& v, int i, int j);

std::array<RegionKey, 4> regions_at(const VertexKey& v);
std::array<FaceKey, 6> faces_at(const VertexKey& v);

// Throws std::invalid_argument for the root.
EdgeKey edge_to_parent(const VertexKey& v);
// Edge between v and its neighbor across color c.
EdgeKey edge_at(const VertexKey& v, int c);
std::pair<VertexKey, VertexKey> edge_endpoints(const EdgeKey& e);

// Regions around an edge of color l: the three of colors != l, then the
// color-l region at the parent (delta) and at the child (delta').
struct EdgeRegions {
  std::array<RegionKey, 3> around;
  RegionKey delta, delta_prime;
};
EdgeRegions edge_surrounding(const EdgeKey& e);

// Signed position of v on the boundary of f; throws std::invalid_argument
// when v is not on f.
long face_position(const FaceKey& f, const VertexKey& v);
// Vertex at signed position n on the boundary of f.
VertexKey face_vertex(const FaceKey& f, long n);
// Vertex reached from start after the given number of steps along f.
VertexKey face_boundary_walk(const FaceKey& f, const VertexKey& start,
                             long steps);
// Edge between positions n and n + 1 on f.
EdgeKey face_edge(const FaceKey& f, long n);

std::size_t distance(const VertexKey& u, const VertexKey& v);

// Parses "()" or "" as the root.
VertexKey parse_vertex(const std::string& s);

}  // namespace bowditch

template <>
struct std::hash<bowditch::VertexKey> {
  std::size_t operator()(const bowditch::VertexKey& v) const noexcept {
    return std::hash<std::string>{}(v.word());
  }
};

template <>
struct std::hash<bowditch::FaceKey> {
  std::size_t operator()(const bowditch::FaceKey& f) const noexcept {
    return std::hash<std::string>{}(f.anchor.word()) * 31 +
           static_cast<std::size_t>(f.i * 5 + f.j);
  }
};

template <>
struct std::hash<bowditch::EdgeKey> {
  std::size_t operator()(const bowditch::EdgeKey& e) const noexcept {
    return std::hash<std::string>{}(e.child.word());
  }
};
