#include "bowditch/tree.hpp"

#include <stdexcept>

namespace bowditch {

static void check_color(int c) {
  if (c < 1 || c > 4) throw std::invalid_argument("color out of range");
}

VertexKey::VertexKey(std::string w) : word_(std::move(w)) {
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (word_[k] < '1' || word_[k] > '4')
      throw std::invalid_argument("bad letter in vertex word '" + word_ + "'");
    if (k > 0 && word_[k] == word_[k - 1])
      throw std::invalid_argument("vertex word not reduced '" + word_ + "'");
  }
}

VertexKey VertexKey::parent() const {
  if (word_.empty()) throw std::invalid_argument("root has no parent");
  VertexKey p;
  p.word_ = word_.substr(0, word_.size() - 1);
  return p;
}

VertexKey VertexKey::step(int c) const {
  check_color(c);
  if (last() == c) return parent();
  VertexKey n;
  n.word_ = word_ + static_cast<char>('0' + c);
  return n;
}

std::pair<int, int> FaceKey::complement() const {
  int k = 0, l = 0;
  for (int c = 1; c <= 4; ++c) {
    if (c == i || c == j) continue;
    (k == 0 ? k : l) = c;
  }
  return {k, l};
}

RegionKey canonical_region(const VertexKey& v, int color) {
  check_color(color);
  std::string w = v.word();
  while (!w.empty() && w.back() - '0' != color) w.pop_back();
  return {VertexKey(std::move(w)), color};
}

FaceKey canonical_face(const VertexKey& v, int i, int j) {
  check_color(i);
  check_color(j);
  if (i == j) throw std::invalid_argument("face needs two distinct colors");
  if (i > j) std::swap(i, j);
  std::string w = v.word();
  while (!w.empty() && w.back() - '0' != i && w.back() - '0' != j) w.pop_back();
  return {VertexKey(std::move(w)), i, j};
}

std::array<RegionKey, 4> regions_at(const VertexKey& v) {
  return {canonical_region(v, 1), canonical_region(v, 2),
          canonical_region(v, 3), canonical_region(v, 4)};
}

std::array<FaceKey, 6> faces_at(const VertexKey& v) {
  return {canonical_face(v, 1, 2), canonical_face(v, 1, 3),
          canonical_face(v, 1, 4), canonical_face(v, 2, 3),
          canonical_face(v, 2, 4), canonical_face(v, 3, 4)};
}

EdgeKey edge_to_parent(const VertexKey& v) {
  if (v.is_root()) throw std::invalid_argument("root has no parent edge");
  return {v};
}

EdgeKey edge_at(const VertexKey& v, int c) {
  check_color(c);
  if (v.last() == c) return {v};
  return {v.step(c)};
}

std::pair<VertexKey, VertexKey> edge_endpoints(const EdgeKey& e) {
  return {e.child.parent(), e.child};
}

EdgeRegions edge_surrounding(const EdgeKey& e) {
  int l = e.color();
  if (l == 0) throw std::invalid_argument("edge key must be a non-root word");
  VertexKey p = e.child.parent();
  EdgeRegions out;
  int n = 0;
  for (int c = 1; c <= 4; ++c)
    if (c != l) out.around[n++] = canonical_region(p, c);
  out.delta = canonical_region(p, l);
  out.delta_prime = canonical_region(e.child, l);
  return out;
}

long face_position(const FaceKey& f, const VertexKey& v) {
  if (canonical_face(v, f.i, f.j) != f)
    throw std::invalid_argument("vertex " + v.str() + " is not on the face");
  const std::string& w = v.word();
  long len = static_cast<long>(w.size() - f.anchor.depth());
  if (len == 0) return 0;
  int first = w[f.anchor.depth()] - '0';
  return first == f.complement().first ? len : -len;
}

VertexKey face_vertex(const FaceKey& f, long n) {
  auto [k, l] = f.complement();
  std::string w = f.anchor.word();
  int a = n > 0 ? k : l, b = n > 0 ? l : k;
  long len = n > 0 ? n : -n;
  for (long s = 0; s < len; ++s) w.push_back(static_cast<char>('0' + (s % 2 == 0 ? a : b)));
  return VertexKey(std::move(w));
}

VertexKey face_boundary_walk(const FaceKey& f, const VertexKey& start,
                             long steps) {
  return face_vertex(f, face_position(f, start) + steps);
}

EdgeKey face_edge(const FaceKey& f, long n) {
  // The endpoint farther from the anchor is the child.
  return {n >= 0 ? face_vertex(f, n + 1) : face_vertex(f, n)};
}

std::size_t distance(const VertexKey& u, const VertexKey& v) {
  const std::string &a = u.word(), &b = v.word();
  std::size_t p = 0;
  while (p < a.size() && p < b.size() && a[p] == b[p]) ++p;
  return (a.size() - p) + (b.size() - p);
}

VertexKey parse_vertex(const std::string& s) {
  if (s == "()" || s.empty()) return VertexKey();
  return VertexKey(s);
}

}  // namespace bowditch
