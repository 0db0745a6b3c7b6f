#include "bowditch/markoff.hpp"

#include <cmath>
#include <stdexcept>

namespace bowditch {

std::string to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Sink: return "Sink";
    case VertexClass::Merge: return "Merge";
    case VertexClass::Fork: return "Fork";
    case VertexClass::Source: return "Source";
  }
  return "?";
}

bool is_fork(VertexClass c) {
  return c == VertexClass::Fork || c == VertexClass::Source;
}

MarkoffMap::MarkoffMap(const MarkoffQuad& root) : root_(root) {
  memo_.emplace(VertexKey(), root_.values);
}

const Quad& MarkoffMap::quad_at(const VertexKey& v) const {
  if (auto it = memo_.find(v); it != memo_.end()) return it->second;
  // Longest memoized prefix, then walk forward.
  const std::string& w = v.word();
  std::size_t k = w.size();
  const Quad* q = nullptr;
  while (true) {
    --k;
    auto it = memo_.find(VertexKey(w.substr(0, k)));
    if (it != memo_.end()) {
      q = &it->second;
      break;
    }
  }
  Quad cur = *q;
  for (std::size_t s = k; s < w.size(); ++s) {
    cur = elementary_move(cur, root_.boundary, w[s] - '0');
    memo_.emplace(VertexKey(w.substr(0, s + 1)), cur);
  }
  return memo_.find(v)->second;
}

Quad MarkoffMap::quad_fresh(const VertexKey& v) const {
  Quad cur = root_.values;
  for (char ch : v.word()) cur = elementary_move(cur, root_.boundary, ch - '0');
  return cur;
}

Complex MarkoffMap::eval_region(const RegionKey& r) const {
  return quad_at(r.anchor)[r.color - 1];
}

Complex MarkoffMap::eval_face(const FaceKey& f) const {
  const Quad& q = quad_at(f.anchor);
  return face_value(q[f.i - 1], q[f.j - 1], lambda(root_.boundary, f.i, f.j));
}

Complex MarkoffMap::face_sigma(const FaceKey& f) const {
  return bowditch::face_sigma(quad_at(f.anchor), root_.boundary, f.i, f.j);
}

Arrow MarkoffMap::orient_edge(const EdgeKey& e) const {
  int l = e.color();
  if (l == 0) throw std::invalid_argument("edge key must be a non-root word");
  double d = std::abs(quad_at(e.child.parent())[l - 1]);
  double dp = std::abs(quad_at(e.child)[l - 1]);
  // Points toward the smaller region; ties (including Huge/Huge) go to the child.
  return dp > d ? Arrow::TowardParent : Arrow::TowardChild;
}

bool MarkoffMap::outgoing(const VertexKey& v, int c) const {
  Arrow a = orient_edge(edge_at(v, c));
  bool v_is_child = v.last() == c;
  return v_is_child ? a == Arrow::TowardParent : a == Arrow::TowardChild;
}

int MarkoffMap::outgoing_count(const VertexKey& v) const {
  int n = 0;
  for (int c = 1; c <= 4; ++c) n += outgoing(v, c);
  return n;
}

VertexClass MarkoffMap::classify_vertex(const VertexKey& v) const {
  switch (outgoing_count(v)) {
    case 0: return VertexClass::Sink;
    case 1: return VertexClass::Merge;
    case 4: return VertexClass::Source;
    default: return VertexClass::Fork;
  }
}

double vertex_relative_residual(const MarkoffMap& m, const VertexKey& v) {
  return relative_residual(m.quad_at(v), m.boundary());
}

}  // namespace bowditch
