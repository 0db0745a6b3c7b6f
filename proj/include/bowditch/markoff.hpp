#pragma once

// Markoff map: region values on the tree generated from a root quad by
// elementary moves, with edge orientation and vertex classes.

#include <array>
#include <string>
#include <unordered_map>

#include "bowditch/algebra.hpp"
#include "bowditch/tree.hpp"

namespace bowditch {

enum class Arrow { TowardParent, TowardChild };
enum class VertexClass { Sink, Merge, Fork, Source };

std::string to_string(VertexClass c);
bool is_fork(VertexClass c);

// Not thread-safe: the quad memo is mutated on reads. Use one per worker.
class MarkoffMap {
 public:
  explicit MarkoffMap(const MarkoffQuad& root);

  const BoundaryData& boundary() const { return root_.boundary; }
  const MarkoffQuad& root() const { return root_; }

  // Quad at a vertex; memoized along shared prefixes.
  const Quad& quad_at(const VertexKey& v) const;
  // Same value without the memo (bitwise identical to quad_at).
  Quad quad_fresh(const VertexKey& v) const;

  Complex eval_region(const RegionKey& r) const;
  Complex eval_face(const FaceKey& f) const;
  Complex face_sigma(const FaceKey& f) const;

  Arrow orient_edge(const EdgeKey& e) const;
  // True when the edge at v of color c points away from v.
  bool outgoing(const VertexKey& v, int c) const;
  int outgoing_count(const VertexKey& v) const;
  VertexClass classify_vertex(const VertexKey& v) const;

  std::size_t memo_size() const { return memo_.size(); }

 private:
  MarkoffQuad root_;
  mutable std::unordered_map<VertexKey, Quad> memo_;
};

// Relative residual of the quad at v.
double vertex_relative_residual(const MarkoffMap& m, const VertexKey& v);

}  // namespace bowditch
