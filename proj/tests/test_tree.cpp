#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "bowditch/tree.hpp"

using namespace bowditch;

namespace {

void all_vertices(std::size_t depth, const std::function<void(const VertexKey&)>& f) {
  std::function<void(const VertexKey&)> rec = [&](const VertexKey& v) {
    f(v);
    if (v.depth() == depth) return;
    for (int c = 1; c <= 4; ++c)
      if (c != v.last()) rec(v.step(c));
  };
  rec(VertexKey());
}

}  // namespace

TEST(VertexKey, Validation) {
  EXPECT_NO_THROW(VertexKey("1213"));
  EXPECT_THROW(VertexKey("11"), std::invalid_argument);
  EXPECT_THROW(VertexKey("15"), std::invalid_argument);
  EXPECT_THROW(VertexKey("a"), std::invalid_argument);
  EXPECT_EQ(VertexKey().str(), "()");
  EXPECT_EQ(parse_vertex("()"), VertexKey());
  EXPECT_EQ(parse_vertex("132"), VertexKey("132"));
  EXPECT_THROW(VertexKey().parent(), std::invalid_argument);
}

TEST(VertexKey, StepIsInvolution) {
  all_vertices(5, [](const VertexKey& v) {
    for (int c = 1; c <= 4; ++c) EXPECT_EQ(v.step(c).step(c), v);
  });
  EXPECT_EQ(VertexKey("13").step(3), VertexKey("1"));
  EXPECT_EQ(VertexKey("13").step(2), VertexKey("132"));
}

TEST(CanonicalRegion, Examples) {
  VertexKey v("132");
  EXPECT_EQ(canonical_region(v, 2).anchor, VertexKey("132"));
  EXPECT_EQ(canonical_region(v, 3).anchor, VertexKey("13"));
  EXPECT_EQ(canonical_region(v, 4).anchor, VertexKey());
}

TEST(CanonicalFace, Examples) {
  VertexKey v("142");
  EXPECT_EQ(canonical_face(v, 1, 2).anchor, VertexKey("142"));
  EXPECT_EQ(canonical_face(v, 1, 4).anchor, VertexKey("14"));
  EXPECT_EQ(canonical_face(v, 4, 1).anchor, VertexKey("14"));
  // The path "142" -> "14" keeps regions 3 and 4, so the {3,4} face enters
  // at "14".
  EXPECT_EQ(canonical_face(v, 3, 4).anchor, VertexKey("14"));
  EXPECT_EQ(canonical_face(VertexKey("12"), 1, 2).anchor, VertexKey("12"));
}

TEST(CanonicalRegion, InvariantAcrossOtherColors) {
  // A region of color c is the component of vertices joined by edges of
  // colors other than c.
  all_vertices(5, [](const VertexKey& v) {
    for (int c = 1; c <= 4; ++c)
      for (int e = 1; e <= 4; ++e) {
        bool same = canonical_region(v, c) == canonical_region(v.step(e), c);
        EXPECT_EQ(same, e != c) << v.str() << " c=" << c << " e=" << e;
      }
  });
}

TEST(CanonicalFace, InvariantAlongBoundary) {
  all_vertices(5, [](const VertexKey& v) {
    for (const FaceKey& f : faces_at(v)) {
      auto [k, l] = f.complement();
      EXPECT_EQ(canonical_face(v.step(k), f.i, f.j), f);
      EXPECT_EQ(canonical_face(v.step(l), f.i, f.j), f);
      EXPECT_NE(canonical_face(v.step(f.i), f.i, f.j), f);
      EXPECT_NE(canonical_face(v.step(f.j), f.i, f.j), f);
    }
  });
}

TEST(FacesAt, Order) {
  auto fs = faces_at(VertexKey());
  int want[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  for (int k = 0; k < 6; ++k) {
    EXPECT_EQ(fs[k].i, want[k][0]);
    EXPECT_EQ(fs[k].j, want[k][1]);
  }
  auto rs = regions_at(VertexKey("12"));
  EXPECT_EQ(rs[0].anchor, VertexKey("1"));
  EXPECT_EQ(rs[1].anchor, VertexKey("12"));
}

TEST(FaceWalk, Examples) {
  FaceKey f{VertexKey(), 1, 2};
  EXPECT_EQ(face_boundary_walk(f, VertexKey(), 1), VertexKey("3"));
  EXPECT_EQ(face_boundary_walk(f, VertexKey(), 2), VertexKey("34"));
  EXPECT_EQ(face_boundary_walk(f, VertexKey(), -1), VertexKey("4"));
  EXPECT_EQ(face_boundary_walk(f, VertexKey(), -2), VertexKey("43"));
  EXPECT_EQ(face_boundary_walk(f, VertexKey("34"), -2), VertexKey());
  EXPECT_THROW(face_position(f, VertexKey("1")), std::invalid_argument);
}

TEST(FaceWalk, PositionsRoundTrip) {
  all_vertices(3, [](const VertexKey& v) {
    for (const FaceKey& f : faces_at(v)) {
      FaceKey c = canonical_face(v, f.i, f.j);
      for (long n = -12; n <= 12; ++n) {
        VertexKey u = face_vertex(c, n);
        EXPECT_EQ(face_position(c, u), n);
        EXPECT_EQ(canonical_face(u, f.i, f.j), c);
        EXPECT_EQ(distance(u, face_vertex(c, n + 1)), 1u);
        auto [p, q] = edge_endpoints(face_edge(c, n));
        std::set<VertexKey> ends{p, q};
        EXPECT_EQ(ends, (std::set<VertexKey>{u, face_vertex(c, n + 1)}));
      }
    }
  });
}

TEST(Distance, Examples) {
  EXPECT_EQ(distance(VertexKey(), VertexKey("132")), 3u);
  EXPECT_EQ(distance(VertexKey("13"), VertexKey("132")), 1u);
  EXPECT_EQ(distance(VertexKey("12"), VertexKey("13")), 2u);
}

TEST(Edges, EndpointsAndSurrounding) {
  EXPECT_THROW(edge_to_parent(VertexKey()), std::invalid_argument);
  EdgeKey e = edge_at(VertexKey("12"), 3);
  EXPECT_EQ(e.child, VertexKey("123"));
  EXPECT_EQ(edge_at(VertexKey("12"), 2).child, VertexKey("12"));
  EXPECT_EQ(e.color(), 3);
  EdgeRegions s = edge_surrounding(e);
  EXPECT_EQ(s.delta, canonical_region(VertexKey("12"), 3));
  EXPECT_EQ(s.delta_prime, canonical_region(VertexKey("123"), 3));
  EXPECT_NE(s.delta, s.delta_prime);
  for (const RegionKey& r : s.around) {
    EXPECT_NE(r.color, 3);
    EXPECT_EQ(r, canonical_region(VertexKey("123"), r.color));
  }
}
