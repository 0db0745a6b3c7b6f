#include "bowditch/bq.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bowditch/h_function.hpp"

namespace bowditch {

static constexpr double kInf = std::numeric_limits<double>::infinity();

double resolve_k(const BqParams& p, const BoundaryData& w) {
  if (p.max_descent_steps <= 0 || p.max_faces <= 0 || p.max_arc_steps <= 0 ||
      p.max_total_edges <= 0)
    throw std::invalid_argument("budgets must be positive");
  double k0 = 2.0 + w.M;
  if (!p.K) return k0;
  if (!(*p.K >= k0)) throw std::invalid_argument("K must be at least 2 + M");
  return *p.K;
}

bool region_in_level_set(const MarkoffMap& m, const RegionKey& r, double K) {
  return std::abs(m.eval_region(r)) < K;
}

bool face_in_level_set(const MarkoffMap& m, const FaceKey& f, double K) {
  const Quad& q = m.quad_at(f.anchor);
  if (!(std::abs(q[f.i - 1]) < K) && !(std::abs(q[f.j - 1]) < K)) return false;
  return std::abs(m.eval_face(f)) < K * K + m.boundary().M;
}

std::optional<Witness> face_witness(const MarkoffMap& m, const FaceKey& f,
                                    const BqParams& p) {
  Complex v = m.eval_face(f);
  if (is_huge(v)) return std::nullopt;
  if (distance_to_band(v) <= p.tol_real) return Bq1Violation{f, v};
  Complex s = m.face_sigma(f);
  if (!is_huge(s) && std::abs(s) < p.tol_sigma) return SigmaZero{f, s};
  return std::nullopt;
}

std::string to_string(Budget b) {
  switch (b) {
    case Budget::Descent: return "descent";
    case Budget::Faces: return "faces";
    case Budget::Arc: return "arc";
    case Budget::TotalEdges: return "total_edges";
  }
  return "?";
}

static bool has_level_face(const MarkoffMap& m, const VertexKey& v, double K) {
  for (const FaceKey& f : faces_at(v))
    if (face_in_level_set(m, f, K)) return true;
  return false;
}

SinkResult find_sink(const MarkoffMap& m, const BqParams& p) {
  double K = resolve_k(p, m.boundary());
  VertexKey v;
  DescentTrace trace;
  for (long step = 0;; ++step) {
    trace.path.push_back(v);
    for (const FaceKey& f : faces_at(v))
      if (auto w = face_witness(m, f, p)) return *w;
    if (has_level_face(m, v, K)) return SinkStop{v, step};
    int best = 0;
    double best_mod = kInf;
    for (int c = 1; c <= 4; ++c) {
      if (!m.outgoing(v, c)) continue;
      double far = std::abs(m.quad_at(v.step(c))[c - 1]);
      if (best == 0 || far < best_mod) {
        best = c;
        best_mod = far;
      }
    }
    if (best == 0) return SinkStop{v, step};
    if (step >= p.max_descent_steps) return trace;
    v = v.step(best);
  }
}

// Third-region value of edge n on f.
static Complex third_value(const MarkoffMap& m, const FaceKey& f, long n,
                           int k, int l) {
  EdgeKey e = face_edge(f, n);
  int other = e.color() == k ? l : k;
  return m.quad_at(e.child)[other - 1];
}

ArcResult attracting_arc(const MarkoffMap& m, const FaceKey& f,
                         const BqParams& p) {
  double K = resolve_k(p, m.boundary());
  if (!face_in_level_set(m, f, K))
    throw std::invalid_argument("face is not in the level set");
  if (distance_to_band(m.eval_face(f)) <= p.tol_real)
    return InfiniteArcEvidence{f, "face value in [-2,2]"};
  Complex s = m.face_sigma(f);
  if (!is_huge(s) && std::abs(s) < p.tol_sigma)
    return InfiniteArcEvidence{f, "sigma is zero"};
  double hs = h_star(m, f, K, p.tol_real, 0.0);
  // The z-sequence uses H with Q and R swapped; keep the larger threshold.
  {
    HOutputs hp = h_prime(face_h_inputs(m.quad_at(f.anchor), m.boundary(),
                                        f.i, f.j),
                          p.tol_real, 0.0);
    if (!std::isfinite(hp.H)) hs = kInf;
    hs = std::max(hs, hp.H);
  }
  if (!std::isfinite(hs)) return InfiniteArcEvidence{f, "H* is infinite"};

  auto [k, l] = f.complement();
  Arc arc;
  arc.h_star = hs;
  std::vector<long> in_j;
  for (int dir : {1, -1}) {
    // moduli of the last two values of each alternating sequence
    double prev[2] = {kInf, kInf}, prev2[2] = {kInf, kInf};
    for (long t = 0;; ++t) {
      if (t > p.max_arc_steps) return Budget::Arc;
      long n = dir == 1 ? t : -1 - t;
      double v = std::abs(third_value(m, f, n, k, l));
      ++arc.walked;
      if (v < hs) in_j.push_back(n);
      int par = static_cast<int>(t % 2);
      prev2[par] = prev[par];
      prev[par] = v;
      if (t >= 3) {
        bool done = true;
        for (int q = 0; q < 2; ++q)
          done = done && prev[q] > hs && prev[q] > prev2[q];
        if (done) break;
      }
    }
  }
  std::sort(in_j.begin(), in_j.end());
  if (!in_j.empty()) {
    arc.n1 = in_j.front();
    arc.n2 = in_j.back();
  }
  for (long n : in_j) arc.edges.push_back(face_edge(f, n));
  return arc;
}

BqVerdict decide_bq(const MarkoffMap& m, const BqParams& p) {
  BqVerdict out;
  out.K = resolve_k(p, m.boundary());
  const double K = out.K;

  SinkResult sink = find_sink(m, p);
  if (auto* w = std::get_if<Witness>(&sink)) {
    out.result = NotBQ{*w};
    return out;
  }
  if (auto* t = std::get_if<DescentTrace>(&sink)) {
    out.steps = static_cast<long>(t->path.size());
    out.result = Undecided{Budget::Descent};
    return out;
  }
  const SinkStop& stop = std::get<SinkStop>(sink);
  out.steps = stop.steps;

  AttractingTree tree;
  std::deque<FaceKey> queue;
  std::set<FaceKey> seen;
  auto offer = [&](const VertexKey& v) {
    for (const FaceKey& f : faces_at(v))
      if (!seen.count(f) && face_in_level_set(m, f, K)) {
        seen.insert(f);
        queue.push_back(f);
      }
  };
  offer(stop.vertex);

  while (!queue.empty()) {
    FaceKey f = queue.front();
    queue.pop_front();
    if (static_cast<long>(tree.faces.size()) >= p.max_faces) {
      out.result = Undecided{Budget::Faces};
      return out;
    }
    if (auto w = face_witness(m, f, p)) {
      out.result = NotBQ{*w};
      return out;
    }
    ArcResult ar = attracting_arc(m, f, p);
    if (auto* e = std::get_if<InfiniteArcEvidence>(&ar)) {
      out.result = NotBQ{*e};
      return out;
    }
    if (auto* b = std::get_if<Budget>(&ar)) {
      out.result = Undecided{*b};
      return out;
    }
    const Arc& arc = std::get<Arc>(ar);
    out.steps += arc.walked;
    if (out.steps > p.max_total_edges) {
      out.result = Undecided{Budget::TotalEdges};
      return out;
    }
    tree.faces.insert(f);
    tree.arcs[f] = {arc.n1, arc.n2};
    for (const EdgeKey& e : arc.edges) {
      tree.edges.insert(e);
      auto [a, b] = edge_endpoints(e);
      offer(a);
      offer(b);
    }
  }
  out.result = InBQ{std::move(tree)};
  return out;
}

std::string describe(const Witness& w) {
  std::ostringstream os;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        os << "face {" << x.face.i << "," << x.face.j << "}@"
           << x.face.anchor.str();
        if constexpr (std::is_same_v<T, Bq1Violation>)
          os << " BQ1 value " << format_complex(x.value);
        else if constexpr (std::is_same_v<T, SigmaZero>)
          os << " sigma " << format_complex(x.sigma);
        else
          os << " infinite arc (" << x.reason << ")";
      },
      w);
  return os.str();
}

std::string describe(const BqVerdict& v) {
  std::ostringstream os;
  if (auto* in = std::get_if<InBQ>(&v.result))
    os << "InBQ tree_edges=" << in->tree.edges.size()
       << " faces=" << in->tree.faces.size();
  else if (auto* no = std::get_if<NotBQ>(&v.result))
    os << "NotBQ " << describe(no->witness);
  else
    os << "Undecided budget="
       << to_string(std::get<Undecided>(v.result).budget_hit);
  os << " K=" << v.K << " steps=" << v.steps;
  return os.str();
}

}  // namespace bowditch
