#pragma once

// Bowditch-set decision: steepest descent to the attracting region, closure
// over the level set of faces through their attracting arcs, and a
// tri-state verdict with a certificate or witness.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "bowditch/markoff.hpp"
#include "bowditch/tree.hpp"

namespace bowditch {

struct BqParams {
  std::optional<double> K;  // default 2 + M
  double tol_real = 1e-9;   // half-width of the band around [-2, 2]
  double tol_sigma = 1e-12;
  long max_descent_steps = 10000;
  long max_faces = 20000;
  long max_arc_steps = 5000;
  long max_total_edges = 100000;
};

// K actually used; throws std::invalid_argument when K < 2 + M or a budget
// is not positive.
double resolve_k(const BqParams& p, const BoundaryData& w);

bool region_in_level_set(const MarkoffMap& m, const RegionKey& r, double K);
bool face_in_level_set(const MarkoffMap& m, const FaceKey& f, double K);

struct Bq1Violation {
  FaceKey face;
  Complex value;
};
struct SigmaZero {
  FaceKey face;
  Complex sigma;
};
struct InfiniteArcEvidence {
  FaceKey face;
  std::string reason;
};
using Witness = std::variant<Bq1Violation, SigmaZero, InfiniteArcEvidence>;

// Band and sigma tests on a single face.
std::optional<Witness> face_witness(const MarkoffMap& m, const FaceKey& f,
                                    const BqParams& p);

enum class Budget { Descent, Faces, Arc, TotalEdges };
std::string to_string(Budget b);

struct SinkStop {
  VertexKey vertex;
  long steps = 0;
};
struct DescentTrace {
  std::vector<VertexKey> path;
};
using SinkResult = std::variant<SinkStop, Witness, DescentTrace>;

SinkResult find_sink(const MarkoffMap& m, const BqParams& p);

struct Arc {
  double h_star = 0.0;
  long n1 = 0, n2 = -1;  // edge index range of J; empty when n1 > n2
  std::vector<EdgeKey> edges;
  long walked = 0;  // edges evaluated
};
using ArcResult = std::variant<Arc, InfiniteArcEvidence, Budget>;

// Throws std::invalid_argument when f is not in the face level set.
ArcResult attracting_arc(const MarkoffMap& m, const FaceKey& f,
                         const BqParams& p);

struct AttractingTree {
  std::set<EdgeKey> edges;
  std::set<FaceKey> faces;
  std::map<FaceKey, std::pair<long, long>> arcs;
};

struct InBQ {
  AttractingTree tree;
};
struct NotBQ {
  Witness witness;
};
struct Undecided {
  Budget budget_hit;
};

struct BqVerdict {
  std::variant<InBQ, NotBQ, Undecided> result;
  double K = 0.0;
  long steps = 0;  // descent steps plus evaluated arc edges

  bool in_bq() const { return std::holds_alternative<InBQ>(result); }
  bool not_bq() const { return std::holds_alternative<NotBQ>(result); }
  bool undecided() const { return std::holds_alternative<Undecided>(result); }
};

BqVerdict decide_bq(const MarkoffMap& m, const BqParams& p = {});

std::string describe(const Witness& w);
std::string describe(const BqVerdict& v);

}  // namespace bowditch
