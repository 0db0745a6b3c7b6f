#include "bowditch/fibonacci.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bowditch {

int face_slot(int i, int j) {
  if (i > j) std::swap(i, j);
  static constexpr int slot[5][5] = {{-1, -1, -1, -1, -1},
                                     {-1, -1, 0, 1, 2},
                                     {-1, -1, -1, 3, 4},
                                     {-1, -1, -1, -1, 5},
                                     {-1, -1, -1, -1, -1}};
  if (i < 1 || j > 4 || i == j) throw std::invalid_argument("bad face colors");
  return slot[i][j];
}

FibTable::FibTable(EdgeKey base, std::size_t max_depth)
    : base_(std::move(base)), max_depth_(max_depth) {
  int l = base_.color();
  if (l == 0) throw std::invalid_argument("base edge must be a non-root word");
  int r = 1;
  for (int c = 1; c <= 4; ++c)
    if (c != l) role_[c] = r++;
  role_[l] = 4;
}

FibState FibTable::initial_state(int l) {
  FibState s;
  for (int c = 1; c <= 4; ++c) s.regions[c - 1] = c == l ? 3 : 1;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      s.faces[face_slot(i, j)] = (i == l || j == l) ? 4 : 2;
  return s;
}

void FibTable::cross(FibState& s, int c) {
  auto& R = s.regions;
  R[c - 1] = R[0] + R[1] + R[2] + R[3] - R[c - 1];
  for (int m = 1; m <= 4; ++m) {
    if (m == c) continue;
    // The new face {c, m} sums the two faces through m not containing c.
    std::uint64_t sum = 0;
    for (int k = 1; k <= 4; ++k)
      if (k != c && k != m) sum += s.faces[face_slot(m, k)];
    s.faces[face_slot(c, m)] = sum;
  }
}

std::pair<bool, std::string> FibTable::path_from_base(
    const VertexKey& v) const {
  const std::string& w = v.word();
  const std::string& child = base_.child.word();
  if (w.compare(0, child.size(), child) == 0 && w.size() >= child.size())
    return {true, w.substr(child.size())};
  const std::string& p = base_.child.parent().word();
  std::size_t lca = 0;
  while (lca < p.size() && lca < w.size() && p[lca] == w[lca]) ++lca;
  std::string path;
  for (std::size_t k = p.size(); k > lca; --k) path.push_back(p[k - 1]);
  path += w.substr(lca);
  return {false, path};
}

FibState FibTable::state_at(const VertexKey& v) const {
  FibState s = initial_state(base_.color());
  for (char ch : path_from_base(v).second) cross(s, ch - '0');
  return s;
}

std::uint64_t FibTable::fib_region(const RegionKey& r) const {
  return state_at(r.anchor).regions[r.color - 1];
}

std::uint64_t FibTable::fib_face(const FaceKey& f) const {
  return state_at(f.anchor).faces[face_slot(f.i, f.j)];
}

bool FibTable::is_base(const RegionKey& r) const {
  int l = base_.color();
  return r.color != l && canonical_region(base_.child, r.color) == r;
}

bool FibTable::is_base(const FaceKey& f) const {
  int l = base_.color();
  return f.i != l && f.j != l && canonical_face(base_.child, f.i, f.j) == f;
}

Involution FibTable::role_of(int color) const {
  static constexpr Involution roles[5] = {Involution::D, Involution::A,
                                          Involution::B, Involution::C,
                                          Involution::D};
  return roles[role_[color]];
}

Automorphism FibTable::frame(const VertexKey& v) const {
  auto [child_side, path] = path_from_base(v);
  Automorphism phi;
  if (child_side) phi = named_involution(Involution::D);
  for (char ch : path) phi = compose(phi, named_involution(role_of(ch - '0')));
  return phi;
}

FreeWord FibTable::base_region_word(int color) const {
  static const char* words[5] = {"", "A", "B", "C", "ABC"};
  return FreeWord::parse(words[role_[color]]);
}

FreeWord FibTable::base_face_word(int i, int j) const {
  int a = role_[i], b = role_[j];
  if (a > b) std::swap(a, b);
  static const char* words[5][5] = {{"", "", "", "", ""},
                                    {"", "", "Ab", "Ac", "AABC"},
                                    {"", "", "", "Bc", "BCAB"},
                                    {"", "", "", "", "CABC"},
                                    {"", "", "", "", ""}};
  return FreeWord::parse(words[a][b]);
}

FreeWord FibTable::word_rep(const RegionKey& r) const {
  if (r.anchor.depth() > max_depth_)
    throw std::out_of_range("region beyond the generated depth");
  return cyclic_reduce(frame(r.anchor).apply(base_region_word(r.color)));
}

FreeWord FibTable::word_rep(const FaceKey& f) const {
  if (f.anchor.depth() > max_depth_)
    throw std::out_of_range("face beyond the generated depth");
  return cyclic_reduce(frame(f.anchor).apply(base_face_word(f.i, f.j)));
}

void FibTable::for_each_vertex(
    std::size_t depth,
    const std::function<void(const VertexKey&, const FibState&,
                             const Automorphism&)>& visit) const {
  // Each lift is an involution, so frames compose along any path.
  std::function<void(const VertexKey&, const Automorphism&)> rec =
      [&](const VertexKey& v, const Automorphism& phi) {
        visit(v, state_at(v), phi);
        if (v.depth() == depth) return;
        for (int c = 1; c <= 4; ++c)
          if (c != v.last())
            rec(v.step(c), compose(phi, named_involution(role_of(c))));
      };
  rec(VertexKey(), frame(VertexKey()));
}

double log_plus(Complex v) {
  double a = std::abs(v);
  return a > 1.0 ? std::log(a) : 0.0;
}

Complex trace_length(Complex t) { return 2.0 * std::acosh(t / 2.0); }

GrowthReport growth_report(const MarkoffMap& m, const FibTable& t,
                           std::size_t depth) {
  if (depth < 2) throw std::invalid_argument("depth must be at least 2");
  GrowthReport rep;
  rep.kappa_lower = std::numeric_limits<double>::infinity();
  rep.kappa_upper = 0.0;
  auto consider = [&](double lp, std::uint64_t F, auto key) {
    double ratio = lp / static_cast<double>(F);
    ++rep.evaluated;
    if (ratio < rep.kappa_lower) {
      rep.kappa_lower = ratio;
      rep.argmin = key;
    }
    rep.kappa_upper = std::max(rep.kappa_upper, ratio);
  };
  std::function<void(const VertexKey&)> rec = [&](const VertexKey& v) {
    const Quad& q = m.quad_at(v);
    FibState s = t.state_at(v);
    bool any_huge = false;
    for (Complex x : q) any_huge = any_huge || is_huge(x);
    if (!any_huge)
      for (int i = 0; i < 4; ++i) {
        double rhs = std::log(32.0);
        for (int j = 0; j < 4; ++j)
          if (j != i) rhs += log_plus(q[j]);
        if (log_plus(q[i]) > rhs * (1.0 + 1e-12)) ++rep.upper_bound_violations;
      }
    // Regions and faces anchored here.
    for (int c = 1; c <= 4; ++c) {
      if (!v.is_root() && c != v.last()) continue;
      RegionKey r{v, c};
      if (t.is_base(r)) continue;
      if (is_huge(q[c - 1])) {
        ++rep.skipped_huge;
        continue;
      }
      consider(log_plus(q[c - 1]), s.regions[c - 1], r);
    }
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        if (!v.is_root() && i != v.last() && j != v.last()) continue;
        FaceKey f{v, i, j};
        if (t.is_base(f)) continue;
        Complex fv = m.eval_face(f);
        if (is_huge(fv)) {
          ++rep.skipped_huge;
          continue;
        }
        consider(log_plus(fv), s.faces[face_slot(i, j)], f);
      }
    if (v.depth() == depth) return;
    for (int c = 1; c <= 4; ++c)
      if (c != v.last()) rec(v.step(c));
  };
  rec(VertexKey());
  return rep;
}

}  // namespace bowditch
