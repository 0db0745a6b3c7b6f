#include "bowditch/sl2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bowditch {

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
          c * o.b + d * o.d};
}

Mat2 Mat2::inverse() const { return {d, -b, -c, a}; }

Mat2 SL2Triple::eval(const FreeWord& w) const {
  Mat2 out;
  for (auto x : w.letters())
    out = out * (x > 0 ? m[x - 1] : m[-x - 1].inverse());
  return out;
}

const std::array<FreeWord, 7>& coordinate_words() {
  static const std::array<FreeWord, 7> words = {
      FreeWord::parse("A"),  FreeWord::parse("B"),  FreeWord::parse("C"),
      FreeWord::parse("ABC"), FreeWord::parse("AB"), FreeWord::parse("BC"),
      FreeWord::parse("AC")};
  return words;
}

CharacterPoint SL2Triple::character() const {
  std::array<Complex, 7> t;
  for (int k = 0; k < 7; ++k) t[k] = trace(coordinate_words()[k]);
  return CharacterPoint(t[0], t[1], t[2], t[3], t[4], t[5], t[6]);
}

double irreducibility_score(const Mat2& A, const Mat2& B) {
  return std::abs((A * B * A.inverse() * B.inverse()).trace() - 2.0);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

static Mat2 sample_sl2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    Mat2 m{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)},
           {u(rng), u(rng)}};
    Complex det = m.det();
    if (std::abs(det) < 1e-3) continue;
    Complex s = std::sqrt(det);
    return {m.a / s, m.b / s, m.c / s, m.d / s};
  }
}

SL2Triple sample_sl2_triple(std::mt19937_64& rng) {
  while (true) {
    SL2Triple t;
    for (auto& mm : t.m) mm = sample_sl2(rng);
    t.irreducibility = irreducibility_score(t.m[0], t.m[1]);
    if (t.irreducibility >= 1e-3) return t;
  }
}

SL2Triple lift(const CharacterPoint& pt, double tol) {
  const Complex a = pt.a, b = pt.b, c = pt.c, x = pt.x, y = pt.y, z = pt.z;
  // M_A = [[l, 1], [0, 1/l]], M_B = [[m, 0], [r, 1/m]]
  Complex l = (a + std::sqrt(a * a - 4.0)) / 2.0;
  Complex mu = (b + std::sqrt(b * b - 4.0)) / 2.0;
  if (std::abs(l) < 1e-12 || std::abs(mu) < 1e-12)
    throw std::domain_error("degenerate eigenvalue in lift");
  Complex li = 1.0 / l, mi = 1.0 / mu;
  Complex r = x - l * mu - li * mi;
  if (std::abs(r) < 1e-10)
    throw std::domain_error("point is on the reducible locus");
  // M_C = [[c1, c2], [c3, c - c1]] with tr(AC) = z, tr(BC) = y, det = 1.
  // c3 = z - c/l - (l - 1/l) c1, c2 = (y - c/m - (m - 1/m) c1) / r
  Complex p3 = z - li * c, q3 = -(l - li);
  Complex p2 = (y - mi * c) / r, q2 = -(mu - mi) / r;
  // c1 (c - c1) - (p2 + q2 c1)(p3 + q3 c1) - 1 = 0
  Complex A2 = -1.0 - q2 * q3;
  Complex A1 = c - p2 * q3 - q2 * p3;
  Complex A0 = -p2 * p3 - 1.0;
  std::array<Complex, 2> roots;
  if (std::abs(A2) < 1e-14) {
    if (std::abs(A1) < 1e-14) throw std::domain_error("lift is degenerate");
    roots = {-A0 / A1, -A0 / A1};
  } else {
    Complex s = std::sqrt(A1 * A1 - 4.0 * A2 * A0);
    roots = {(-A1 + s) / (2.0 * A2), (-A1 - s) / (2.0 * A2)};
  }
  SL2Triple best;
  double best_err = -1.0;
  for (Complex c1 : roots) {
    SL2Triple t;
    t.m[0] = {l, 1.0, 0.0, li};
    t.m[1] = {mu, 0.0, r, mi};
    t.m[2] = {c1, p2 + q2 * c1, p3 + q3 * c1, c - c1};
    CharacterPoint ch = t.character();
    double err = 0.0;
    auto want = pt.coords();
    auto got = ch.coords();
    for (int k = 0; k < 7; ++k)
      err = std::max(err, std::abs(want[k] - got[k]) / (1.0 + std::abs(want[k])));
    if (best_err < 0.0 || err < best_err) {
      best = t;
      best_err = err;
    }
  }
  if (best_err > tol) throw std::domain_error("lift does not reproduce traces");
  best.irreducibility = irreducibility_score(best.m[0], best.m[1]);
  return best;
}

SL2Triple pullback(const Automorphism& f, const SL2Triple& t) {
  SL2Triple out;
  for (int g = 1; g <= 3; ++g) out.m[g - 1] = t.eval(f.image(g));
  out.irreducibility = irreducibility_score(out.m[0], out.m[1]);
  return out;
}

CharacterPoint induced_character_map(const Automorphism& f,
                                     const CharacterPoint& pt) {
  return pullback(f, lift(pt)).character();
}

double character_agree(const Automorphism& f, const Automorphism& g,
                       int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(t));
    SL2Triple s = sample_sl2_triple(rng);
    SL2Triple pf = pullback(f, s), pg = pullback(g, s);
    for (const FreeWord& w : coordinate_words())
      worst = std::max(worst, std::abs(pf.trace(w) - pg.trace(w)));
  }
  return worst;
}

}  // namespace bowditch
