#include "bowditch/h_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bowditch {

static constexpr double kInf = std::numeric_limits<double>::infinity();

double distance_to_band(Complex v) {
  double re = v.real();
  double dx = re < -2.0 ? -2.0 - re : (re > 2.0 ? re - 2.0 : 0.0);
  return std::hypot(dx, v.imag());
}

HOutputs h_value(const HInputs& in, double real_tol, double zero_tol) {
  HOutputs out;
  const Complex X = in.X, Q = in.Q, R = in.R, S = in.S;
  Complex u = X * X - 2.0;
  Complex s = std::sqrt(u * u - 4.0);
  Complex l1 = (u + s) / 2.0, l2 = (u - s) / 2.0;
  out.lambda = std::abs(l1) >= std::abs(l2) ? l1 : l2;
  Complex den = X * X - 4.0;
  if (distance_to_band(X) <= real_tol || den == 0.0) {
    out.T = out.eta = out.zeta = huge();
    out.W = out.H = kInf;
    return out;
  }
  out.eta = (2.0 * Q - X * R) / (4.0 - X * X);
  out.zeta = (2.0 * R - X * Q) / (4.0 - X * X);
  out.T = (Q * Q + R * R - X * Q * R - S * den) / (den * den);
  double aT = std::abs(out.T);
  if (aT <= zero_tol || !std::isfinite(aT)) {
    out.W = out.H = kInf;
    return out;
  }
  double al = std::abs(out.lambda);
  double ae = std::abs(out.eta);
  double rad = ae * ae - al * (al * al - 1.0);
  out.W = (ae + std::sqrt(std::max(rad, 0.0))) /
          (std::sqrt(aT) * al * (al - 1.0));
  out.H = std::sqrt(aT) * al * (out.W + 1.0) + std::abs(out.eta);
  return out;
}

HOutputs h_prime(const HInputs& in, double real_tol, double zero_tol) {
  return h_value({in.R, in.Q, in.S, in.X}, real_tol, zero_tol);
}

std::vector<NeighborPair> simulate_neighbors(const NeighborSeq& s, long n_min,
                                             long n_max) {
  if (n_min > n_max) throw std::invalid_argument("empty index range");
  if (s.direction != 1 && s.direction != -1)
    throw std::invalid_argument("direction must be +1 or -1");
  const Complex X = s.X, Q = s.Q, R = s.R;
  // orbit index m = direction * n
  long m_lo = s.direction == 1 ? n_min : -n_max;
  long m_hi = s.direction == 1 ? n_max : -n_min;
  long lo = std::min(m_lo, 0L), hi = std::max(m_hi, 0L);
  std::vector<std::pair<Complex, Complex>> orbit(hi - lo + 1);
  orbit[-lo] = {s.y0, s.z0};
  for (long m = 0; m < hi; ++m) {
    auto [y, z] = orbit[m - lo];
    Complex y1 = -X * z - y + Q;
    Complex z1 = -X * y1 - z + R;
    orbit[m + 1 - lo] = {y1, z1};
  }
  for (long m = 0; m > lo; --m) {
    auto [y1, z1] = orbit[m - lo];
    Complex z = -X * y1 - z1 + R;
    Complex y = -X * z - y1 + Q;
    orbit[m - 1 - lo] = {y, z};
  }
  std::vector<NeighborPair> out;
  out.reserve(n_max - n_min + 1);
  for (long n = n_min; n <= n_max; ++n) {
    long m = s.direction * n;
    out.push_back({n, orbit[m - lo].first, orbit[m - lo].second});
  }
  return out;
}

Complex conic_residual(const HInputs& in, Complex y, Complex z) {
  return y * y + z * z + in.X * y * z - in.Q * y - in.R * z - in.S;
}

HInputs specialize(SurfaceKind kind, const SpecializeParams& p) {
  switch (kind) {
    case SurfaceKind::Torus:
      if (auto* t = std::get_if<TorusParams>(&p)) {
        return {0.0, 0.0, t->mu - t->x * t->x, t->x};
      }
      break;
    case SurfaceKind::FourHoledSphere:
      if (auto* f = std::get_if<FourHoledSphereParams>(&p)) {
        Complex a = f->a, b = f->b, c = f->c, d = f->d, x = f->x;
        // x^2+y^2+z^2+xyz = (ab+cd)x + (ad+bc)y + (ac+bd)z + 4 - sum a^2 - abcd
        return {b * c + a * d, a * c + b * d,
                4.0 - a * a - b * b - c * c - d * d - a * b * c * d +
                    x * (a * b + c * d) - x * x,
                x};
      }
      break;
    case SurfaceKind::N13:
      if (auto* n = std::get_if<N13Params>(&p)) {
        Complex a = n->a, b = n->b, x = n->x, y = n->y, z = n->z;
        return {z * a + y * b, y * a + z * b,
                4.0 - a * a - b * b - x * x - y * y - z * z - x * y * z +
                    x * a * b,
                a * b - x};
      }
      break;
  }
  throw std::invalid_argument("surface kind does not match parameters");
}

HInputs face_h_inputs(const Quad& q, const BoundaryData& w, int i, int j) {
  if (i > j) std::swap(i, j);
  int k = 0, l = 0;
  for (int c = 1; c <= 4; ++c) {
    if (c == i || c == j) continue;
    (k == 0 ? k : l) = c;
  }
  Complex ai = q[i - 1], aj = q[j - 1];
  Complex lij = lambda(w, i, j);
  HInputs in;
  in.X = ai * aj - lij;
  in.Q = lambda(w, i, k) * ai + lambda(w, j, k) * aj;
  in.R = lambda(w, i, l) * ai + lambda(w, j, l) * aj;
  in.S = 4.0 - ai * ai - aj * aj + lij * ai * aj - w.x * w.x - w.y * w.y -
         w.z * w.z - w.x * w.y * w.z;
  return in;
}

NeighborSeq face_sequence(const MarkoffMap& m, const FaceKey& f) {
  const Quad& q = m.quad_at(f.anchor);
  HInputs in = face_h_inputs(q, m.boundary(), f.i, f.j);
  auto [k, l] = f.complement();
  return {in.X, in.Q, in.R, q[k - 1], q[l - 1], 1};
}

double h_star(const MarkoffMap& m, const FaceKey& f, double K, double real_tol,
              double zero_tol) {
  const Quad& q = m.quad_at(f.anchor);
  HOutputs h = h_value(face_h_inputs(q, m.boundary(), f.i, f.j), real_tol,
                       zero_tol);
  if (!std::isfinite(h.H)) return kInf;
  double mn = std::min(std::abs(q[f.i - 1]), std::abs(q[f.j - 1]));
  double M = m.boundary().M;
  double bound = mn > 0.0 ? (K * K + 2.0 * M) / mn : kInf;
  return std::max(h.H, bound);
}

}  // namespace bowditch
