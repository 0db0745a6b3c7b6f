#include "bowditch/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace bowditch {

Complex huge() { return {std::numeric_limits<double>::infinity(), 0.0}; }

bool is_huge(Complex v) {
  return !std::isfinite(v.real()) || !std::isfinite(v.imag()) ||
         std::abs(v) > kHugeThreshold;
}

Complex cap(Complex v) { return is_huge(v) ? huge() : v; }

BoundaryData::BoundaryData(Complex x_, Complex y_, Complex z_)
    : x(x_), y(y_), z(z_) {
  M = std::max({std::abs(x), std::abs(y), std::abs(z)});
}

Complex lambda(const BoundaryData& w, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > 4 || i == j) throw std::invalid_argument("bad color pair");
  if ((i == 1 && j == 2) || (i == 3 && j == 4)) return w.x;
  if ((i == 2 && j == 3) || (i == 1 && j == 4)) return w.y;
  return w.z;
}

static bool finite(Complex v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

CharacterPoint::CharacterPoint(Complex a_, Complex b_, Complex c_, Complex d_,
                               Complex x_, Complex y_, Complex z_)
    : a(a_), b(b_), c(c_), d(d_), x(x_), y(y_), z(z_) {
  for (Complex v : coords())
    if (!finite(v)) throw std::invalid_argument("non-finite coordinate");
}

double CharacterPoint::sup_norm() const {
  double m = 0.0;
  for (Complex v : coords()) m = std::max(m, std::abs(v));
  return m;
}

// Residual with every value divided by s; terms are scaled by 1/s^4.
static Complex scaled_residual(const Quad& q, const BoundaryData& w,
                               double s) {
  Quad u;
  for (int i = 0; i < 4; ++i) u[i] = q[i] / s;
  Complex x = w.x / s, y = w.y / s, z = w.z / s;
  double s2 = s * s;
  Complex lhs = (u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3]) / s2 +
                u[0] * u[1] * u[2] * u[3];
  Complex rhs = (x * (u[0] * u[1] + u[2] * u[3]) +
                 y * (u[1] * u[2] + u[0] * u[3]) +
                 z * (u[0] * u[2] + u[1] * u[3])) /
                    s +
                4.0 / (s2 * s2) - (x * x + y * y + z * z) / s2 -
                x * y * z / s;
  return lhs - rhs;
}

Complex quad_residual(const Quad& q, const BoundaryData& w) {
  return scaled_residual(q, w, 1.0);
}

Complex vertex_residual(const CharacterPoint& pt) {
  return quad_residual(pt.quad(), pt.boundary());
}

double relative_residual(const Quad& q, const BoundaryData& w) {
  double n = w.M;
  for (Complex v : q) n = std::max(n, std::abs(v));
  if (!std::isfinite(n)) return std::numeric_limits<double>::infinity();
  if (n <= 1.0) return std::abs(quad_residual(q, w)) / (1.0 + std::pow(n, 4));
  // |res| / (1 + n^4) ~ |res / n^4| for n > 1
  double r = std::abs(scaled_residual(q, w, n));
  return r / (1.0 + 1.0 / std::pow(n, 4));
}

MarkoffQuad MarkoffQuad::on_variety(const Quad& v, const BoundaryData& w,
                                    double tol) {
  for (Complex c : v)
    if (!finite(c)) throw std::invalid_argument("non-finite quad value");
  double r = relative_residual(v, w);
  if (!(r <= tol))
    throw std::invalid_argument("quad is off the variety (residual " +
                                std::to_string(r) + ")");
  return MarkoffQuad{v, w, r};
}

MarkoffQuad MarkoffQuad::unchecked(const Quad& v, const BoundaryData& w) {
  return MarkoffQuad{v, w, relative_residual(v, w)};
}

Complex solve_fourth(Complex a, Complex b, Complex c, const BoundaryData& w,
                     Root root) {
  // d^2 + B d + C = 0
  Complex B = a * b * c - w.y * a - w.z * b - w.x * c;
  Complex C = a * a + b * b + c * c - w.x * a * b - w.y * b * c -
              w.z * a * c + w.x * w.x + w.y * w.y + w.z * w.z +
              w.x * w.y * w.z - 4.0;
  Complex s = std::sqrt(B * B - 4.0 * C);
  Complex plus_big = (-B + s) / 2.0;
  Complex minus_big = (-B - s) / 2.0;
  // Take the root without cancellation, recover the other by Vieta.
  bool plus_is_big = std::abs(plus_big) >= std::abs(minus_big);
  Complex big = plus_is_big ? plus_big : minus_big;
  Complex small = big == 0.0 ? Complex(0.0) : C / big;
  if (root == Root::Plus) return plus_is_big ? big : small;
  return plus_is_big ? small : big;
}

Quad elementary_move(const Quad& q, const BoundaryData& w, int color) {
  if (color < 1 || color > 4) throw std::invalid_argument("color out of range");
  int i = color - 1;
  Quad out = q;
  for (Complex v : q)
    if (is_huge(v)) {
      out[i] = huge();
      return out;
    }
  Complex sum = 0.0, prod = 1.0;
  for (int j = 0; j < 4; ++j) {
    if (j == i) continue;
    sum += lambda(w, color, j + 1) * q[j];
    prod *= q[j];
  }
  out[i] = cap(sum - prod - q[i]);
  return out;
}

Complex face_value(Complex ai, Complex aj, Complex lij) {
  if (is_huge(ai) || is_huge(aj)) return huge();
  return cap(ai * aj - lij);
}

Complex sigma(Complex ai, Complex aj, Complex face, Complex lij, Complex lik,
              Complex ljk) {
  if (is_huge(ai) || is_huge(aj) || is_huge(face)) return huge();
  Complex f1 = ai * ai + aj * aj + lij * lij - ai * aj * lij - 4.0;
  Complex f2 = lik * lik + ljk * ljk + face * face - lik * ljk * face - 4.0;
  return cap(f1 * f2);
}

Complex face_sigma(const Quad& q, const BoundaryData& w, int i, int j) {
  int k = 1;
  while (k == i || k == j) ++k;
  Complex lij = lambda(w, i, j);
  return sigma(q[i - 1], q[j - 1], face_value(q[i - 1], q[j - 1], lij), lij,
               lambda(w, i, k), lambda(w, j, k));
}

Involution involution_from_char(char c) {
  switch (c) {
    case 'a': return Involution::A;
    case 'b': return Involution::B;
    case 'c': return Involution::C;
    case 'd': return Involution::D;
    case 'x': return Involution::X;
    case 'y': return Involution::Y;
    case 'z': return Involution::Z;
  }
  throw std::invalid_argument(std::string("unknown involution ") + c);
}

char involution_char(Involution t) { return "abcdxyz"[static_cast<int>(t)]; }

CharacterPoint involution_theta(const CharacterPoint& pt, Involution which) {
  const Complex a = pt.a, b = pt.b, c = pt.c, d = pt.d;
  const Complex x = pt.x, y = pt.y, z = pt.z;
  CharacterPoint out = pt;
  switch (which) {
    case Involution::A: out.a = x * b + z * c + y * d - b * c * d - a; break;
    case Involution::B: out.b = x * a + y * c + z * d - a * c * d - b; break;
    case Involution::C: out.c = z * a + y * b + x * d - a * b * d - c; break;
    case Involution::D: out.d = y * a + z * b + x * c - a * b * c - d; break;
    case Involution::X: out.x = a * b + c * d - y * z - x; break;
    case Involution::Y: out.y = b * c + a * d - x * z - y; break;
    case Involution::Z: out.z = a * c + b * d - x * y - z; break;
  }
  return out;
}

DerivedBoundary derived(const CharacterPoint& pt) {
  const Complex a = pt.a, b = pt.b, c = pt.c, d = pt.d;
  return {a * b + c * d, b * c + a * d, a * c + b * d,
          4.0 - a * a - b * b - c * c - d * d - a * b * c * d};
}

Complex parse_complex(const std::string& s) {
  auto comma = s.find(',');
  try {
    size_t used = 0;
    if (comma == std::string::npos) {
      double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {re, 0.0};
    }
    std::string rs = s.substr(0, comma), is = s.substr(comma + 1);
    double re = std::stod(rs, &used);
    if (used != rs.size()) throw std::invalid_argument(s);
    double im = std::stod(is, &used);
    if (used != is.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("cannot parse complex value '" + s + "'");
  }
}

std::string format_complex(Complex v) {
  if (is_huge(v)) return "Huge";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", v.real(), v.imag());
  return buf;
}

}  // namespace bowditch
