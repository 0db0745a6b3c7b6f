#pragma once

// Trace coordinates on the character variety of the three-holed projective
// plane, the vertex relation and its seven involutions.

#include <array>
#include <complex>
#include <string>

namespace bowditch {

using Complex = std::complex<double>;

// Values with modulus above this are replaced by the Huge marker.
inline constexpr double kHugeThreshold = 1e150;

Complex huge();
bool is_huge(Complex v);
// Returns v, or Huge when v is non-finite or too large.
Complex cap(Complex v);

// Boundary traces (x, y, z) and M = max modulus.
struct BoundaryData {
  Complex x, y, z;
  double M = 0.0;

  BoundaryData() = default;
  BoundaryData(Complex x_, Complex y_, Complex z_);
};

// lambda_ij for colors i != j in 1..4:
// l12 = l34 = x, l23 = l14 = y, l13 = l24 = z.
Complex lambda(const BoundaryData& w, int i, int j);

using Quad = std::array<Complex, 4>;

// Seven trace coordinates (a, b, c, d; x, y, z).
struct CharacterPoint {
  Complex a, b, c, d, x, y, z;

  CharacterPoint() = default;
  // Throws std::invalid_argument on non-finite input.
  CharacterPoint(Complex a_, Complex b_, Complex c_, Complex d_, Complex x_,
                 Complex y_, Complex z_);

  Quad quad() const { return {a, b, c, d}; }
  BoundaryData boundary() const { return BoundaryData(x, y, z); }
  std::array<Complex, 7> coords() const { return {a, b, c, d, x, y, z}; }
  double sup_norm() const;
};

// lhs - rhs of the vertex relation.
Complex quad_residual(const Quad& q, const BoundaryData& w);
Complex vertex_residual(const CharacterPoint& pt);

// Residual divided by 1 + ||q||^4, computed without overflow.
double relative_residual(const Quad& q, const BoundaryData& w);

// Four region values at a vertex plus the boundary data.
struct MarkoffQuad {
  Quad values{};
  BoundaryData boundary;
  double residual = 0.0;  // relative residual at construction

  // Throws std::invalid_argument when the relative residual exceeds tol.
  static MarkoffQuad on_variety(const Quad& v, const BoundaryData& w,
                                double tol = 1e-9);
  // No variety check (used for raw slice rendering).
  static MarkoffQuad unchecked(const Quad& v, const BoundaryData& w);
};

enum class Root { Plus, Minus };

// Solves the vertex relation for d; Plus/Minus picks the sign in front of
// the principal square root of the discriminant.
Complex solve_fourth(Complex a, Complex b, Complex c, const BoundaryData& w,
                     Root root);

// a_i' = sum_{j!=i} l_ij a_j - prod_{j!=i} a_j - a_i, colors 1..4.
Quad elementary_move(const Quad& q, const BoundaryData& w, int color);

Complex face_value(Complex ai, Complex aj, Complex lij);

Complex sigma(Complex ai, Complex aj, Complex face, Complex lij, Complex lik,
              Complex ljk);

// sigma for the face of region colors i, j of q.
Complex face_sigma(const Quad& q, const BoundaryData& w, int i, int j);

enum class Involution { A, B, C, D, X, Y, Z };

Involution involution_from_char(char c);
char involution_char(Involution t);

CharacterPoint involution_theta(const CharacterPoint& pt, Involution which);

struct DerivedBoundary {
  Complex p, q, r, s;
};

// p = ab + cd, q = bc + ad, r = ac + bd, s = 4 - sum a^2 - abcd.
DerivedBoundary derived(const CharacterPoint& pt);

// Parses "re,im" or "re".
Complex parse_complex(const std::string& s);
std::string format_complex(Complex v);

}  // namespace bowditch
