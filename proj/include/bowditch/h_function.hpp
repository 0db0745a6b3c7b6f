#pragma once

// Neighbor sequences around a face and the threshold function H.
//
// Around a face with value X the two alternating neighbor sequences obey
//   y_{n+1} = -X z_n - y_n + Q,   z_{n+1} = -X y_{n+1} - z_n + R
// and lie on the conic y^2 + z^2 + X y z - Q y - R z = S.

#include <variant>
#include <vector>

#include "bowditch/algebra.hpp"
#include "bowditch/markoff.hpp"

namespace bowditch {

struct HInputs {
  Complex Q, R, S, X;
};

struct HOutputs {
  Complex lambda;  // |lambda| >= 1, lambda + 1/lambda = X^2 - 2
  Complex T;       // product of the growth coefficients
  Complex eta, zeta;
  double W = 0.0;
  double H = 0.0;  // +inf when undefined
};

// H = sqrt|T| |lambda| (W + 1) + |eta|. H is +inf when X is within
// real_tol of [-2, 2] or when |T| <= zero_tol.
HOutputs h_value(const HInputs& in, double real_tol = 0.0,
                 double zero_tol = 0.0);
// Same with Q and R swapped (sequence read from the other side).
HOutputs h_prime(const HInputs& in, double real_tol = 0.0,
                 double zero_tol = 0.0);

// Distance from v to the real segment [-2, 2].
double distance_to_band(Complex v);

struct NeighborSeq {
  Complex X, Q, R;
  Complex y0, z0;
  int direction = 1;  // -1 reads the orbit backwards
};

struct NeighborPair {
  long n;
  Complex y, z;
};

// Orbit points for n in [n_min, n_max]; throws std::invalid_argument when
// n_min > n_max.
std::vector<NeighborPair> simulate_neighbors(const NeighborSeq& s, long n_min,
                                             long n_max);

// Conic residual y^2 + z^2 + X y z - Q y - R z - S.
Complex conic_residual(const HInputs& in, Complex y, Complex z);

struct TorusParams {
  Complex mu, x;
};
struct FourHoledSphereParams {
  Complex a, b, c, d, x;
};
struct N13Params {
  Complex a, b;
  Complex x, y, z;
};
enum class SurfaceKind { Torus, FourHoledSphere, N13 };
using SpecializeParams =
    std::variant<TorusParams, FourHoledSphereParams, N13Params>;

// Throws std::invalid_argument when kind does not match the parameters.
HInputs specialize(SurfaceKind kind, const SpecializeParams& p);

// Inputs for the face of region colors i < j at a vertex quad.
HInputs face_h_inputs(const Quad& q, const BoundaryData& w, int i, int j);

// Neighbor sequence for face f starting at its anchor.
NeighborSeq face_sequence(const MarkoffMap& m, const FaceKey& f);

// H* = max(H, (K^2 + 2M) / min(|a_i|, |a_j|)); +inf when H is.
double h_star(const MarkoffMap& m, const FaceKey& f, double K,
              double real_tol, double zero_tol);

}  // namespace bowditch
