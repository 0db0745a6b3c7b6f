#pragma once

// SL(2,C) evaluation of free-group words, random irreducible triples,
// lifting trace coordinates to matrices, and induced maps on characters.

#include <array>
#include <cstdint>
#include <random>

#include "bowditch/algebra.hpp"
#include "bowditch/free_group.hpp"

namespace bowditch {

struct Mat2 {
  Complex a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  Mat2 operator*(const Mat2& o) const;
  Mat2 inverse() const;  // adjugate; exact inverse when det = 1
  Complex trace() const { return a + d; }
  Complex det() const { return a * d - b * c; }
};

struct SL2Triple {
  std::array<Mat2, 3> m;
  double irreducibility = 0.0;  // |tr[M_A, M_B] - 2|

  Mat2 eval(const FreeWord& w) const;
  Complex trace(const FreeWord& w) const { return eval(w).trace(); }
  // Traces of A, B, C, ABC, AB, BC, AC.
  CharacterPoint character() const;
};

// Coordinate words A, B, C, ABC, AB, BC, AC.
const std::array<FreeWord, 7>& coordinate_words();

double irreducibility_score(const Mat2& A, const Mat2& B);

// Entries uniform in [-1,1] + i[-1,1], scaled to det 1; resampled while
// |tr[M_A, M_B] - 2| < 1e-3.
SL2Triple sample_sl2_triple(std::mt19937_64& rng);
// Generator for trial t of a run seeded with seed.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

// Triple whose seven traces match pt; throws std::domain_error on the
// reducible locus or when the lift does not reproduce the traces.
SL2Triple lift(const CharacterPoint& pt, double tol = 1e-8);

// Triple (f(A), f(B), f(C)) evaluated under t.
SL2Triple pullback(const Automorphism& f, const SL2Triple& t);

// Traces of rho(f(W)) for the coordinate words W.
CharacterPoint induced_character_map(const Automorphism& f,
                                     const CharacterPoint& pt);

// Max trace deviation of the coordinate words under f and g over random
// irreducible triples.
double character_agree(const Automorphism& f, const Automorphism& g,
                       int trials, std::uint64_t seed = 1);

}  // namespace bowditch
