#pragma once

// Free group F3 = <A, B, C>: reduced words, automorphisms given by the
// images of the generators, the seven involution lifts and the Magnus
// generators of the Torelli group.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bowditch/algebra.hpp"

namespace bowditch {

// Letters: +1, +2, +3 for A, B, C; negatives for inverses.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<std::int8_t> letters);

  // Accepts "ABc", "A B^-1 C", "A B⁻¹ C"; lowercase means inverse.
  static FreeWord parse(const std::string& s);
  static FreeWord generator(int g);

  const std::vector<std::int8_t>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_reduced() const;
  bool is_cyclically_reduced() const;

  FreeWord inverse() const;
  // Concatenation followed by free reduction.
  FreeWord operator*(const FreeWord& o) const;
  bool operator==(const FreeWord& o) const = default;
  bool operator<(const FreeWord& o) const { return letters_ < o.letters_; }

  // Uppercase generators, lowercase inverses; "1" for the empty word.
  std::string str() const;

 private:
  std::vector<std::int8_t> letters_;
};

FreeWord reduce(const FreeWord& w);
FreeWord cyclic_reduce(const FreeWord& w);

class Automorphism {
 public:
  Automorphism();  // identity
  Automorphism(FreeWord a, FreeWord b, FreeWord c);

  const FreeWord& image(int g) const { return images_[g - 1]; }
  FreeWord apply(const FreeWord& w) const;
  bool operator==(const Automorphism& o) const = default;
  std::string str() const;

 private:
  std::array<FreeWord, 3> images_;
};

// (f o g)(X) = f(g(X)).
Automorphism compose(const Automorphism& f, const Automorphism& g);
// Inner automorphism X -> w X w^-1.
Automorphism conjugation(const FreeWord& w);

Automorphism named_involution(Involution which);

enum class Magnus { K12, K23, K31, K123, K231, K312 };
std::string to_string(Magnus k);
// A_i -> A_j A_i A_j^-1.
Automorphism magnus_conjugation(int i, int j);
// A_i -> A_i [A_j, A_k] with [u, v] = u v u^-1 v^-1.
Automorphism magnus_commutator(int i, int j, int k);
Automorphism magnus_generator(Magnus which);

// Product of involutions as written in the identities, read with the left
// factor applied first: {z, d} gives X -> tau_d(tau_z(X)).
Automorphism involution_product(const std::string& letters);
// Involution letters paired with each Magnus generator.
std::string magnus_identity(Magnus which);

// Conjugator w with |w| <= radius and f(X) = w g(X) w^-1 for X = A, B, C.
std::optional<FreeWord> equal_in_out(const Automorphism& f,
                                     const Automorphism& g, int radius);

}  // namespace bowditch
