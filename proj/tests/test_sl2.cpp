#include <gtest/gtest.h>

#include <random>

#include "bowditch/sl2.hpp"
#include "support.hpp"

using namespace bowditch;

namespace {

constexpr int kIterations = 200;

double max_dev(const CharacterPoint& a, const CharacterPoint& b) {
  double d = 0.0;
  for (int k = 0; k < 7; ++k) d = std::max(d, std::abs(a.coords()[k] - b.coords()[k]));
  return d;
}

}  // namespace

TEST(SL2, SamplesHaveUnitDeterminant) {
  for (int k = 0; k < kIterations; ++k) {
    auto rng = trial_rng(7, k);
    SL2Triple t = sample_sl2_triple(rng);
    for (const Mat2& m : t.m) EXPECT_LE(std::abs(m.det() - 1.0), 1e-12);
    EXPECT_GE(t.irreducibility, 1e-3);
  }
}

TEST(SL2, TrialStreamsAreReproducible) {
  auto a = trial_rng(3, 5), b = trial_rng(3, 5), c = trial_rng(3, 6);
  EXPECT_EQ(a(), b());
  EXPECT_NE(trial_rng(3, 5)(), c());
}

TEST(SL2, TraceIdentitiesAndVertexRelation) {
  for (int k = 0; k < kIterations; ++k) {
    auto rng = trial_rng(8, k);
    SL2Triple t = sample_sl2_triple(rng);
    const Mat2 &A = t.m[0], &B = t.m[1];
    // tr(AB) + tr(A^-1 B) = tr A tr B.
    Complex lhs = (A * B).trace() + (A.inverse() * B).trace();
    EXPECT_LE(std::abs(lhs - A.trace() * B.trace()), 1e-10);
    EXPECT_LE(std::abs(A.inverse().trace() - A.trace()), 1e-12);
    // The seven traces lie on the character variety.
    CharacterPoint pt = t.character();
    EXPECT_LE(std::abs(vertex_residual(pt)), 1e-9 * (1 + std::pow(pt.sup_norm(), 4)));
  }
}

TEST(SL2, EvalMatchesProducts) {
  auto rng = trial_rng(9, 0);
  SL2Triple t = sample_sl2_triple(rng);
  Mat2 want = t.m[0] * t.m[1].inverse() * t.m[2];
  Mat2 got = t.eval(FreeWord::parse("AbC"));
  EXPECT_LE(std::abs(got.a - want.a) + std::abs(got.d - want.d), 1e-12);
  EXPECT_EQ(t.trace(FreeWord()), Complex(2.0));
}

TEST(Lift, RoundTrip) {
  int lifted = 0;
  for (int k = 0; k < kIterations; ++k) {
    auto rng = trial_rng(10, k);
    CharacterPoint pt = sample_sl2_triple(rng).character();
    SL2Triple t = lift(pt);
    ++lifted;
    EXPECT_LE(max_dev(t.character(), pt), 1e-8 * std::max(1.0, pt.sup_norm()));
    for (const Mat2& m : t.m) EXPECT_LE(std::abs(m.det() - 1.0), 1e-9);
  }
  EXPECT_EQ(lifted, kIterations);
}

TEST(Lift, RandomOnVarietyPoints) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < kIterations; ++k) {
    CharacterPoint pt = testing_support::random_point(rng);
    SL2Triple t = lift(pt);
    EXPECT_LE(max_dev(t.character(), pt), 1e-8 * std::pow(std::max(1.0, pt.sup_norm()), 2));
  }
}

TEST(Lift, ReducibleLocusThrows) {
  // Diagonal A, B: the commutator trace is 2.
  CharacterPoint pt(2, 2, 2, 2, 2, 2, 2);
  EXPECT_THROW(lift(pt), std::domain_error);
}

TEST(Pullback, MatchesWordImages) {
  auto rng = trial_rng(12, 0);
  SL2Triple t = sample_sl2_triple(rng);
  Automorphism f = named_involution(Involution::A);
  SL2Triple p = pullback(f, t);
  for (const FreeWord& w : coordinate_words())
    EXPECT_LE(std::abs(p.trace(w) - t.trace(f.apply(w))), 1e-10);
}

TEST(Involutions, LiftsInduceTheta) {
  for (char c : std::string("abcdxyz")) {
    Automorphism tau = named_involution(involution_from_char(c));
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      auto rng = trial_rng(13, k);
      CharacterPoint pt = sample_sl2_triple(rng).character();
      worst = std::max(worst, max_dev(induced_character_map(tau, pt),
                                      involution_theta(pt, involution_from_char(c))));
    }
    EXPECT_LE(worst, 1e-8) << c;
  }
}

TEST(CharacterAgree, Cases) {
  Automorphism d = named_involution(Involution::D);
  EXPECT_LE(character_agree(d, d, 50), 1e-12);
  EXPECT_GT(character_agree(d, Automorphism(), 50), 1e-3);
  for (Magnus k : {Magnus::K12, Magnus::K23, Magnus::K31, Magnus::K123, Magnus::K231,
                   Magnus::K312})
    EXPECT_LE(character_agree(magnus_generator(k), involution_product(magnus_identity(k)), 50),
              1e-8)
        << to_string(k);
}
