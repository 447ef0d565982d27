#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "expect_error.hpp"
#include "fixtures.hpp"
#include "mphide/hide_recover.hpp"

using namespace mphide;

namespace {

ExactMatrix random_seed(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<long long> d(-3, 3);
  for (;;) {
    ExactMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = GaussianRational(d(rng), d(rng));
    if (!determinant(m).is_zero()) return m;
  }
}

CoprimePair random_pair(std::mt19937_64& rng, long long max_k1) {
  std::uniform_int_distribution<long long> d(2, max_k1);
  for (;;) {
    const long long k1 = d(rng);
    const long long k2 = std::uniform_int_distribution<long long>(1, k1 - 1)(rng);
    if (std::gcd(k1, k2) == 1) return {k1, k2};
  }
}

}  // namespace

TEST(HideTest, WorkedExampleMatchesExactly) {
  const HideResult r = hide(fixtures::seed(), CoprimePair(17, 11));
  EXPECT_EQ(r.hidden.c, fixtures::c17());
  EXPECT_EQ(r.hidden.d, fixtures::d11());
  EXPECT_EQ(r.storage, optimal_storage(17).storage);
  EXPECT_EQ(r.per_power_c.multiplications, optimal_storage(17).predicted_ops);
  EXPECT_EQ(r.per_power_d.multiplications, optimal_storage(11).predicted_ops);
  // One table of s powers: s - 1 to build, then floor((k-1)/s) per exponent.
  const std::uint64_t s = r.storage;
  EXPECT_EQ(r.shared.multiplications, (s - 1) + 16 / s + 10 / s);
}

TEST(HideTest, RejectsSingularSeed) {
  EXPECT_ERROR_KIND(hide(fixtures::mat({{"1", "i"}, {"-i", "1"}}), CoprimePair(3, 2)),
                    ErrorKind::SingularMatrix);
}

TEST(RecoverTest, WorkedExampleBothRoutes) {
  const HiddenPair hp{fixtures::c17(), fixtures::d11()};
  const CoprimePair pair(17, 11);
  const RecoveryTrace t = recover_iterative(hp, pair);
  EXPECT_EQ(t.result, fixtures::seed());
  EXPECT_EQ(t.steps.size(), 3u);
  EXPECT_EQ(BigInteger(static_cast<long long>(t.total.total())),
            recovery_op_count(quotient_sequence(pair)));
  const BezoutRecovery b = recover_bezout(hp, pair);
  EXPECT_EQ(b.result, fixtures::seed());
  EXPECT_EQ(b.p, BigInteger(2));
  EXPECT_EQ(b.t, BigInteger(-3));
}

TEST(RecoverTest, WrongKeyIsCaughtAndTheCandidateKept) {
  const HiddenPair hp{fixtures::c17(), fixtures::d11()};
  for (int route = 0; route < 2; ++route) {
    try {
      if (route == 0) recover_iterative(hp, CoprimePair(17, 12));
      else recover_bezout(hp, CoprimePair(17, 12));
      ADD_FAILURE() << "wrong key accepted";
    } catch (const VerificationError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::VerificationFailed);
      EXPECT_EQ(e.candidate(), fixtures::wrong_key_result());
    }
  }
}

TEST(RecoverTest, RandomSeedsRoundTripByBothRoutes) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = trial % 2 == 0 ? 2 : 3;
    const ExactMatrix seed = random_seed(rng, dim);
    const CoprimePair pair = random_pair(rng, 60);
    const HideResult h = hide(seed, pair);
    EXPECT_EQ(h.hidden.c, power(seed, pair.k1()).value);
    EXPECT_EQ(h.hidden.d, power(seed, pair.k2()).value);
    const RecoveryTrace it = recover_iterative(h.hidden, pair);
    const BezoutRecovery bz = recover_bezout(h.hidden, pair);
    EXPECT_EQ(it.result, seed) << pair.k1() << "," << pair.k2();
    EXPECT_EQ(bz.result, it.result);
  }
}

TEST(RecoverTest, IntermediateFormsGiveEveryRemainderPower) {
  const ExactMatrix seed = fixtures::seed();
  const CoprimePair pair(38, 23);
  const HiddenPair hp = hide(seed, pair).hidden;
  for (const BezoutRow& row : intermediate_bezout_forms(pair))
    EXPECT_EQ(apply_bezout_form(hp, row), power(seed, row.remainder).value) << "l=" << row.l;
  const BezoutRecovery b = recover_bezout(hp, pair);
  EXPECT_EQ(b.p, BigInteger(-3));
  EXPECT_EQ(b.t, BigInteger(5));
}

TEST(RecoverTest, CommutingPowersAgreeWithoutHiding) {
  // C and D are powers of the same seed and so commute; the order of the
  // Bezout product therefore does not matter.
  const HiddenPair hp{fixtures::c17(), fixtures::d11()};
  EXPECT_EQ(hp.c * hp.d, hp.d * hp.c);
  EXPECT_EQ(power(hp.d, -3).value * power(hp.c, 2).value, fixtures::seed());
}
