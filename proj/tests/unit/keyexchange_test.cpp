#include <gtest/gtest.h>

#include <random>

#include "expect_error.hpp"
#include "mphide/keyexchange.hpp"

using namespace mphide;

TEST(PrimalityTest, AgreesWithASieve) {
  constexpr int kLimit = 200000;
  std::vector<bool> composite(kLimit + 1, false);
  composite[0] = composite[1] = true;
  for (int i = 2; i * i <= kLimit; ++i)
    if (!composite[i])
      for (int j = i * i; j <= kLimit; j += i) composite[j] = true;
  for (int n = 0; n <= kLimit; ++n) ASSERT_EQ(is_probable_prime(n), !composite[n]) << n;
}

TEST(PrimalityTest, LargeKnownValues) {
  EXPECT_TRUE(is_probable_prime(BigInteger::parse("2305843009213693951")));   // 2^61 - 1
  EXPECT_TRUE(is_probable_prime(BigInteger::parse("618970019642690137449562111")));  // 2^89 - 1
  EXPECT_FALSE(is_probable_prime(BigInteger::parse("3825123056546413051")));  // strong pseudoprime to bases 2..23
  EXPECT_FALSE(is_probable_prime(BigInteger::parse("1000000016000000063")));  // 1000000007 * 1000000009
  EXPECT_FALSE(is_probable_prime(-7));
}

TEST(DiffieHellmanTest, BothSidesAgree) {
  const DHParams params{457, 7832};
  params.validate();
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long long> d(1, 10000);
  for (int trial = 0; trial < 200; ++trial) {
    const BigInteger a = d(rng), b = d(rng);
    EXPECT_EQ(dh_shared(params, dh_public(params, b), a), dh_shared(params, dh_public(params, a), b));
  }
  EXPECT_ERROR_KIND((DHParams{458, 3}.validate()), ErrorKind::NotPrime);
  EXPECT_ERROR_KIND((DHParams{457, 914}.validate()), ErrorKind::OutOfRange);
  EXPECT_ERROR_KIND(dh_public(params, 0), ErrorKind::OutOfRange);
  EXPECT_ERROR_KIND(dh_shared(params, 457, 3), ErrorKind::OutOfRange);
}

TEST(DiffieHellmanTest, PairwiseTableIsSymmetric) {
  const DHParams params{457, 7832};
  const auto k = dh_pairwise(params, {2, 11, 7, 100});
  for (std::size_t i = 0; i < k.size(); ++i) {
    EXPECT_EQ(k[i][i], BigInteger(0));
    for (std::size_t j = 0; j < k.size(); ++j) EXPECT_EQ(k[i][j], k[j][i]);
  }
  EXPECT_EQ(k[0][1], BigInteger(361));
  EXPECT_EQ(k[0][2], BigInteger(79));
}

TEST(DiffieHellmanTest, SearchFindsTheFirstAcceptedSecret) {
  const DHParams params{457, 7832};
  const auto hit = dh_search(params, 313, 1, 100, [](const BigInteger& k) { return k == 79; });
  ASSERT_TRUE(hit);
  EXPECT_EQ(pow_mod(313, hit->secret, 457), BigInteger(79));
  for (long long x = 1; x < hit->secret.to_int64(); ++x) EXPECT_NE(pow_mod(313, x, 457), BigInteger(79));
  EXPECT_FALSE(dh_search(params, 313, 1, 3, [](const BigInteger&) { return false; }));
}

TEST(RsaTest, KeysetAndExhaustiveRoundTrip) {
  const RSAKeySet k = rsa_keygen(37, 53, 163);
  EXPECT_EQ(k.n, BigInteger(1961));
  EXPECT_EQ(k.phi, BigInteger(1872));
  EXPECT_EQ((k.d * k.e) % k.phi, BigInteger(1));
  for (long long m = 0; m < 1961; ++m)
    ASSERT_EQ(rsa_decrypt(rsa_encrypt(m, k.e, k.n), k.d, k.n), BigInteger(m)) << m;
  EXPECT_ERROR_KIND(rsa_keygen(36, 53, 163), ErrorKind::NotPrime);
  EXPECT_ERROR_KIND(rsa_keygen(37, 53, 4), ErrorKind::BadSecretKey);
  EXPECT_ERROR_KIND(rsa_encrypt(1961, k.e, k.n), ErrorKind::MessageTooLarge);
}

TEST(PackTest, FixedWidthRoundTrip) {
  EXPECT_EQ(pack_keys({361, 79}, 3), BigInteger(361079));
  EXPECT_EQ(unpack_keys(361079, 2, 3), (std::vector<BigInteger>{361, 79}));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BigInteger> parts;
    for (int i = 0; i < 4; ++i) parts.emplace_back(static_cast<long long>(rng() % 100000));
    EXPECT_EQ(unpack_keys(pack_keys(parts, 5), 4, 5), parts);
  }
  EXPECT_ERROR_KIND(pack_keys({1000, 1}, 3), ErrorKind::PartTooWide);
}
