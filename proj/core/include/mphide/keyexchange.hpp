#pragma once

// Toy Diffie-Hellman and RSA for handing the disguise key to the receiver.
// Small numbers, no padding, no hardening: educational, not secure.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mphide/exact.hpp"

namespace mphide {

inline constexpr const char* kKeyExchangeDisclaimer =
    "toy key exchange: educational, not secure";

// Trial division below 10^6, Miller-Rabin with a fixed witness set above.
bool is_probable_prime(const BigInteger& n);

struct DHParams {
  BigInteger p;  // prime modulus
  BigInteger q;  // public base

  // NotPrime when p is not prime, OutOfRange when q mod p = 0.
  void validate() const;
};

// q^secret mod p. OutOfRange for secret < 1.
BigInteger dh_public(const DHParams& params, const BigInteger& secret);
// received^secret mod p. OutOfRange unless 0 < received < p.
BigInteger dh_shared(const DHParams& params, const BigInteger& received, const BigInteger& secret);

// K(i,j) = q^(a_i a_j) mod p for i != j, K(i,i) = 0. Each party computes its
// public value once and exponentiates the others' values with its own secret.
std::vector<std::vector<BigInteger>> dh_pairwise(const DHParams& params,
                                                 const std::vector<BigInteger>& secrets);

struct DHSearchHit {
  BigInteger secret;
  BigInteger shared;
};

// First secret x in [lo, hi] whose shared key with `received` satisfies the
// predicate, or nothing.
std::optional<DHSearchHit> dh_search(const DHParams& params, const BigInteger& received,
                                     const BigInteger& lo, const BigInteger& hi,
                                     const std::function<bool(const BigInteger&)>& accept);

struct RSAKeySet {
  BigInteger p;
  BigInteger q;
  BigInteger n;
  BigInteger phi;
  BigInteger d;  // secret
  BigInteger e;  // public
};

// NotPrime for composite p or q, BadSecretKey unless gcd(d, phi) = gcd(d, n) = 1.
RSAKeySet rsa_keygen(const BigInteger& p, const BigInteger& q, const BigInteger& d);
// MessageTooLarge unless 0 <= message < n.
BigInteger rsa_encrypt(const BigInteger& message, const BigInteger& e, const BigInteger& n);
BigInteger rsa_decrypt(const BigInteger& cipher, const BigInteger& d, const BigInteger& n);

// Fixed-width decimal concatenation: pack({361, 79}, 3) = 361079.
// PartTooWide when a part needs more than `width` digits or is negative.
BigInteger pack_keys(const std::vector<BigInteger>& parts, std::size_t width);
// Inverse of pack_keys. PartTooWide when the value needs more than
// parts * width digits.
std::vector<BigInteger> unpack_keys(const BigInteger& packed, std::size_t parts, std::size_t width);

}  // namespace mphide
