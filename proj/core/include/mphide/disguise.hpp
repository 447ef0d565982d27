#pragma once

// Disguising a hidden pair: C and D are left-multiplied by two catalog
// matrices Z(z, z*) so that ln det C / ln det D no longer approximates k1/k2.
// z = x1(l) + i x2(l), where x_j(l) = m l + (k_j^-1 mod m).

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "mphide/exact.hpp"
#include "mphide/hide_recover.hpp"

namespace mphide {

// The six-field key (k1, k2, m, l, first catalog index, second catalog index).
struct DisguiseKey {
  BigInteger k1;
  BigInteger k2;
  BigInteger m;
  BigInteger l;
  std::size_t index_c = 1;
  std::size_t index_d = 2;

  // Throws BadOrder / NotCoprime for the exponents, NotInvertible when an
  // exponent shares a factor with m, OutOfRange for m <= 1, l < 0 or equal
  // indices, IndexOutOfRange for indices outside the catalog.
  void validate() const;
  CoprimePair pair() const { return {k1, k2}; }

  friend bool operator==(const DisguiseKey&, const DisguiseKey&) = default;
};

GaussianRational derive_z(const DisguiseKey& key);

// Catalog version shipped with this build. Index 0 is the identity and
// 1..catalog_size() are the disguise matrices.
inline constexpr int kCatalogVersion = 1;
std::size_t catalog_size();
// 2x2 block formula for one entry, e.g. "(z 1; -1 z*)".
std::string catalog_formula(std::size_t index);
// Text listing of every entry; identical to data/z_catalog_v1.txt.
std::string catalog_manifest();

// The entry's 2x2 block repeated along the diagonal; an odd dimension gets a
// trailing 1. IndexOutOfRange for unknown entries, DimensionMismatch for
// dim < 2 (except the identity entry), SingularZ when the block is singular
// for this z.
ExactMatrix catalog_matrix(std::size_t index, const GaussianRational& z, std::size_t dim);

// (Z_C C, Z_D D); two multiplications.
HiddenPair blur(const HiddenPair& hp, const DisguiseKey& key, OpCount& ops);
HiddenPair blur(const HiddenPair& hp, const DisguiseKey& key);
// (Z_C^-1 C', Z_D^-1 D'); two inversions and two multiplications.
HiddenPair unblur(const HiddenPair& blurred, const DisguiseKey& key, OpCount& ops);
HiddenPair unblur(const HiddenPair& blurred, const DisguiseKey& key);

// Principal-branch complex logarithm of an exact nonzero value. Works for
// values far outside the double range. ZeroDeterminant on zero.
std::complex<double> principal_log(const GaussianRational& x);

// ln det C / ln det D with principal-branch logarithms. ZeroDeterminant when
// either determinant is zero; DivisionByZero when ln det D = 0.
std::complex<double> det_ratio_leak(const HiddenPair& hp);

struct FractionGuess {
  long long numerator = 0;
  long long denominator = 1;
  double error = 0.0;  // |numerator/denominator - x|
};

// Fractions a/b with b <= max_denominator closest to x, best first; one per
// denominator, reduced, at most `count` of them.
std::vector<FractionGuess> small_fraction_guesses(double x, long long max_denominator,
                                                  std::size_t count);

}  // namespace mphide
