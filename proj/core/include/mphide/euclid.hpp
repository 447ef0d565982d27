#pragma once

// Euclid quotient sequences, finite continued fractions and Bezout tables for
// pairs of coprime exponents, plus the quotient-based key generation policy.

#include <cstdint>
#include <utility>
#include <vector>

#include "mphide/exact.hpp"

namespace mphide {

// Exponent pair with k1 > k2 > 0 and gcd(k1, k2) = 1.
class CoprimePair {
 public:
  // BadOrder unless k1 > k2 > 0; NotCoprime unless gcd(k1, k2) = 1.
  CoprimePair(BigInteger k1, BigInteger k2);

  const BigInteger& k1() const noexcept { return k1_; }
  const BigInteger& k2() const noexcept { return k2_; }

  friend bool operator==(const CoprimePair&, const CoprimePair&) = default;

 private:
  BigInteger k1_;
  BigInteger k2_;
};

// Quotients (q2, ..., q_{r+1}) of Euclid's algorithm, i.e. the terms of the
// continued fraction k1/k2. Canonical form: every term >= 1 and, when there is
// more than one term, the last one >= 2. A single term must be >= 2 so that
// the sequence maps to an ordered pair.
class QuotientSequence {
 public:
  // Validates the terms and folds a trailing 1 into its predecessor
  // (//..., q, 1// == //..., q+1//).
  explicit QuotientSequence(std::vector<BigInteger> terms);

  const std::vector<BigInteger>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const BigInteger& operator[](std::size_t i) const { return terms_[i]; }
  // Number of descent steps, r - 1 (every term except the last).
  std::size_t steps() const noexcept { return terms_.size() - 1; }

  friend bool operator==(const QuotientSequence&, const QuotientSequence&) = default;

 private:
  std::vector<BigInteger> terms_;
};

// One division k_i = q_{i+1} k_{i+1} + k_{i+2}.
struct EuclidStep {
  BigInteger dividend;   // k_i
  BigInteger divisor;    // k_{i+1}
  BigInteger quotient;   // q_{i+1}
  BigInteger remainder;  // k_{i+2}
};

// Every division down to remainder 0.
std::vector<EuclidStep> euclid_steps(const CoprimePair& pair);

QuotientSequence quotient_sequence(const CoprimePair& pair);

// Evaluates q2 + 1/(q3 + 1/(... + 1/q_{r+1})) with exact rationals.
CoprimePair continued_fraction_eval(const QuotientSequence& qs);

// (k1, k2)^T = [prod_{l=2..r} (q_l 1; 1 0)] (k_r, 1)^T with k_r = q_{r+1}.
CoprimePair quotients_to_pair_matrix(const QuotientSequence& qs);

// p k1 + t k2 = k_{l+2}.
struct BezoutRow {
  std::size_t l = 0;
  BigInteger p;
  BigInteger t;
  BigInteger remainder;

  friend bool operator==(const BezoutRow&, const BezoutRow&) = default;
};

struct BezoutTable {
  std::vector<BezoutRow> rows;  // l = 1 .. r-1; the last row has remainder 1

  // Final (p, t) with p k1 + t k2 = 1. For k2 = 1 the table is empty and this
  // is (0, 1).
  std::pair<BigInteger, BigInteger> identity() const;
};

// Rows from the running product of the inverted (q 1; 1 0) factors.
BezoutTable bezout_table(const CoprimePair& pair);

// Closed-form (p_l, t_l) in terms of the quotients for l = 1..4.
// IndexOutOfRange when l is outside 1..4 or the sequence has fewer than l+1 terms.
std::pair<BigInteger, BigInteger> closed_form_coefficients(const QuotientSequence& qs,
                                                           std::size_t l);

// Inversions plus products used by the iterative descent: sum of (q_i + 1)
// over every quotient except the last.
BigInteger recovery_op_count(const QuotientSequence& qs);

// Probability that a continued-fraction quotient equals a:
// log2(1 + 1/a) - log2(1 + 1/(a+1)). Requires a >= 1.
double gauss_kuzmin_probability(std::uint64_t a);

struct GeneratedKey {
  QuotientSequence quotients;
  CoprimePair pair;
};

// Draws `count` quotients uniformly from [min_quotient, min_quotient + 15]
// using a seeded mt19937_64; deterministic for a given seed on every platform.
// The last quotient is redrawn from [max(2, min_quotient), min_quotient + 15]
// so the sequence is canonical without folding.
GeneratedKey keygen_quotients(std::size_t count, std::uint64_t min_quotient, std::uint64_t seed);

// (m1 k1 + t1, m2 k2 + t2): the dilated and shifted pair used to probe the
// uniqueness of quotient sequences.
CoprimePair dilate_shift(const CoprimePair& pair, const BigInteger& m1, const BigInteger& t1,
                         const BigInteger& m2, const BigInteger& t2);

}  // namespace mphide
