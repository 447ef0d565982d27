#pragma once

// Brute-force search over quotient guesses: an attacker who knows the
// recovery algorithm but not the exponents builds
//   level 1:  C (D^-1)^m1
//   level 2:  D (X(m1)^-1)^m2
//   level j:  X(m1..m_{j-2}) (X(m1..m_{j-1})^-1)^mj
// for every m in 1..L, and tests each candidate X for X^a = C and X^b = D
// with a, b in a chosen exponent range.
//
// Strategies based on floating-point eigen-decomposition or on solving the
// polynomial systems X^a = C directly are not provided: they need inexact
// numerics that the exact core deliberately avoids.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "mphide/exact.hpp"
#include "mphide/hide_recover.hpp"

namespace mphide {

struct AttackBudget {
  std::uint64_t max_quotient = 6;  // L: guesses 1..L per level
  std::uint64_t max_depth = 6;     // r_max: levels 1..r_max-1 are enumerated
  std::uint64_t exp_lo = 2;        // exponent range tried on each candidate
  std::uint64_t exp_hi = 20;
  std::uint64_t max_candidates = 10'000'000;
  unsigned threads = 1;        // 0 picks the hardware concurrency
  bool try_swapped = true;     // rerun with C -> D^-1, D^-1 -> C after exhaustion

  // OutOfRange unless L >= 1, r_max >= 3, 1 <= exp_lo <= exp_hi.
  void validate() const;
};

enum class Orientation { Primary, Swapped };

struct AttackHit {
  ExactMatrix seed;
  std::vector<std::uint64_t> path;  // m1, m2, ... leading to the seed
  Orientation orientation = Orientation::Primary;
  std::uint64_t exponent_c = 0;  // seed^exponent_c = C
  std::uint64_t exponent_d = 0;  // seed^exponent_d = D
};

struct AttackReport {
  std::optional<AttackHit> found;
  std::uint64_t candidates_tested = 0;
  std::uint64_t primary_candidates = 0;
  std::uint64_t swapped_candidates = 0;
  std::uint64_t multiplications = 0;  // candidate construction plus testing
  std::uint64_t inversions = 0;
  std::uint64_t depth_reached = 0;  // r such that levels 1..r-1 were entered
  bool budget_exhausted = false;    // candidate cap hit or every level searched in vain
  // sum over entered levels j of (L(L+1)/2)^j, the tabulated multiplication
  // estimate, kept for comparison with the measured count.
  BigInteger tabulated_multiplications;
  std::chrono::duration<double> elapsed{0};
};

// Matrices checked when levels 1..r-1 are exhausted: sum_{l=1}^{r-1} L^l.
// L = 1 gives r - 1.
BigInteger enumerate_cost(const BigInteger& max_quotient, std::uint64_t depth);

// Mean number of trials when each of N candidates is equally likely and the
// trial index follows the truncated geometric law P_s = q^(s-1) p / (1 - q^N)
// with p = 1/N: N (1 - 2 q^N) / (1 - q^N). Tends to N (e-2)/(e-1).
double expected_trials(const BigInteger& n);

// Deterministic for a given budget regardless of the thread count, apart
// from `elapsed`. When nothing is found `found` is empty and
// `budget_exhausted` is set.
AttackReport brute_force_attack(const HiddenPair& hp, const AttackBudget& budget);

}  // namespace mphide
