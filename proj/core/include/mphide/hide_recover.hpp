#pragma once

// Hiding a seed matrix as two coprime powers and recovering it, either by the
// iterative Euclid descent or in one shot from the final Bezout row.

#include <vector>

#include "mphide/error.hpp"
#include "mphide/euclid.hpp"
#include "mphide/matrix.hpp"

namespace mphide {

// C = M^k1, D = M^k2.
struct HiddenPair {
  ExactMatrix c;
  ExactMatrix d;

  friend bool operator==(const HiddenPair&, const HiddenPair&) = default;
};

struct HideResult {
  HiddenPair hidden;
  std::uint64_t storage = 1;  // size of the stored power set, optimal for k1
  // Cost of C and D computed independently, each with its own optimal plan.
  OpCount per_power_c;
  OpCount per_power_d;
  // Actual cost of the run: one table of `storage` powers serves both exponents.
  OpCount shared;
};

// SingularMatrix when det(seed) = 0.
HideResult hide(const ExactMatrix& seed, const CoprimePair& pair);

// Raised when the recovered matrix X fails X^k2 = D. Carries X so callers can
// inspect what a wrong key produced.
class VerificationError : public Error {
 public:
  VerificationError(const std::string& message, ExactMatrix candidate)
      : Error(ErrorKind::VerificationFailed, message), candidate_(std::move(candidate)) {}

  const ExactMatrix& candidate() const noexcept { return candidate_; }

 private:
  ExactMatrix candidate_;
};

struct RecoveryStep {
  BigInteger exponent;  // k_{i+2}, the power this step produces
  BigInteger quotient;  // q_{i+1}
  OpCount ops;          // one inversion, q multiplications
};

struct RecoveryTrace {
  std::vector<RecoveryStep> steps;
  OpCount total;  // sum over steps; excludes verification
  OpCount verify_ops;
  ExactMatrix result;
};

// M_{k_{i+2}} = M_{k_i} ((M_{k_{i+1}})^-1)^{q_{i+1}} down to exponent 1, then
// checks result^k2 = D. SingularMatrix if a step's base is singular,
// VerificationError if the check fails.
RecoveryTrace recover_iterative(const HiddenPair& hp, const CoprimePair& pair);

struct BezoutRecovery {
  ExactMatrix result;
  BigInteger p;  // exponent on C
  BigInteger t;  // exponent on D
  OpCount ops;   // excludes verification
  OpCount verify_ops;
};

// C^p D^t with p k1 + t k2 = 1, both powers storage-planned. Same errors as
// recover_iterative.
BezoutRecovery recover_bezout(const HiddenPair& hp, const CoprimePair& pair);

// (p_l, t_l, k_{l+2}) for every descent step: M_{k_{l+2}} = C^{p_l} D^{t_l}.
std::vector<BezoutRow> intermediate_bezout_forms(const CoprimePair& pair);

// C^p D^t for one row.
ExactMatrix apply_bezout_form(const HiddenPair& hp, const BezoutRow& row);

}  // namespace mphide
