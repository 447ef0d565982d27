#include "mphide/hide_recover.hpp"

#include <tuple>

#include "mphide/error.hpp"

namespace mphide {
namespace {

void require_pair_dims(const HiddenPair& hp) {
  if (hp.c.dim() != hp.d.dim() || hp.c.dim() == 0) {
    raise(ErrorKind::DimensionMismatch, "hidden pair matrices differ in size");
  }
}

ExactMatrix naive_power(const ExactMatrix& base, const BigInteger& k, OpCount& ops) {
  ExactMatrix result = base;
  for (BigInteger i = 1; i < k; i += 1) result = multiply(result, base, ops);
  return result;
}

// X^k2 == D with a storage-planned power; throws VerificationError otherwise.
OpCount verify(const HiddenPair& hp, const CoprimePair& pair, const ExactMatrix& x) {
  PowerResult check = power(x, pair.k2());
  if (check.value != hp.d) {
    throw VerificationError("recovered matrix raised to " + pair.k2().to_string() +
                                " does not reproduce D; wrong key?",
                            x);
  }
  return check.ops;
}

}  // namespace

HideResult hide(const ExactMatrix& seed, const CoprimePair& pair) {
  if (determinant(seed).is_zero()) raise(ErrorKind::SingularMatrix, "seed matrix is singular");
  const std::uint64_t k1 = pair.k1().to_uint64();
  const std::uint64_t k2 = pair.k2().to_uint64();

  HideResult out;
  const PowerPlan plan_c = optimal_storage(k1);
  out.storage = plan_c.storage;
  out.per_power_c.multiplications = plan_c.predicted_ops;
  out.per_power_d.multiplications = optimal_storage(k2).predicted_ops;

  const PowerTable table(seed, out.storage);
  out.shared = table.build_ops();
  out.hidden.c = table.power(k1, out.shared);
  out.hidden.d = table.power(k2, out.shared);
  return out;
}

RecoveryTrace recover_iterative(const HiddenPair& hp, const CoprimePair& pair) {
  require_pair_dims(hp);
  RecoveryTrace trace;
  ExactMatrix prev = hp.c;
  ExactMatrix cur = hp.d;
  for (const auto& s : euclid_steps(pair)) {
    if (s.remainder.is_zero()) break;
    RecoveryStep step{s.remainder, s.quotient, {}};
    const ExactMatrix cur_inv = inverse(cur, step.ops);
    ExactMatrix next = multiply(prev, naive_power(cur_inv, s.quotient, step.ops), step.ops);
    trace.total += step.ops;
    trace.steps.push_back(std::move(step));
    prev = std::move(cur);
    cur = std::move(next);
  }
  trace.result = std::move(cur);
  trace.verify_ops = verify(hp, pair, trace.result);
  return trace;
}

BezoutRecovery recover_bezout(const HiddenPair& hp, const CoprimePair& pair) {
  require_pair_dims(hp);
  BezoutRecovery out;
  std::tie(out.p, out.t) = bezout_table(pair).identity();
  if (out.p.is_zero()) {
    PowerResult d_part = power(hp.d, out.t);
    out.result = std::move(d_part.value);
    out.ops = d_part.ops;
  } else {
    PowerResult c_part = power(hp.c, out.p);
    PowerResult d_part = power(hp.d, out.t);
    out.ops = c_part.ops + d_part.ops;
    out.result = multiply(c_part.value, d_part.value, out.ops);
  }
  out.verify_ops = verify(hp, pair, out.result);
  return out;
}

std::vector<BezoutRow> intermediate_bezout_forms(const CoprimePair& pair) {
  return bezout_table(pair).rows;
}

ExactMatrix apply_bezout_form(const HiddenPair& hp, const BezoutRow& row) {
  require_pair_dims(hp);
  return power(hp.c, row.p).value * power(hp.d, row.t).value;
}

}  // namespace mphide
