#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "commands.hpp"
#include "mphide/attack.hpp"
#include "mphide/disguise.hpp"
#include "mphide/error.hpp"
#include "mphide/euclid.hpp"
#include "mphide/hide_recover.hpp"
#include "mphide/workspace.hpp"

namespace mphide::cli {
namespace {

std::string join(const std::vector<BigInteger>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].to_string();
  return s;
}

void print_leak(std::ostream& out, const char* label, const HiddenPair& hp) {
  const auto leak = det_ratio_leak(hp);
  out << label << std::fixed << std::setprecision(5) << leak.real() << (leak.imag() < 0 ? "-" : "+")
      << std::fabs(leak.imag()) << "i\n";
  out.unsetf(std::ios::floatfield);
}

std::string rejected_path(const std::string& explicit_path, const std::string& out) {
  return explicit_path.empty() ? out + ".rejected" : explicit_path;
}

int reject(const Context& ctx, const VerificationError& e, const std::string& path) {
  ctx.write(path, encode_matrix(e.candidate()));
  ctx.err << "error: " << e.what() << "\n"
          << "the rejected matrix was written to " << ctx.resolve(path).string() << "\n";
  return kVerificationFailed;
}

}  // namespace

int cmd_keygen(const Context& ctx, const KeygenOptions& o) {
  std::optional<KeyFile> key;
  if (!o.pair.empty()) {
    const auto parts = parse_integer_list(o.pair);
    if (parts.size() != 2) raise(ErrorKind::Parse, "--pair needs exactly two integers k1,k2");
    CoprimePair pair(parts[0], parts[1]);
    key = KeyFile{pair, quotient_sequence(pair)};
  } else if (o.quotients > 0) {
    GeneratedKey g = keygen_quotients(o.quotients, o.min_quotient, o.seed);
    key = KeyFile{g.pair, g.quotients};
  } else {
    raise(ErrorKind::Parse, "give --pair k1,k2 or --quotients N");
  }
  ctx.out << "k1 = " << key->pair.k1() << "\n"
          << "k2 = " << key->pair.k2() << "\n"
          << "quotients = " << join(key->quotients->terms()) << "\n"
          << "recovery operations = " << recovery_op_count(*key->quotients) << "\n";
  if (!o.out.empty()) ctx.write(o.out, encode_key(*key));
  return kOk;
}

int cmd_hide(const Context& ctx, const HideOptions& o) {
  const ExactMatrix seed = decode_matrix(ctx.read(o.in));
  const KeyFile key = decode_key(ctx.read(o.key));
  const HideResult r = hide(seed, key.pair);
  ctx.write(o.out, encode_hidden_pair(r.hidden));
  ctx.out << "hidden with exponents (" << key.pair.k1() << ", " << key.pair.k2() << ")\n"
          << "stored powers: " << r.storage << "\n"
          << "multiplications: " << r.shared.multiplications << " shared table, "
          << r.per_power_c.multiplications << " + " << r.per_power_d.multiplications
          << " computed separately\n";
  return kOk;
}

int cmd_recover(const Context& ctx, const RecoverOptions& o) {
  const HiddenPair hp = decode_hidden_pair(ctx.read(o.in));
  const KeyFile key = decode_key(ctx.read(o.key));
  try {
    if (o.method == "bezout") {
      const BezoutRecovery r = recover_bezout(hp, key.pair);
      ctx.write(o.out, encode_matrix(r.result));
      ctx.out << "M = C^(" << r.p << ") D^(" << r.t << ")\n"
              << "multiplications: " << r.ops.multiplications << ", inversions: " << r.ops.inversions
              << "\n";
      return kOk;
    }
    const RecoveryTrace t = recover_iterative(hp, key.pair);
    ctx.write(o.out, encode_matrix(t.result));
    if (o.trace) {
      const auto steps = euclid_steps(key.pair);
      ctx.out << "step,k_i,k_i+1,q_i+1,k_i+2,multiplications,inversions\n";
      for (std::size_t i = 0; i < t.steps.size(); ++i) {
        ctx.out << i + 1 << "," << steps[i].dividend << "," << steps[i].divisor << ","
                << t.steps[i].quotient << "," << t.steps[i].exponent << ","
                << t.steps[i].ops.multiplications << "," << t.steps[i].ops.inversions << "\n";
      }
    }
    ctx.out << "recovered in " << t.steps.size() << " steps, " << t.total.total()
            << " operations (" << t.total.multiplications << " multiplications, "
            << t.total.inversions << " inversions)\n";
    return kOk;
  } catch (const VerificationError& e) {
    return reject(ctx, e, rejected_path(o.rejected, o.out));
  }
}

int cmd_disguise(const Context& ctx, const DisguiseOptions& o) {
  const HiddenPair hp = decode_hidden_pair(ctx.read(o.in));
  DisguiseKey key;
  if (!o.disguise_key.empty()) {
    key = decode_disguise_key(ctx.read(o.disguise_key));
  } else if (!o.key.empty()) {
    const KeyFile k = decode_key(ctx.read(o.key));
    key = {k.pair.k1(), k.pair.k2(), BigInteger::parse(o.m), BigInteger::parse(o.l), o.index_c,
           o.index_d};
    key.validate();
  } else {
    raise(ErrorKind::Parse, "give --disguise-key FILE or --key FILE with --m/--l/--p-r/--p-s");
  }
  OpCount ops;
  const HiddenPair blurred = blur(hp, key, ops);
  ctx.write(o.out, encode_hidden_pair(blurred));
  if (!o.key_out.empty()) ctx.write(o.key_out, encode_disguise_key(key));
  ctx.out << "z = " << derive_z(key) << "\n"
          << "catalog entries: " << key.index_c << " " << catalog_formula(key.index_c) << ", "
          << key.index_d << " " << catalog_formula(key.index_d) << "\n"
          << "extra multiplications: " << ops.multiplications << "\n";
  print_leak(ctx.out, "ln det C / ln det D before: ", hp);
  print_leak(ctx.out, "ln det C / ln det D after:  ", blurred);
  return kOk;
}

int cmd_reveal(const Context& ctx, const RevealOptions& o) {
  const HiddenPair blurred = decode_hidden_pair(ctx.read(o.in));
  const DisguiseKey key = decode_disguise_key(ctx.read(o.disguise_key));
  OpCount ops;
  const HiddenPair hp = unblur(blurred, key, ops);
  try {
    const BezoutRecovery r = recover_bezout(hp, key.pair());
    ctx.write(o.out, encode_matrix(r.result));
    ops += r.ops;
    ctx.out << "M = C^(" << r.p << ") D^(" << r.t << ") after unblurring\n"
            << "multiplications: " << ops.multiplications << ", inversions: " << ops.inversions
            << "\n";
    return kOk;
  } catch (const VerificationError& e) {
    return reject(ctx, e, rejected_path(o.rejected, o.out));
  }
}

int cmd_attack(const Context& ctx, const AttackOptions& o) {
  const HiddenPair hp = decode_hidden_pair(ctx.read(o.in));
  AttackBudget budget;
  budget.max_quotient = o.max_quotient;
  budget.max_depth = o.max_depth;
  budget.exp_lo = o.exp_lo;
  budget.exp_hi = o.exp_hi;
  budget.max_candidates = o.max_candidates;
  budget.threads = o.threads;
  budget.try_swapped = !o.no_swap;
  const AttackReport r = brute_force_attack(hp, budget);

  nlohmann::json body;
  body["budget"] = {{"L", budget.max_quotient},          {"r_max", budget.max_depth},
                    {"exp_lo", budget.exp_lo},           {"exp_hi", budget.exp_hi},
                    {"max_candidates", budget.max_candidates}, {"try_swapped", budget.try_swapped}};
  body["found"] = r.found.has_value();
  body["candidates_tested"] = r.candidates_tested;
  body["primary_candidates"] = r.primary_candidates;
  body["swapped_candidates"] = r.swapped_candidates;
  body["multiplications"] = r.multiplications;
  body["inversions"] = r.inversions;
  body["depth_reached"] = r.depth_reached;
  body["tabulated_multiplications"] = r.tabulated_multiplications.to_string();
  body["enumerate_cost"] =
      enumerate_cost(BigInteger(static_cast<long long>(budget.max_quotient)), budget.max_depth)
          .to_string();
  if (r.found) {
    body["path"] = r.found->path;
    body["orientation"] = r.found->orientation == Orientation::Primary ? "primary" : "swapped";
    body["exponent_c"] = r.found->exponent_c;
    body["exponent_d"] = r.found->exponent_d;
    body["seed"] = r.found->seed.row_strings();
  }
  if (!o.report.empty()) ctx.write(o.report, encode_report("attack", body.dump()));

  ctx.out << "candidates tested: " << r.candidates_tested << " (primary " << r.primary_candidates
          << ", swapped " << r.swapped_candidates << ")\n"
          << "multiplications: " << r.multiplications << ", inversions: " << r.inversions << "\n"
          << "depth reached: " << r.depth_reached << "\n"
          << "elapsed: " << r.elapsed.count() << " s\n";
  if (!r.found) {
    ctx.out << "seed not found within the budget\n";
    return kBudgetExhausted;
  }
  ctx.out << "seed found via path";
  for (auto m : r.found->path) ctx.out << " " << m;
  ctx.out << ": seed^" << r.found->exponent_c << " = C, seed^" << r.found->exponent_d << " = D\n";
  if (!o.out.empty()) ctx.write(o.out, encode_matrix(r.found->seed));
  return kOk;
}

}  // namespace mphide::cli
