#include "cli.hpp"

#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mphide/error.hpp"
#include "mphide/keyexchange.hpp"
#include "mphide/workspace.hpp"

namespace mphide::cli {

std::filesystem::path Context::resolve(const std::string& path) const {
  std::filesystem::path p(path);
  if (p.is_absolute() || workspace.empty()) return p;
  return std::filesystem::path(workspace) / p;
}

std::string Context::read(const std::string& path) const { return read_text_file(resolve(path)); }

void Context::write(const std::string& path, const std::string& content) const {
  write_file_atomic(resolve(path), content);
}

std::vector<BigInteger> parse_integer_list(const std::string& text) {
  std::vector<BigInteger> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(BigInteger::parse(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void print_disclaimer(std::ostream& out) { out << "# " << kKeyExchangeDisclaimer << "\n"; }

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::UnsupportedVersion:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::OutOfRange:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::DivisionByZero:
      return kParseError;
    case ErrorKind::NotCoprime:
    case ErrorKind::BadOrder:
      return kPairError;
    case ErrorKind::SingularMatrix:
    case ErrorKind::ZeroDeterminant:
      return kSingular;
    case ErrorKind::VerificationFailed:
      return kVerificationFailed;
    case ErrorKind::NotInvertible:
    case ErrorKind::SingularZ:
    case ErrorKind::BadSecretKey:
    case ErrorKind::MessageTooLarge:
    case ErrorKind::PartTooWide:
    case ErrorKind::NotPrime:
    case ErrorKind::KeyMismatch:
      return kKeyError;
    case ErrorKind::Io:
      return kFailure;
  }
  return kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hide a complex matrix as two coprime powers and recover it", "mphide"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string workspace;
  if (const char* env = std::getenv("MPHIDE_WORKSPACE")) workspace = env;
  app.add_option("--workspace", workspace,
                 "Directory for relative file paths (default: $MPHIDE_WORKSPACE or the cwd)");

  KeygenOptions keygen;
  auto* keygen_cmd = app.add_subcommand("keygen", "Create an exponent key file");
  keygen_cmd->add_option("--quotients", keygen.quotients, "Number of random quotients to draw");
  keygen_cmd->add_option("--min", keygen.min_quotient, "Smallest quotient drawn")->capture_default_str();
  keygen_cmd->add_option("--seed", keygen.seed, "Random seed")->capture_default_str();
  keygen_cmd->add_option("--pair", keygen.pair, "Explicit exponents k1,k2");
  keygen_cmd->add_option("--out", keygen.out, "Key file to write");

  HideOptions hide;
  auto* hide_cmd = app.add_subcommand("hide", "Compute C = M^k1 and D = M^k2");
  hide_cmd->add_option("--in", hide.in, "Seed matrix file")->required();
  hide_cmd->add_option("--key", hide.key, "Key file")->required();
  hide_cmd->add_option("--out", hide.out, "Hidden pair file")->required();

  RecoverOptions recover;
  auto* recover_cmd = app.add_subcommand("recover", "Recover M from a hidden pair");
  recover_cmd->add_option("--in", recover.in, "Hidden pair file")->required();
  recover_cmd->add_option("--key", recover.key, "Key file")->required();
  recover_cmd->add_option("--out", recover.out, "Recovered matrix file")->required();
  recover_cmd->add_option("--method", recover.method, "iterative or bezout")
      ->check(CLI::IsMember({"iterative", "bezout"}))
      ->capture_default_str();
  recover_cmd->add_option("--rejected", recover.rejected,
                          "Where to dump a matrix that fails verification (default: <out>.rejected)");
  recover_cmd->add_flag("--trace", recover.trace, "Print every descent step");

  DisguiseOptions disguise;
  auto* disguise_cmd = app.add_subcommand("disguise", "Blur a hidden pair with catalog matrices");
  disguise_cmd->add_option("--in", disguise.in, "Hidden pair file")->required();
  disguise_cmd->add_option("--disguise-key", disguise.disguise_key, "Existing disguise key file");
  disguise_cmd->add_option("--key", disguise.key, "Exponent key file (builds a new disguise key)");
  disguise_cmd->add_option("--m", disguise.m, "Modulus m")->capture_default_str();
  disguise_cmd->add_option("--l", disguise.l, "Class index l")->capture_default_str();
  disguise_cmd->add_option("--p-r", disguise.index_c, "Catalog index for C")->capture_default_str();
  disguise_cmd->add_option("--p-s", disguise.index_d, "Catalog index for D")->capture_default_str();
  disguise_cmd->add_option("--out", disguise.out, "Blurred pair file")->required();
  disguise_cmd->add_option("--key-out", disguise.key_out, "Where to write the disguise key");

  RevealOptions reveal;
  auto* reveal_cmd = app.add_subcommand("reveal", "Unblur a disguised pair and recover M");
  reveal_cmd->add_option("--in", reveal.in, "Blurred pair file")->required();
  reveal_cmd->add_option("--disguise-key", reveal.disguise_key, "Disguise key file")->required();
  reveal_cmd->add_option("--out", reveal.out, "Recovered matrix file")->required();
  reveal_cmd->add_option("--rejected", reveal.rejected, "Where to dump a rejected matrix");

  AttackOptions attack;
  auto* attack_cmd = app.add_subcommand("attack", "Brute-force quotient search on a hidden pair");
  attack_cmd->add_option("--in", attack.in, "Hidden pair file")->required();
  attack_cmd->add_option("-L,--max-quotient", attack.max_quotient, "Largest quotient guess")
      ->capture_default_str();
  attack_cmd->add_option("--depth", attack.max_depth, "r_max; levels 1..r_max-1 are searched")
      ->capture_default_str();
  attack_cmd->add_option("--exp-lo", attack.exp_lo, "Lowest exponent tried")->capture_default_str();
  attack_cmd->add_option("--exp-hi", attack.exp_hi, "Highest exponent tried")->capture_default_str();
  attack_cmd->add_option("--max-candidates", attack.max_candidates, "Candidate cap")
      ->capture_default_str();
  attack_cmd->add_option("--threads", attack.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  attack_cmd->add_flag("--no-swap", attack.no_swap, "Skip the swapped orientation");
  attack_cmd->add_option("--report", attack.report, "Write a JSON report");
  attack_cmd->add_option("--out", attack.out, "Write the recovered seed");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Print operation-count tables as CSV");
  bench_cmd->add_option("--table", bench.table, "storage, optimal, curves, growth or all")
      ->check(CLI::IsMember({"storage", "optimal", "curves", "growth", "all"}))
      ->capture_default_str();
  bench_cmd->add_option("--k", bench.k, "Only these exponents: S2, S3 and optimal counts");
  bench_cmd->add_option("--k-max", bench.k_max, "Largest exponent in the growth table")->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "Write CSV to a file instead of stdout");

  ExchangeOptions exchange;
  auto* exchange_cmd = app.add_subcommand("exchange", "Run a toy key distribution end to end");
  exchange_cmd->add_option("protocol", exchange.protocol, "dh or rsa")
      ->required()
      ->check(CLI::IsMember({"dh", "rsa"}));
  exchange_cmd->add_option("--dh-p", exchange.p, "DH prime")->capture_default_str();
  exchange_cmd->add_option("--dh-q", exchange.q, "DH base")->capture_default_str();
  exchange_cmd->add_option("--bob", exchange.bob_secret, "Bob's DH secret")->capture_default_str();
  exchange_cmd->add_option("--alice", exchange.alice_secrets, "Alice's DH secrets, comma separated")
      ->capture_default_str();
  exchange_cmd->add_option("--rsa-p", exchange.rsa_p, "RSA prime p")->capture_default_str();
  exchange_cmd->add_option("--rsa-q", exchange.rsa_q, "RSA prime q")->capture_default_str();
  exchange_cmd->add_option("--rsa-d", exchange.rsa_d, "RSA secret exponent")->capture_default_str();
  exchange_cmd->add_option("--messages", exchange.messages, "Keys to send, comma separated")
      ->capture_default_str();
  exchange_cmd->add_option("--width", exchange.width, "Digits per packed key")->capture_default_str();

  DhOptions dh;
  auto* dh_public_cmd = app.add_subcommand("dh-public", "q^secret mod p");
  dh_public_cmd->add_option("--p", dh.p, "Prime modulus")->required();
  dh_public_cmd->add_option("--q", dh.q, "Base")->required();
  dh_public_cmd->add_option("--secret", dh.secret, "Secret exponent")->required();
  auto* dh_shared_cmd = app.add_subcommand("dh-shared", "received^secret mod p");
  dh_shared_cmd->add_option("--p", dh.p, "Prime modulus")->required();
  dh_shared_cmd->add_option("--received", dh.received, "Other party's public value")->required();
  dh_shared_cmd->add_option("--secret", dh.secret, "Own secret exponent")->required();

  RsaOptions rsa;
  auto* rsa_keygen_cmd = app.add_subcommand("rsa-keygen", "Derive e from p, q and d");
  rsa_keygen_cmd->add_option("--p", rsa.p, "Prime p")->required();
  rsa_keygen_cmd->add_option("--q", rsa.q, "Prime q")->required();
  rsa_keygen_cmd->add_option("--d", rsa.d, "Secret exponent")->required();
  auto* rsa_encrypt_cmd = app.add_subcommand("rsa-encrypt", "message^e mod n");
  rsa_encrypt_cmd->add_option("--message", rsa.value, "Message in [0, n)")->required();
  rsa_encrypt_cmd->add_option("--e", rsa.e, "Public exponent")->required();
  rsa_encrypt_cmd->add_option("--n", rsa.n, "Modulus")->required();
  auto* rsa_decrypt_cmd = app.add_subcommand("rsa-decrypt", "cipher^d mod n");
  rsa_decrypt_cmd->add_option("--cipher", rsa.value, "Cipher text in [0, n)")->required();
  rsa_decrypt_cmd->add_option("--d", rsa.d, "Secret exponent")->required();
  rsa_decrypt_cmd->add_option("--n", rsa.n, "Modulus")->required();

  PackOptions pack;
  auto* pack_cmd = app.add_subcommand("pack", "Concatenate keys as fixed-width decimals");
  pack_cmd->add_option("--parts", pack.parts, "Keys, comma separated")->required();
  pack_cmd->add_option("--width", pack.width, "Digits per key")->capture_default_str();
  auto* unpack_cmd = app.add_subcommand("unpack", "Split a packed key");
  unpack_cmd->add_option("--value", pack.value, "Packed number")->required();
  unpack_cmd->add_option("--count", pack.count, "Number of keys")->capture_default_str();
  unpack_cmd->add_option("--width", pack.width, "Digits per key")->capture_default_str();

  std::vector<const char*> argv{"mphide"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  const Context ctx{out, err, workspace};
  try {
    if (*keygen_cmd) return cmd_keygen(ctx, keygen);
    if (*hide_cmd) return cmd_hide(ctx, hide);
    if (*recover_cmd) return cmd_recover(ctx, recover);
    if (*disguise_cmd) return cmd_disguise(ctx, disguise);
    if (*reveal_cmd) return cmd_reveal(ctx, reveal);
    if (*attack_cmd) return cmd_attack(ctx, attack);
    if (*bench_cmd) return cmd_bench(ctx, bench);
    if (*exchange_cmd) return cmd_exchange(ctx, exchange);
    if (*dh_public_cmd) return cmd_dh_public(ctx, dh);
    if (*dh_shared_cmd) return cmd_dh_shared(ctx, dh);
    if (*rsa_keygen_cmd) return cmd_rsa_keygen(ctx, rsa);
    if (*rsa_encrypt_cmd) return cmd_rsa_encrypt(ctx, rsa);
    if (*rsa_decrypt_cmd) return cmd_rsa_decrypt(ctx, rsa);
    if (*pack_cmd) return cmd_pack(ctx, pack);
    if (*unpack_cmd) return cmd_unpack(ctx, pack);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kParseError;
}

}  // namespace mphide::cli
