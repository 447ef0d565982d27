#include <ostream>

#include "commands.hpp"
#include "mphide/error.hpp"
#include "mphide/euclid.hpp"
#include "mphide/keyexchange.hpp"

namespace mphide::cli {
namespace {

BigInteger parse(const std::string& text) { return BigInteger::parse(text); }

// Reports whether the agreed keys can serve directly as an exponent pair.
void describe_pair(std::ostream& out, const std::vector<BigInteger>& keys) {
  if (keys.size() != 2) return;
  const BigInteger& a = keys[0] > keys[1] ? keys[0] : keys[1];
  const BigInteger& b = keys[0] > keys[1] ? keys[1] : keys[0];
  try {
    CoprimePair pair(a, b);
    out << "exponent pair: (" << pair.k1() << ", " << pair.k2() << ")\n";
  } catch (const Error& e) {
    out << "the agreed keys are not a usable exponent pair: " << e.what() << "\n";
  }
}

int exchange_dh(const Context& ctx, const ExchangeOptions& o) {
  const DHParams params{parse(o.p), parse(o.q)};
  params.validate();
  const BigInteger bob = parse(o.bob_secret);
  const auto alice = parse_integer_list(o.alice_secrets);
  if (alice.empty()) raise(ErrorKind::Parse, "--alice needs at least one secret");

  const BigInteger bob_public = dh_public(params, bob);
  ctx.out << "p = " << params.p << ", base = " << params.q << "\n"
          << "Bob publishes " << bob_public << "\n";
  std::vector<BigInteger> keys;
  for (std::size_t i = 0; i < alice.size(); ++i) {
    const BigInteger alice_public = dh_public(params, alice[i]);
    const BigInteger at_alice = dh_shared(params, bob_public, alice[i]);
    const BigInteger at_bob = dh_shared(params, alice_public, bob);
    ctx.out << "key " << i + 1 << ": Alice publishes " << alice_public << ", shared " << at_alice
            << (at_alice == at_bob ? " (both sides agree)" : " (MISMATCH)") << "\n";
    if (at_alice != at_bob) return kFailure;
    keys.push_back(at_alice);
  }
  describe_pair(ctx.out, keys);
  return kOk;
}

int exchange_rsa(const Context& ctx, const ExchangeOptions& o) {
  const RSAKeySet keys = rsa_keygen(parse(o.rsa_p), parse(o.rsa_q), parse(o.rsa_d));
  const auto messages = parse_integer_list(o.messages);
  if (messages.empty()) raise(ErrorKind::Parse, "--messages needs at least one key");
  ctx.out << "Bob publishes n = " << keys.n << ", e = " << keys.e << "\n";
  std::vector<BigInteger> received;
  for (std::size_t i = 0; i < messages.size(); ++i) {
    const BigInteger cipher = rsa_encrypt(messages[i], keys.e, keys.n);
    const BigInteger plain = rsa_decrypt(cipher, keys.d, keys.n);
    ctx.out << "key " << i + 1 << ": " << messages[i] << " -> " << cipher << " -> " << plain
            << "\n";
    if (plain != messages[i]) return kFailure;
    received.push_back(plain);
  }
  ctx.out << "packed: " << pack_keys(received, o.width) << "\n";
  describe_pair(ctx.out, received);
  return kOk;
}

}  // namespace

int cmd_exchange(const Context& ctx, const ExchangeOptions& o) {
  print_disclaimer(ctx.out);
  if (o.protocol == "dh") return exchange_dh(ctx, o);
  if (o.protocol == "rsa") return exchange_rsa(ctx, o);
  raise(ErrorKind::Parse, "protocol must be dh or rsa");
}

int cmd_dh_public(const Context& ctx, const DhOptions& o) {
  print_disclaimer(ctx.out);
  const DHParams params{parse(o.p), parse(o.q)};
  params.validate();
  ctx.out << dh_public(params, parse(o.secret)) << "\n";
  return kOk;
}

int cmd_dh_shared(const Context& ctx, const DhOptions& o) {
  print_disclaimer(ctx.out);
  // The base plays no part in the shared value.
  const DHParams params{parse(o.p), BigInteger(1)};
  params.validate();
  ctx.out << dh_shared(params, parse(o.received), parse(o.secret)) << "\n";
  return kOk;
}

int cmd_rsa_keygen(const Context& ctx, const RsaOptions& o) {
  print_disclaimer(ctx.out);
  const RSAKeySet k = rsa_keygen(parse(o.p), parse(o.q), parse(o.d));
  ctx.out << "n = " << k.n << "\nphi = " << k.phi << "\nd = " << k.d << "\ne = " << k.e << "\n";
  return kOk;
}

int cmd_rsa_encrypt(const Context& ctx, const RsaOptions& o) {
  print_disclaimer(ctx.out);
  ctx.out << rsa_encrypt(parse(o.value), parse(o.e), parse(o.n)) << "\n";
  return kOk;
}

int cmd_rsa_decrypt(const Context& ctx, const RsaOptions& o) {
  print_disclaimer(ctx.out);
  ctx.out << rsa_decrypt(parse(o.value), parse(o.d), parse(o.n)) << "\n";
  return kOk;
}

int cmd_pack(const Context& ctx, const PackOptions& o) {
  print_disclaimer(ctx.out);
  ctx.out << pack_keys(parse_integer_list(o.parts), o.width) << "\n";
  return kOk;
}

int cmd_unpack(const Context& ctx, const PackOptions& o) {
  print_disclaimer(ctx.out);
  const auto parts = unpack_keys(parse(o.value), o.count, o.width);
  for (std::size_t i = 0; i < parts.size(); ++i) ctx.out << (i ? "," : "") << parts[i];
  ctx.out << "\n";
  return kOk;
}

}  // namespace mphide::cli
