#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cli.hpp"
#include "common.hpp"

namespace mphide::cli {

struct KeygenOptions {
  std::size_t quotients = 0;
  std::uint64_t min_quotient = 5;
  std::uint64_t seed = 1;
  std::string pair;
  std::string out;
};
int cmd_keygen(const Context& ctx, const KeygenOptions& o);

struct HideOptions {
  std::string in;
  std::string key;
  std::string out;
};
int cmd_hide(const Context& ctx, const HideOptions& o);

struct RecoverOptions {
  std::string in;
  std::string key;
  std::string out;
  std::string method = "iterative";
  std::string rejected;  // side file for a matrix that failed verification
  bool trace = false;
};
int cmd_recover(const Context& ctx, const RecoverOptions& o);

struct DisguiseOptions {
  std::string in;
  std::string key;  // plain exponent key, used with --m/--l/--p-r/--p-s
  std::string disguise_key;
  std::string m = "11";
  std::string l = "0";
  std::size_t index_c = 1;
  std::size_t index_d = 2;
  std::string out;
  std::string key_out;
};
int cmd_disguise(const Context& ctx, const DisguiseOptions& o);

struct RevealOptions {
  std::string in;
  std::string disguise_key;
  std::string out;
  std::string rejected;
};
int cmd_reveal(const Context& ctx, const RevealOptions& o);

struct AttackOptions {
  std::string in;
  std::uint64_t max_quotient = 6;
  std::uint64_t max_depth = 6;
  std::uint64_t exp_lo = 2;
  std::uint64_t exp_hi = 20;
  std::uint64_t max_candidates = 10'000'000;
  unsigned threads = 1;
  bool no_swap = false;
  std::string report;
  std::string out;
};
int cmd_attack(const Context& ctx, const AttackOptions& o);

struct BenchOptions {
  std::string table = "all";
  std::vector<std::uint64_t> k;
  std::uint64_t k_max = 200;
  std::string out;
};
int cmd_bench(const Context& ctx, const BenchOptions& o);

struct ExchangeOptions {
  std::string protocol;  // dh | rsa
  // dh
  std::string p = "457";
  std::string q = "7832";
  std::string bob_secret = "2";
  std::string alice_secrets = "11,7";
  // rsa
  std::string rsa_p = "37";
  std::string rsa_q = "53";
  std::string rsa_d = "163";
  std::string messages = "361,79";
  std::size_t width = 3;
};
int cmd_exchange(const Context& ctx, const ExchangeOptions& o);

struct DhOptions {
  std::string p;
  std::string q;
  std::string received;
  std::string secret;
};
int cmd_dh_public(const Context& ctx, const DhOptions& o);
int cmd_dh_shared(const Context& ctx, const DhOptions& o);

struct RsaOptions {
  std::string p;
  std::string q;
  std::string d;
  std::string e;
  std::string n;
  std::string value;
};
int cmd_rsa_keygen(const Context& ctx, const RsaOptions& o);
int cmd_rsa_encrypt(const Context& ctx, const RsaOptions& o);
int cmd_rsa_decrypt(const Context& ctx, const RsaOptions& o);

struct PackOptions {
  std::string parts;
  std::string value;
  std::size_t count = 2;
  std::size_t width = 3;
};
int cmd_pack(const Context& ctx, const PackOptions& o);
int cmd_unpack(const Context& ctx, const PackOptions& o);

}  // namespace mphide::cli
