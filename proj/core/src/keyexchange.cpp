#include "mphide/keyexchange.hpp"

#include <array>

#include "mphide/error.hpp"

namespace mphide {
namespace {

constexpr long long kTrialLimit = 1'000'000;

bool trial_division(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool miller_rabin(const BigInteger& n) {
  static const std::array<long long, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  const BigInteger one = 1;
  const BigInteger n_minus_1 = n - one;
  BigInteger d = n_minus_1;
  unsigned s = 0;
  while (!d.is_odd()) {
    d = d / 2;
    ++s;
  }
  for (long long w : kWitnesses) {
    BigInteger x = pow_mod(w, d, n);
    if (x == one || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::string decimal_width_error(const BigInteger& part, std::size_t width) {
  return part.to_string() + " does not fit in " + std::to_string(width) + " decimal digits";
}

}  // namespace

bool is_probable_prime(const BigInteger& n) {
  if (n < BigInteger(kTrialLimit)) return trial_division(n.to_int64());
  for (long long small = 2; small < 1000; ++small) {
    if ((n % small).is_zero()) return false;
  }
  return miller_rabin(n);
}

void DHParams::validate() const {
  if (!is_probable_prime(p)) raise(ErrorKind::NotPrime, p.to_string() + " is not prime");
  if ((q % p).is_zero()) raise(ErrorKind::OutOfRange, "base is a multiple of the modulus");
}

BigInteger dh_public(const DHParams& params, const BigInteger& secret) {
  if (secret < BigInteger(1)) raise(ErrorKind::OutOfRange, "secret must be at least 1");
  return pow_mod(params.q, secret, params.p);
}

BigInteger dh_shared(const DHParams& params, const BigInteger& received, const BigInteger& secret) {
  if (received.sign() <= 0 || received >= params.p) {
    raise(ErrorKind::OutOfRange, "received value must lie in (0, p)");
  }
  if (secret < BigInteger(1)) raise(ErrorKind::OutOfRange, "secret must be at least 1");
  return pow_mod(received, secret, params.p);
}

std::vector<std::vector<BigInteger>> dh_pairwise(const DHParams& params,
                                                 const std::vector<BigInteger>& secrets) {
  if (secrets.size() < 2) raise(ErrorKind::OutOfRange, "need at least two parties");
  const std::size_t n = secrets.size();
  std::vector<BigInteger> published;
  published.reserve(n);
  for (const auto& a : secrets) published.push_back(dh_public(params, a));
  std::vector<std::vector<BigInteger>> k(n, std::vector<BigInteger>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      k[i][j] = dh_shared(params, published[j], secrets[i]);
      k[j][i] = k[i][j];
    }
  }
  return k;
}

std::optional<DHSearchHit> dh_search(const DHParams& params, const BigInteger& received,
                                     const BigInteger& lo, const BigInteger& hi,
                                     const std::function<bool(const BigInteger&)>& accept) {
  for (BigInteger x = lo < BigInteger(1) ? BigInteger(1) : lo; x <= hi; x += 1) {
    BigInteger k = dh_shared(params, received, x);
    if (accept(k)) return DHSearchHit{x, std::move(k)};
  }
  return std::nullopt;
}

RSAKeySet rsa_keygen(const BigInteger& p, const BigInteger& q, const BigInteger& d) {
  for (const auto* f : {&p, &q}) {
    if (!is_probable_prime(*f)) raise(ErrorKind::NotPrime, f->to_string() + " is not prime");
  }
  RSAKeySet keys{p, q, p * q, (p - 1) * (q - 1), d, 0};
  if (d <= BigInteger(1) || gcd(d, keys.phi) != BigInteger(1) || gcd(d, keys.n) != BigInteger(1)) {
    raise(ErrorKind::BadSecretKey, "secret exponent " + d.to_string() +
                                       " must exceed 1 and be coprime to n and phi(n) = " +
                                       keys.phi.to_string());
  }
  keys.e = mod_inverse(d, keys.phi);
  return keys;
}

BigInteger rsa_encrypt(const BigInteger& message, const BigInteger& e, const BigInteger& n) {
  if (message.sign() < 0 || message >= n) {
    raise(ErrorKind::MessageTooLarge, message.to_string() + " is outside [0, " + n.to_string() + ")");
  }
  return pow_mod(message, e, n);
}

BigInteger rsa_decrypt(const BigInteger& cipher, const BigInteger& d, const BigInteger& n) {
  if (cipher.sign() < 0 || cipher >= n) {
    raise(ErrorKind::MessageTooLarge, cipher.to_string() + " is outside [0, " + n.to_string() + ")");
  }
  return pow_mod(cipher, d, n);
}

BigInteger pack_keys(const std::vector<BigInteger>& parts, std::size_t width) {
  if (width == 0) raise(ErrorKind::PartTooWide, "width must be positive");
  const BigInteger base = pow(BigInteger(10), width);
  BigInteger packed = 0;
  for (const auto& part : parts) {
    if (part.sign() < 0 || part >= base) raise(ErrorKind::PartTooWide, decimal_width_error(part, width));
    packed = packed * base + part;
  }
  return packed;
}

std::vector<BigInteger> unpack_keys(const BigInteger& packed, std::size_t parts, std::size_t width) {
  if (width == 0) raise(ErrorKind::PartTooWide, "width must be positive");
  if (packed.sign() < 0 || packed >= pow(BigInteger(10), width * parts)) {
    raise(ErrorKind::PartTooWide, decimal_width_error(packed, width * parts));
  }
  const BigInteger base = pow(BigInteger(10), width);
  std::vector<BigInteger> out(parts);
  BigInteger rest = packed;
  for (std::size_t i = parts; i-- > 0;) {
    out[i] = rest % base;
    rest = rest / base;
  }
  return out;
}

}  // namespace mphide
