#include "mphide/disguise.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include "mphide/error.hpp"

namespace mphide {
namespace {

using Block = std::array<GaussianRational, 4>;  // (a b; c d)
using BlockFn = Block (*)(const GaussianRational& z, const GaussianRational& zc);

struct CatalogEntry {
  const char* formula;
  BlockFn make;
};

const GaussianRational kI = GaussianRational::i();

// Entries may be appended in a new catalog version, never reordered.
const std::array<CatalogEntry, 9> kCatalog{{
    {"(1 0; 0 1)", [](const GaussianRational&, const GaussianRational&) -> Block { return {1, 0, 0, 1}; }},
    {"(z 1; -1 z*)", [](const GaussianRational& z, const GaussianRational& zc) -> Block { return {z, 1, -1, zc}; }},
    {"(i z; z* -i)", [](const GaussianRational& z, const GaussianRational& zc) -> Block { return {kI, z, zc, -kI}; }},
    {"(z* 1; -1 z)", [](const GaussianRational& z, const GaussianRational& zc) -> Block { return {zc, 1, -1, z}; }},
    {"(-i z*; z i)", [](const GaussianRational& z, const GaussianRational& zc) -> Block { return {-kI, zc, z, kI}; }},
    {"(1 z; 0 1)", [](const GaussianRational& z, const GaussianRational&) -> Block { return {1, z, 0, 1}; }},
    {"(1 0; z* 1)", [](const GaussianRational&, const GaussianRational& zc) -> Block { return {1, 0, zc, 1}; }},
    {"(z i; i z*)", [](const GaussianRational& z, const GaussianRational& zc) -> Block { return {z, kI, kI, zc}; }},
    {"(z 0; 0 1)", [](const GaussianRational& z, const GaussianRational&) -> Block { return {z, 0, 0, 1}; }},
}};

const CatalogEntry& entry(std::size_t index) {
  if (index >= kCatalog.size()) {
    raise(ErrorKind::IndexOutOfRange, "catalog has no entry " + std::to_string(index) +
                                          " (valid: 0.." + std::to_string(kCatalog.size() - 1) + ")");
  }
  return kCatalog[index];
}

// x = mantissa * 2^exponent with |mantissa| in [0.5, 1), or 0.
struct Scaled {
  double mantissa = 0.0;
  long exponent = 0;
};

Scaled scaled(const BigRational& x) {
  if (x.is_zero()) return {};
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, x.mpq().get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, x.mpq().get_den_mpz_t());
  int e = 0;
  const double m = std::frexp(mn / md, &e);
  return {m, en - ed + e};
}

}  // namespace

void DisguiseKey::validate() const {
  (void)pair();
  if (m <= BigInteger(1)) raise(ErrorKind::OutOfRange, "modulus m must exceed 1");
  if (l.sign() < 0) raise(ErrorKind::OutOfRange, "class index l must be nonnegative");
  for (const auto* k : {&k1, &k2}) {
    if (gcd(*k, m) != BigInteger(1)) {
      raise(ErrorKind::NotInvertible, k->to_string() + " has no inverse modulo " + m.to_string());
    }
  }
  (void)entry(index_c);
  (void)entry(index_d);
  if (index_c == index_d) raise(ErrorKind::OutOfRange, "the two catalog indices must differ");
}

GaussianRational derive_z(const DisguiseKey& key) {
  return {mod_inverse_class(key.k1, key.m, key.l), mod_inverse_class(key.k2, key.m, key.l)};
}

std::size_t catalog_size() { return kCatalog.size() - 1; }

std::string catalog_formula(std::size_t index) { return entry(index).formula; }

std::string catalog_manifest() {
  std::string out = "# Z catalog, version " + std::to_string(kCatalogVersion) + "\n";
  out += "# index: 2x2 block in terms of z and its conjugate z*, rows separated by ';'\n";
  out += "# larger dimensions repeat the block along the diagonal; odd sizes end with 1\n";
  for (std::size_t i = 0; i < kCatalog.size(); ++i) {
    out += std::to_string(i) + ": " + kCatalog[i].formula + "\n";
  }
  return out;
}

ExactMatrix catalog_matrix(std::size_t index, const GaussianRational& z, std::size_t dim) {
  const CatalogEntry& e = entry(index);
  if (index == 0) return ExactMatrix::identity(dim);
  if (dim < 2) raise(ErrorKind::DimensionMismatch, "catalog matrices need dimension >= 2");
  const Block b = e.make(z, z.conj());
  if ((b[0] * b[3] - b[1] * b[2]).is_zero()) {
    raise(ErrorKind::SingularZ,
          "catalog entry " + std::to_string(index) + " is singular for z = " + z.to_string());
  }
  ExactMatrix out = ExactMatrix::identity(dim);
  for (std::size_t k = 0; k + 1 < dim; k += 2) {
    out(k, k) = b[0];
    out(k, k + 1) = b[1];
    out(k + 1, k) = b[2];
    out(k + 1, k + 1) = b[3];
  }
  return out;
}

HiddenPair blur(const HiddenPair& hp, const DisguiseKey& key, OpCount& ops) {
  key.validate();
  const GaussianRational z = derive_z(key);
  const std::size_t n = hp.c.dim();
  return {multiply(catalog_matrix(key.index_c, z, n), hp.c, ops),
          multiply(catalog_matrix(key.index_d, z, n), hp.d, ops)};
}

HiddenPair blur(const HiddenPair& hp, const DisguiseKey& key) {
  OpCount ops;
  return blur(hp, key, ops);
}

HiddenPair unblur(const HiddenPair& blurred, const DisguiseKey& key, OpCount& ops) {
  key.validate();
  const GaussianRational z = derive_z(key);
  const std::size_t n = blurred.c.dim();
  const ExactMatrix zc_inv = inverse(catalog_matrix(key.index_c, z, n), ops);
  const ExactMatrix zd_inv = inverse(catalog_matrix(key.index_d, z, n), ops);
  return {multiply(zc_inv, blurred.c, ops), multiply(zd_inv, blurred.d, ops)};
}

HiddenPair unblur(const HiddenPair& blurred, const DisguiseKey& key) {
  OpCount ops;
  return unblur(blurred, key, ops);
}

std::complex<double> principal_log(const GaussianRational& x) {
  if (x.is_zero()) raise(ErrorKind::ZeroDeterminant, "logarithm of zero");
  // ln|x| = (ln num(|x|^2) - ln den(|x|^2)) / 2, each through mantissa and exponent.
  const BigRational n = x.norm();
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, n.mpq().get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, n.mpq().get_den_mpz_t());
  const double log_abs =
      0.5 * (std::log(mn) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0));

  // arg(x) from re and im brought to a common binary exponent.
  const Scaled re = scaled(x.real());
  const Scaled im = scaled(x.imag());
  long top = 0;
  if (re.mantissa != 0.0 && im.mantissa != 0.0) {
    top = std::max(re.exponent, im.exponent);
  } else {
    top = re.mantissa != 0.0 ? re.exponent : im.exponent;
  }
  const double r = std::ldexp(re.mantissa, static_cast<int>(std::max(re.exponent - top, -2000L)));
  const double i = std::ldexp(im.mantissa, static_cast<int>(std::max(im.exponent - top, -2000L)));
  double arg = std::atan2(i, r);
  if (arg == -std::numbers::pi) arg = std::numbers::pi;  // principal branch is (-pi, pi]
  return {log_abs, arg};
}

std::complex<double> det_ratio_leak(const HiddenPair& hp) {
  const GaussianRational det_c = determinant(hp.c);
  const GaussianRational det_d = determinant(hp.d);
  if (det_c.is_zero() || det_d.is_zero()) {
    raise(ErrorKind::ZeroDeterminant, "hidden pair has a singular matrix");
  }
  const std::complex<double> denom = principal_log(det_d);
  if (denom == std::complex<double>(0.0, 0.0)) {
    raise(ErrorKind::DivisionByZero, "ln det D is zero");
  }
  return principal_log(det_c) / denom;
}

std::vector<FractionGuess> small_fraction_guesses(double x, long long max_denominator,
                                                  std::size_t count) {
  std::vector<FractionGuess> out;
  for (long long b = 1; b <= max_denominator; ++b) {
    const auto a = static_cast<long long>(std::llround(x * static_cast<double>(b)));
    if (std::gcd(a, b) != 1) continue;
    out.push_back({a, b, std::fabs(static_cast<double>(a) / static_cast<double>(b) - x)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const FractionGuess& p, const FractionGuess& q) { return p.error < q.error; });
  if (out.size() > count) out.resize(count);
  return out;
}

}  // namespace mphide
