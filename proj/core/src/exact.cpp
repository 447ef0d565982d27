#include "mphide/exact.hpp"

#include <limits>
#include <ostream>

#include "mphide/error.hpp"

namespace mphide {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class mpz_from_int64(long long value) {
  if (value >= std::numeric_limits<long>::min() && value <= std::numeric_limits<long>::max()) {
    return mpz_class(static_cast<long>(value));
  }
  return mpz_class(std::to_string(value), 10);
}

}  // namespace

// ---------------------------------------------------------------------------
// BigInteger

BigInteger::BigInteger(long long value) : value_(mpz_from_int64(value)) {}

BigInteger BigInteger::parse(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) {
    raise(ErrorKind::Parse, "invalid integer '" + std::string(text) + "'");
  }
  return BigInteger(mpz_class(std::string(text), 10));
}

bool BigInteger::fits_int64() const noexcept {
  static const mpz_class lo = mpz_from_int64(std::numeric_limits<std::int64_t>::min());
  static const mpz_class hi = mpz_from_int64(std::numeric_limits<std::int64_t>::max());
  return value_ >= lo && value_ <= hi;
}

std::int64_t BigInteger::to_int64() const {
  if (!fits_int64()) raise(ErrorKind::OutOfRange, to_string() + " does not fit in 64 bits");
  return std::stoll(to_string());
}

std::uint64_t BigInteger::to_uint64() const {
  if (sign() < 0 || mpz_sizeinbase(value_.get_mpz_t(), 2) > 64) {
    raise(ErrorKind::OutOfRange, to_string() + " is not an unsigned 64-bit value");
  }
  return std::stoull(to_string());
}

BigInteger& BigInteger::operator+=(const BigInteger& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigInteger& BigInteger::operator-=(const BigInteger& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigInteger& BigInteger::operator*=(const BigInteger& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigInteger operator/(const BigInteger& lhs, const BigInteger& rhs) {
  if (rhs.is_zero()) raise(ErrorKind::DivisionByZero, "integer division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), lhs.value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return BigInteger(std::move(q));
}

BigInteger operator%(const BigInteger& lhs, const BigInteger& rhs) {
  if (rhs.is_zero()) raise(ErrorKind::DivisionByZero, "integer modulo by zero");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), lhs.value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return BigInteger(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const BigInteger& x) { return os << x.to_string(); }

BigInteger abs(const BigInteger& x) { return BigInteger(mpz_class(::abs(x.mpz()))); }

BigInteger gcd(const BigInteger& a, const BigInteger& b) {
  return BigInteger(mpz_class(::gcd(a.mpz(), b.mpz())));
}

BigInteger pow(const BigInteger& base, std::uint64_t exponent) {
  mpz_class result = 1;
  mpz_class b = base.mpz();
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return BigInteger(std::move(result));
}

BigInteger pow_mod(const BigInteger& base, const BigInteger& exponent, const BigInteger& modulus) {
  if (modulus.sign() <= 0) raise(ErrorKind::OutOfRange, "modulus must be positive");
  if (exponent.sign() < 0) raise(ErrorKind::OutOfRange, "negative exponent in pow_mod");
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent.mpz().get_mpz_t(),
           modulus.mpz().get_mpz_t());
  return BigInteger(std::move(r));
}

BigInteger mod_inverse(const BigInteger& k, const BigInteger& m) {
  if (m.sign() <= 0) raise(ErrorKind::OutOfRange, "modulus must be positive");
  mpz_class x;
  if (mpz_invert(x.get_mpz_t(), k.mpz().get_mpz_t(), m.mpz().get_mpz_t()) == 0) {
    raise(ErrorKind::NotInvertible,
          k.to_string() + " has no inverse modulo " + m.to_string());
  }
  return BigInteger(std::move(x));
}

BigInteger mod_inverse_class(const BigInteger& k, const BigInteger& m, const BigInteger& l) {
  if (m <= BigInteger(1)) raise(ErrorKind::OutOfRange, "modulus must exceed 1");
  if (l.sign() < 0) raise(ErrorKind::OutOfRange, "class index l must be nonnegative");
  return m * l + mod_inverse(k, m);
}

// ---------------------------------------------------------------------------
// BigRational

BigRational::BigRational(long long value) : value_(mpz_from_int64(value)) {}

BigRational::BigRational(const BigInteger& value) : value_(value.mpz()) {}

BigRational::BigRational(const BigInteger& numerator, const BigInteger& denominator) {
  if (denominator.is_zero()) raise(ErrorKind::DivisionByZero, "zero denominator");
  value_ = mpq_class(numerator.mpz(), denominator.mpz());
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) raise(ErrorKind::DivisionByZero, "zero denominator");
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(BigInteger::parse(text));
  auto den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    raise(ErrorKind::Parse, "invalid rational '" + std::string(text) + "'");
  }
  return BigRational(BigInteger::parse(text.substr(0, slash)), BigInteger::parse(den_text));
}

std::string BigRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

BigRational BigRational::inverse() const {
  if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return BigRational(std::move(r));
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) raise(ErrorKind::DivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) raise(ErrorKind::Parse, "empty complex literal");
  if (text.back() != 'i') return {BigRational::parse(text), 0};

  std::string_view body = text.substr(0, text.size() - 1);
  BigRational re;
  std::string_view im_text = body;
  auto split = body.find_last_of("+-");
  if (split != std::string_view::npos && split > 0) {
    re = BigRational::parse(body.substr(0, split));
    im_text = body.substr(split);
  }

  bool negative = false;
  if (!im_text.empty() && (im_text.front() == '+' || im_text.front() == '-')) {
    negative = im_text.front() == '-';
    im_text.remove_prefix(1);
  }
  if (!im_text.empty() && (im_text.front() == '+' || im_text.front() == '-')) {
    raise(ErrorKind::Parse, "invalid complex literal '" + std::string(text) + "'");
  }
  BigRational im = im_text.empty() ? BigRational(1) : BigRational::parse(im_text);
  return {std::move(re), negative ? -im : im};
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return im_.to_string() + "i";
  return re_.to_string() + (im_.sign() > 0 ? "+" : "") + im_.to_string() + "i";
}

BigRational GaussianRational::norm() const { return re_ * re_ + im_ * im_; }

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of complex zero");
  BigRational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  // Three-multiplication product; pays off once the parts grow large.
  BigRational k1 = rhs.re_ * (re_ + im_);
  BigRational k2 = re_ * (rhs.im_ - rhs.re_);
  BigRational k3 = im_ * (rhs.re_ + rhs.im_);
  re_ = k1 - k3;
  im_ = std::move(k1) + k2;
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  return *this *= rhs.inverse();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  return os << x.to_string();
}

}  // namespace mphide
