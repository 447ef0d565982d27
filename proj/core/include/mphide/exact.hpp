#pragma once

// Exact scalar arithmetic: arbitrary-precision integers, rationals kept in
// lowest terms, and Gaussian rationals (complex numbers with rational parts).
//
// Textual forms:
//   BigInteger        [-]digits                  "42", "-7"
//   BigRational       integer or integer/digits  "3", "-3/2"
//   GaussianRational  re | im"i" | re(+|-)im"i"  "1+4i", "-3/2-5i", "2i"
// The canonical form always prints the imaginary coefficient ("1i", "3-1i");
// the parser also accepts the shorthands "i", "-i" and "2+i".
//
// All values are immutable once built and canonical (no negative zero,
// positive denominators, lowest terms), so equality is structural.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mphide {

class BigInteger {
 public:
  BigInteger() = default;
  BigInteger(long long value);  // NOLINT(google-explicit-constructor)
  explicit BigInteger(mpz_class value) : value_(std::move(value)) {}

  static BigInteger parse(std::string_view text);
  std::string to_string() const { return value_.get_str(10); }

  const mpz_class& mpz() const noexcept { return value_; }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_odd() const noexcept { return mpz_odd_p(value_.get_mpz_t()) != 0; }

  bool fits_int64() const noexcept;
  std::int64_t to_int64() const;    // OutOfRange when it does not fit
  std::uint64_t to_uint64() const;  // OutOfRange when negative or too wide
  double to_double() const { return value_.get_d(); }

  BigInteger& operator+=(const BigInteger& rhs);
  BigInteger& operator-=(const BigInteger& rhs);
  BigInteger& operator*=(const BigInteger& rhs);

  friend BigInteger operator+(BigInteger lhs, const BigInteger& rhs) { return lhs += rhs; }
  friend BigInteger operator-(BigInteger lhs, const BigInteger& rhs) { return lhs -= rhs; }
  friend BigInteger operator*(BigInteger lhs, const BigInteger& rhs) { return lhs *= rhs; }
  friend BigInteger operator-(const BigInteger& x) { return BigInteger(mpz_class(-x.value_)); }

  // Floor division: the remainder takes the sign of the divisor.
  friend BigInteger operator/(const BigInteger& lhs, const BigInteger& rhs);
  friend BigInteger operator%(const BigInteger& lhs, const BigInteger& rhs);

  friend bool operator==(const BigInteger& a, const BigInteger& b) noexcept {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigInteger& a, const BigInteger& b) noexcept {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigInteger& x);

BigInteger abs(const BigInteger& x);
BigInteger gcd(const BigInteger& a, const BigInteger& b);
BigInteger pow(const BigInteger& base, std::uint64_t exponent);
// base^exponent mod modulus for exponent >= 0, modulus >= 1; result in [0, modulus).
BigInteger pow_mod(const BigInteger& base, const BigInteger& exponent, const BigInteger& modulus);
// x in [1, m) with (k * x) mod m == 1. NotInvertible when gcd(k, m) != 1.
BigInteger mod_inverse(const BigInteger& k, const BigInteger& m);

// Member of the class of inverses of k modulo m selected by l: m*l + x(0),
// where x(0) = mod_inverse(k, m). Requires m > 1 and l >= 0.
BigInteger mod_inverse_class(const BigInteger& k, const BigInteger& m, const BigInteger& l);

class BigRational {
 public:
  BigRational() = default;
  BigRational(long long value);         // NOLINT(google-explicit-constructor)
  BigRational(const BigInteger& value);  // NOLINT(google-explicit-constructor)
  BigRational(const BigInteger& numerator, const BigInteger& denominator);
  explicit BigRational(mpq_class value);

  static BigRational parse(std::string_view text);
  std::string to_string() const;

  const mpq_class& mpq() const noexcept { return value_; }
  BigInteger numerator() const { return BigInteger(mpz_class(value_.get_num())); }
  BigInteger denominator() const { return BigInteger(mpz_class(value_.get_den())); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }

  BigRational inverse() const;  // DivisionByZero on zero

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  friend BigRational operator-(const BigRational& x) { return BigRational(mpq_class(-x.value_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) noexcept {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) noexcept {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& x);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational re, BigRational im = {})  // NOLINT(google-explicit-constructor)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {0, 1}; }
  static GaussianRational parse(std::string_view text);
  std::string to_string() const;

  const BigRational& real() const noexcept { return re_; }
  const BigRational& imag() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_gaussian_integer() const noexcept { return re_.is_integer() && im_.is_integer(); }

  GaussianRational conj() const { return {re_, -im_}; }
  // re^2 + im^2; zero iff the value is zero.
  BigRational norm() const;
  // Conjugate over norm. DivisionByZero on zero.
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& x) { return {-x.re_, -x.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) noexcept {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  BigRational re_;
  BigRational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace mphide
