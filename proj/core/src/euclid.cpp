#include "mphide/euclid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "mphide/error.hpp"

namespace mphide {
namespace {

// Uniform draw from [lo, hi] by rejection, so the output does not depend on
// the standard library's distribution implementation.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return lo + x % span;
}

using Int2x2 = std::array<BigInteger, 4>;  // (a b; c d)

Int2x2 mul(const Int2x2& x, const Int2x2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

}  // namespace

CoprimePair::CoprimePair(BigInteger k1, BigInteger k2) : k1_(std::move(k1)), k2_(std::move(k2)) {
  if (k2_.sign() <= 0 || k1_ <= k2_) {
    raise(ErrorKind::BadOrder, "need k1 > k2 > 0, got (" + k1_.to_string() + ", " +
                                   k2_.to_string() + ")");
  }
  if (gcd(k1_, k2_) != BigInteger(1)) {
    raise(ErrorKind::NotCoprime, "gcd(" + k1_.to_string() + ", " + k2_.to_string() +
                                     ") = " + gcd(k1_, k2_).to_string());
  }
}

QuotientSequence::QuotientSequence(std::vector<BigInteger> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) raise(ErrorKind::BadOrder, "quotient sequence is empty");
  for (const auto& q : terms_) {
    if (q.sign() <= 0) raise(ErrorKind::BadOrder, "quotient " + q.to_string() + " is not positive");
  }
  if (terms_.size() == 1 && terms_[0] == BigInteger(1)) {
    raise(ErrorKind::BadOrder, "the sequence (1) gives k1 = k2 = 1");
  }
  if (terms_.size() > 1 && terms_.back() == BigInteger(1)) {
    terms_.pop_back();
    terms_.back() += 1;
  }
}

std::vector<EuclidStep> euclid_steps(const CoprimePair& pair) {
  std::vector<EuclidStep> steps;
  BigInteger a = pair.k1();
  BigInteger b = pair.k2();
  while (!b.is_zero()) {
    EuclidStep s{a, b, a / b, a % b};
    a = b;
    b = s.remainder;
    steps.push_back(std::move(s));
  }
  return steps;
}

QuotientSequence quotient_sequence(const CoprimePair& pair) {
  std::vector<BigInteger> terms;
  for (auto& s : euclid_steps(pair)) terms.push_back(std::move(s.quotient));
  return QuotientSequence(std::move(terms));
}

CoprimePair continued_fraction_eval(const QuotientSequence& qs) {
  const auto& q = qs.terms();
  BigRational value = q.back();
  for (auto it = q.rbegin() + 1; it != q.rend(); ++it) value = BigRational(*it) + value.inverse();
  return {value.numerator(), value.denominator()};
}

CoprimePair quotients_to_pair_matrix(const QuotientSequence& qs) {
  const auto& q = qs.terms();
  Int2x2 product{1, 0, 0, 1};
  for (std::size_t i = 0; i + 1 < q.size(); ++i) product = mul(product, {q[i], 1, 1, 0});
  const BigInteger& last = q.back();
  return {product[0] * last + product[1], product[2] * last + product[3]};
}

std::pair<BigInteger, BigInteger> BezoutTable::identity() const {
  if (rows.empty()) return {0, 1};
  return {rows.back().p, rows.back().t};
}

BezoutTable bezout_table(const CoprimePair& pair) {
  // Rows of `coeffs` hold (p, t) for the two most recent remainders; each
  // division applies the inverse of (q 1; 1 0), which is (0 1; 1 -q).
  BezoutTable table;
  Int2x2 coeffs{1, 0, 0, 1};
  std::size_t l = 0;
  for (const auto& s : euclid_steps(pair)) {
    if (s.remainder.is_zero()) break;
    coeffs = mul({0, 1, 1, -s.quotient}, coeffs);
    table.rows.push_back({++l, coeffs[2], coeffs[3], s.remainder});
  }
  return table;
}

std::pair<BigInteger, BigInteger> closed_form_coefficients(const QuotientSequence& qs,
                                                           std::size_t l) {
  if (l < 1 || l > 4 || qs.size() < l + 1) {
    raise(ErrorKind::IndexOutOfRange, "no closed form for row " + std::to_string(l) +
                                          " of a " + std::to_string(qs.size()) + "-term sequence");
  }
  const BigInteger& q2 = qs[0];
  switch (l) {
    case 1:
      return {1, -q2};
    case 2: {
      const BigInteger& q3 = qs[1];
      return {-q3, q2 * q3 + 1};
    }
    case 3: {
      const BigInteger& q3 = qs[1];
      const BigInteger& q4 = qs[2];
      return {q3 * q4 + 1, -(q2 * q3 * q4 + q2 + q4)};
    }
    default: {
      const BigInteger& q3 = qs[1];
      const BigInteger& q4 = qs[2];
      const BigInteger& q5 = qs[3];
      return {-(q3 * q4 * q5 + q3 + q5),
              q2 * q3 * q4 * q5 + q2 * q3 + q2 * q5 + q4 * q5 + 1};
    }
  }
}

BigInteger recovery_op_count(const QuotientSequence& qs) {
  BigInteger total = 0;
  for (std::size_t i = 0; i + 1 < qs.size(); ++i) total += qs[i] + 1;
  return total;
}

double gauss_kuzmin_probability(std::uint64_t a) {
  if (a == 0) raise(ErrorKind::OutOfRange, "quotient value must be at least 1");
  const double x = static_cast<double>(a);
  return std::log2(1.0 + 1.0 / x) - std::log2(1.0 + 1.0 / (x + 1.0));
}

GeneratedKey keygen_quotients(std::size_t count, std::uint64_t min_quotient, std::uint64_t seed) {
  if (count == 0) raise(ErrorKind::OutOfRange, "need at least one quotient");
  if (min_quotient == 0) raise(ErrorKind::OutOfRange, "minimum quotient must be at least 1");
  std::mt19937_64 rng(seed);
  const std::uint64_t hi = min_quotient + 15;
  std::vector<BigInteger> terms;
  terms.reserve(count);
  for (std::size_t i = 0; i + 1 < count; ++i) {
    terms.emplace_back(static_cast<long long>(draw(rng, min_quotient, hi)));
  }
  terms.emplace_back(static_cast<long long>(draw(rng, std::max<std::uint64_t>(2, min_quotient), hi)));
  QuotientSequence qs(std::move(terms));
  CoprimePair pair = continued_fraction_eval(qs);
  return {std::move(qs), std::move(pair)};
}

CoprimePair dilate_shift(const CoprimePair& pair, const BigInteger& m1, const BigInteger& t1,
                         const BigInteger& m2, const BigInteger& t2) {
  if (m1.sign() <= 0 || m2.sign() <= 0 || t1.sign() < 0 || t2.sign() < 0) {
    raise(ErrorKind::OutOfRange, "dilations must be positive and shifts nonnegative");
  }
  return {m1 * pair.k1() + t1, m2 * pair.k2() + t2};
}

}  // namespace mphide
