#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mphide/exact.hpp"

namespace mphide {

// Square matrix of Gaussian rationals, row-major. Equality is exact.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t dim);  // zero matrix

  static ExactMatrix identity(std::size_t dim);
  // DimensionMismatch unless rows form a non-empty square array.
  static ExactMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows);
  static ExactMatrix parse_rows(const std::vector<std::vector<std::string>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  const GaussianRational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  GaussianRational& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }

  std::vector<std::vector<GaussianRational>> rows() const;
  std::vector<std::vector<std::string>> row_strings() const;
  bool is_gaussian_integer() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<GaussianRational> entries_;
};

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

// Per-call operation tally. Returned by value; never shared between calls.
struct OpCount {
  std::uint64_t multiplications = 0;
  std::uint64_t inversions = 0;

  std::uint64_t total() const noexcept { return multiplications + inversions; }
  OpCount& operator+=(const OpCount& rhs) noexcept {
    multiplications += rhs.multiplications;
    inversions += rhs.inversions;
    return *this;
  }
  friend OpCount operator+(OpCount a, const OpCount& b) noexcept { return a += b; }
  friend bool operator==(const OpCount&, const OpCount&) = default;
};

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);  // DimensionMismatch
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b, OpCount& ops);

// Gauss-Jordan elimination over the Gaussian rationals, first non-zero pivot.
ExactMatrix inverse(const ExactMatrix& a);  // SingularMatrix
ExactMatrix inverse(const ExactMatrix& a, OpCount& ops);
GaussianRational determinant(const ExactMatrix& a);
GaussianRational trace(const ExactMatrix& a);

enum class PowerStrategy {
  // Precompute S = {M, M^2, ..., M^s} with s - 1 products, then start from the
  // stored M^(b+1) and multiply by M^s floor((k-1)/s) times, k - 1 = a*s + b.
  // Storage s = 1 is plain repeated multiplication.
  Storage,
  // Left-to-right square-and-multiply. Only used for comparison runs.
  Binary,
};

struct PowerPlan {
  std::uint64_t exponent = 0;
  std::uint64_t storage = 1;
  std::uint64_t predicted_ops = 0;
  PowerStrategy strategy = PowerStrategy::Storage;

  friend bool operator==(const PowerPlan&, const PowerPlan&) = default;
};

// (s - 1) + floor((k - 1) / s); k - 1 when k <= s. Requires k >= 1, s >= 1.
std::uint64_t op_count_with_storage(std::uint64_t k, std::uint64_t storage);

PowerPlan storage_plan(std::uint64_t k, std::uint64_t storage);
PowerPlan naive_plan(std::uint64_t k);
PowerPlan binary_plan(std::uint64_t k);

// Storage size minimising op_count_with_storage. Among the minimisers the one
// closest to floor(sqrt(k - 1)) is chosen, ties toward the smaller size; this
// is floor(sqrt(k - 1)) itself whenever that size is optimal. k = 1 and k = 0
// yield the trivial plan.
PowerPlan optimal_storage(std::uint64_t k);

struct PowerResult {
  ExactMatrix value;
  OpCount ops;
};

// a^k exactly. k < 0 inverts a once, then raises the inverse to |k|. Without a
// plan the optimal storage plan for |k| is used. The multiplication count
// always equals plan.predicted_ops.
PowerResult power(const ExactMatrix& a, std::int64_t k);
PowerResult power(const ExactMatrix& a, std::int64_t k, const PowerPlan& plan);
PowerResult power(const ExactMatrix& a, const BigInteger& k);

// Stored powers {M, ..., M^s} that can serve several exponents. Building costs
// s - 1 multiplications; each power(k) then costs floor((k-1)/s) more.
class PowerTable {
 public:
  PowerTable(const ExactMatrix& base, std::uint64_t storage);

  std::uint64_t storage() const noexcept { return stored_.size(); }
  const OpCount& build_ops() const noexcept { return build_ops_; }

  ExactMatrix power(std::uint64_t k, OpCount& ops) const;

 private:
  std::vector<ExactMatrix> stored_;
  OpCount build_ops_;
};

}  // namespace mphide
