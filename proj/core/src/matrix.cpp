#include "mphide/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <utility>

#include "mphide/error.hpp"

namespace mphide {
namespace {

void require_same_dim(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) {
    raise(ErrorKind::DimensionMismatch,
          std::to_string(a.dim()) + "x" + std::to_string(a.dim()) + " vs " +
              std::to_string(b.dim()) + "x" + std::to_string(b.dim()));
  }
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Row reduction shared by inverse and determinant. When `augment` is non-null
// it receives the same row operations (Gauss-Jordan); otherwise only the
// forward pass runs and the product of pivots is returned.
GaussianRational eliminate(ExactMatrix work, ExactMatrix* augment) {
  const std::size_t n = work.dim();
  GaussianRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(pivot, j), work(col, j));
      if (augment) {
        for (std::size_t j = 0; j < n; ++j) std::swap((*augment)(pivot, j), (*augment)(col, j));
      }
      det = -det;
    }
    const GaussianRational p = work(col, col);
    det *= p;
    const GaussianRational p_inv = p.inverse();
    if (augment) {
      for (std::size_t j = 0; j < n; ++j) {
        work(col, j) *= p_inv;
        (*augment)(col, j) *= p_inv;
      }
    }
    const std::size_t first_row = augment ? 0 : col + 1;
    for (std::size_t row = first_row; row < n; ++row) {
      if (row == col || work(row, col).is_zero()) continue;
      const GaussianRational factor = augment ? work(row, col) : work(row, col) * p_inv;
      for (std::size_t j = col; j < n; ++j) work(row, j) -= factor * work(col, j);
      if (augment) {
        for (std::size_t j = 0; j < n; ++j) (*augment)(row, j) -= factor * (*augment)(col, j);
      }
    }
  }
  return det;
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) raise(ErrorKind::DimensionMismatch, "matrix needs at least one row");
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      raise(ErrorKind::DimensionMismatch, "row " + std::to_string(i) + " has " +
                                              std::to_string(rows[i].size()) + " entries, expected " +
                                              std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::parse_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<GaussianRational>> values;
  values.reserve(rows.size());
  for (const auto& row : rows) {
    auto& out = values.emplace_back();
    out.reserve(row.size());
    for (const auto& cell : row) out.push_back(GaussianRational::parse(cell));
  }
  return from_rows(values);
}

std::vector<std::vector<GaussianRational>> ExactMatrix::rows() const {
  std::vector<std::vector<GaussianRational>> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * dim_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim_));
  }
  return out;
}

std::vector<std::vector<std::string>> ExactMatrix::row_strings() const {
  std::vector<std::vector<std::string>> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out[i].push_back((*this)(i, j).to_string());
  }
  return out;
}

bool ExactMatrix::is_gaussian_integer() const {
  for (const auto& e : entries_) {
    if (!e.is_gaussian_integer()) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? ", " : "") << m(i, j);
  }
  return os << ']';
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  ExactMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return multiply(a, b); }

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b, OpCount& ops) {
  ExactMatrix out = multiply(a, b);
  ++ops.multiplications;
  return out;
}

ExactMatrix inverse(const ExactMatrix& a) {
  if (a.dim() == 0) raise(ErrorKind::SingularMatrix, "empty matrix");
  ExactMatrix result = ExactMatrix::identity(a.dim());
  if (eliminate(a, &result).is_zero()) {
    raise(ErrorKind::SingularMatrix, "matrix has zero determinant");
  }
  return result;
}

ExactMatrix inverse(const ExactMatrix& a, OpCount& ops) {
  ExactMatrix out = inverse(a);
  ++ops.inversions;
  return out;
}

GaussianRational determinant(const ExactMatrix& a) {
  if (a.dim() == 0) return 1;
  return eliminate(a, nullptr);
}

GaussianRational trace(const ExactMatrix& a) {
  GaussianRational t;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

// ---------------------------------------------------------------------------
// Power plans

std::uint64_t op_count_with_storage(std::uint64_t k, std::uint64_t storage) {
  if (k == 0 || storage == 0) raise(ErrorKind::OutOfRange, "exponent and storage must be positive");
  if (k <= storage) return k - 1;
  return (storage - 1) + (k - 1) / storage;
}

PowerPlan storage_plan(std::uint64_t k, std::uint64_t storage) {
  if (storage == 0) raise(ErrorKind::OutOfRange, "storage size must be positive");
  return {k, storage, k == 0 ? 0 : op_count_with_storage(k, storage), PowerStrategy::Storage};
}

PowerPlan naive_plan(std::uint64_t k) { return storage_plan(k, 1); }

PowerPlan binary_plan(std::uint64_t k) {
  std::uint64_t ops = 0;
  if (k > 1) ops = (std::bit_width(k) - 1) + (std::popcount(k) - 1);
  return {k, 1, ops, PowerStrategy::Binary};
}

PowerPlan optimal_storage(std::uint64_t k) {
  if (k <= 2) return storage_plan(k, 1);
  const std::uint64_t guess = isqrt(k - 1);
  std::uint64_t best = guess;
  std::uint64_t best_ops = op_count_with_storage(k, guess);
  // Every minimiser of (s - 1) + floor((k - 1)/s) lies in [sqrt(k-1)/2, 2 sqrt(k-1)].
  const std::uint64_t limit = std::min<std::uint64_t>(k - 1, 2 * guess + 2);
  for (std::uint64_t s = std::max<std::uint64_t>(1, guess / 2); s <= limit; ++s) {
    const std::uint64_t ops = op_count_with_storage(k, s);
    const auto distance = [guess](std::uint64_t x) { return x > guess ? x - guess : guess - x; };
    if (ops < best_ops ||
        (ops == best_ops && (distance(s) < distance(best) ||
                             (distance(s) == distance(best) && s < best)))) {
      best = s;
      best_ops = ops;
    }
  }
  return {k, best, best_ops, PowerStrategy::Storage};
}

// ---------------------------------------------------------------------------
// PowerTable

PowerTable::PowerTable(const ExactMatrix& base, std::uint64_t storage) {
  if (storage == 0) raise(ErrorKind::OutOfRange, "storage size must be positive");
  stored_.reserve(storage);
  stored_.push_back(base);
  while (stored_.size() < storage) {
    stored_.push_back(multiply(stored_.back(), base, build_ops_));
  }
}

ExactMatrix PowerTable::power(std::uint64_t k, OpCount& ops) const {
  if (k == 0) return ExactMatrix::identity(stored_.front().dim());
  const std::uint64_t s = stored_.size();
  if (k <= s) return stored_[k - 1];
  const std::uint64_t rounds = (k - 1) / s;
  const std::uint64_t rest = (k - 1) % s;
  ExactMatrix result = stored_[rest];
  for (std::uint64_t i = 0; i < rounds; ++i) result = multiply(result, stored_.back(), ops);
  return result;
}

namespace {

ExactMatrix binary_power(const ExactMatrix& base, std::uint64_t k, OpCount& ops) {
  if (k == 0) return ExactMatrix::identity(base.dim());
  ExactMatrix result = base;
  for (int bit = std::bit_width(k) - 2; bit >= 0; --bit) {
    result = multiply(result, result, ops);
    if ((k >> bit) & 1U) result = multiply(result, base, ops);
  }
  return result;
}

}  // namespace

PowerResult power(const ExactMatrix& a, std::int64_t k, const PowerPlan& plan) {
  const std::uint64_t magnitude =
      k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  if (plan.exponent != magnitude) {
    raise(ErrorKind::OutOfRange, "plan is for exponent " + std::to_string(plan.exponent) +
                                     ", requested " + std::to_string(magnitude));
  }
  PowerResult out;
  if (magnitude == 0) {
    out.value = ExactMatrix::identity(a.dim());
    return out;
  }
  const ExactMatrix base = k < 0 ? inverse(a, out.ops) : a;
  if (plan.strategy == PowerStrategy::Binary) {
    out.value = binary_power(base, magnitude, out.ops);
  } else {
    const PowerTable table(base, std::min(plan.storage, magnitude));
    out.ops += table.build_ops();
    out.value = table.power(magnitude, out.ops);
  }
  return out;
}

PowerResult power(const ExactMatrix& a, std::int64_t k) {
  const std::uint64_t magnitude =
      k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  return power(a, k, optimal_storage(magnitude));
}

PowerResult power(const ExactMatrix& a, const BigInteger& k) { return power(a, k.to_int64()); }

}  // namespace mphide
