#include "mphide/attack.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "mphide/disguise.hpp"
#include "mphide/error.hpp"

namespace mphide {
namespace {

// A matrix the candidates are compared against, with its determinant data
// precomputed for the cheap filters.
struct Target {
  const ExactMatrix* m;
  GaussianRational det;
  double log_abs_det;
};

Target make_target(const ExactMatrix& m) {
  GaussianRational det = determinant(m);
  const double log_abs = principal_log(det).real();
  return {&m, std::move(det), log_abs};
}

// Smallest k in [lo, hi] with x^k = target, filtering on log|det| first,
// then on the exact determinant, and only then forming the matrix power.
std::optional<std::uint64_t> matching_exponent(const ExactMatrix& x, const GaussianRational& det_x,
                                               double log_abs_x, const Target& target,
                                               const AttackBudget& budget, OpCount& ops) {
  const double tolerance = 1e-9 * std::max(1.0, std::fabs(target.log_abs_det));
  for (std::uint64_t k = budget.exp_lo; k <= budget.exp_hi; ++k) {
    if (std::fabs(static_cast<double>(k) * log_abs_x - target.log_abs_det) > tolerance) continue;
    GaussianRational det_power = 1;
    for (std::uint64_t i = 0; i < k; ++i) det_power *= det_x;
    if (det_power != target.det) continue;
    PowerResult p = power(x, static_cast<std::int64_t>(k));
    ops += p.ops;
    if (p.value == *target.m) return k;
  }
  return std::nullopt;
}

struct Node {
  ExactMatrix prev;  // X at the level above the candidate's parent
  ExactMatrix cur;   // the candidate itself
  std::vector<std::uint64_t> path;
};

struct Record {
  OpCount ops;
};

struct BranchResult {
  std::vector<Record> records;  // one per candidate, in enumeration order
  std::vector<Node> children;   // candidates kept as parents for the next level
  std::optional<std::size_t> hit_index;
  std::optional<AttackHit> hit;
};

struct Search {
  const AttackBudget& budget;
  const Target& target_c;
  const Target& target_d;
  Orientation orientation;

  // Expands every parent in `parents` with m = 1..L (or only `only_m`).
  BranchResult expand(const std::vector<Node>& parents, bool keep_children, std::uint64_t cap,
                      std::uint64_t only_m, const std::atomic<std::size_t>* best_branch,
                      std::size_t branch) const {
    BranchResult out;
    for (const Node& parent : parents) {
      if (best_branch && branch > best_branch->load()) break;
      Record pending;
      const ExactMatrix inv = inverse(parent.cur, pending.ops);
      const std::uint64_t m_lo = only_m ? only_m : 1;
      const std::uint64_t m_hi = only_m ? only_m : budget.max_quotient;
      for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
        if (out.records.size() >= cap) return out;
        Record rec = pending;
        pending = {};
        // prev * inv^m, formed literally: m multiplications.
        ExactMatrix x = inv;
        for (std::uint64_t i = 1; i < m; ++i) x = multiply(x, inv, rec.ops);
        x = multiply(parent.prev, x, rec.ops);

        std::vector<std::uint64_t> path = parent.path;
        path.push_back(m);
        const GaussianRational det_x = determinant(x);
        const double log_abs_x = principal_log(det_x).real();
        auto kc = matching_exponent(x, det_x, log_abs_x, target_c, budget, rec.ops);
        std::optional<std::uint64_t> kd;
        if (kc) kd = matching_exponent(x, det_x, log_abs_x, target_d, budget, rec.ops);
        out.records.push_back(rec);
        if (kc && kd) {
          out.hit_index = out.records.size() - 1;
          out.hit = AttackHit{std::move(x), std::move(path), orientation, *kc, *kd};
          return out;
        }
        if (keep_children) out.children.push_back({parent.cur, std::move(x), std::move(path)});
      }
    }
    return out;
  }
};

unsigned worker_count(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs one orientation; returns the number of candidates tested and adds to
// the report's totals.
std::uint64_t run_orientation(const ExactMatrix& first, const ExactMatrix& second,
                              Orientation orientation, const AttackBudget& budget,
                              const Target& target_c, const Target& target_d,
                              std::uint64_t remaining, AttackReport& report) {
  const Search search{budget, target_c, target_d, orientation};
  const std::uint64_t levels = budget.max_depth - 1;
  std::uint64_t tested = 0;

  // Level 1: one branch per m1, all hanging off the root (first, second).
  std::vector<std::vector<Node>> branches(budget.max_quotient);
  std::vector<std::uint64_t> branch_m(budget.max_quotient);
  for (std::uint64_t m = 1; m <= budget.max_quotient; ++m) {
    branches[m - 1].push_back({first, second, {}});
    branch_m[m - 1] = m;
  }

  for (std::uint64_t level = 1; level <= levels && remaining > tested; ++level) {
    report.depth_reached = std::max(report.depth_reached, level + 1);
    const bool keep = level < levels;
    const std::uint64_t cap = remaining - tested;
    std::vector<BranchResult> results(branches.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

    auto work = [&] {
      for (std::size_t b = next++; b < branches.size(); b = next++) {
        if (b > best.load()) continue;
        results[b] = search.expand(branches[b], keep, cap, level == 1 ? branch_m[b] : 0, &best, b);
        if (results[b].hit) {
          std::size_t cur = best.load();
          while (b < cur && !best.compare_exchange_weak(cur, b)) {
          }
        }
      }
    };
    const unsigned n_workers =
        std::min<std::size_t>(worker_count(budget.threads), std::max<std::size_t>(1, branches.size()));
    if (n_workers <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }

    // Merge in branch order; stop at the first hit or at the candidate cap.
    std::vector<std::vector<Node>> next_branches(branches.size());
    for (std::size_t b = 0; b < results.size(); ++b) {
      BranchResult& r = results[b];
      const std::size_t take_hit = r.hit_index ? *r.hit_index + 1 : r.records.size();
      const std::size_t take = std::min<std::uint64_t>(take_hit, remaining - tested);
      for (std::size_t i = 0; i < take; ++i) {
        report.multiplications += r.records[i].ops.multiplications;
        report.inversions += r.records[i].ops.inversions;
      }
      tested += take;
      if (r.hit_index && take == take_hit) {
        report.found = std::move(r.hit);
        return tested;
      }
      if (tested >= remaining) return tested;
      next_branches[b] = std::move(r.children);
    }
    branches = std::move(next_branches);
  }
  return tested;
}

}  // namespace

void AttackBudget::validate() const {
  if (max_quotient < 1) raise(ErrorKind::OutOfRange, "L must be at least 1");
  if (max_depth < 3) raise(ErrorKind::OutOfRange, "r_max must be at least 3");
  if (exp_lo < 1 || exp_lo > exp_hi) raise(ErrorKind::OutOfRange, "need 1 <= exp_lo <= exp_hi");
}

BigInteger enumerate_cost(const BigInteger& max_quotient, std::uint64_t depth) {
  if (depth < 2) raise(ErrorKind::OutOfRange, "depth must be at least 2");
  if (max_quotient < BigInteger(1)) raise(ErrorKind::OutOfRange, "L must be at least 1");
  if (max_quotient == BigInteger(1)) return BigInteger(static_cast<long long>(depth - 1));
  const BigInteger& l = max_quotient;
  return l * (pow(l, depth - 1) - 1) / (l - 1);
}

double expected_trials(const BigInteger& n) {
  if (n < BigInteger(1)) raise(ErrorKind::OutOfRange, "N must be at least 1");
  if (n == BigInteger(1)) return 1.0;
  const double big_n = n.to_double();
  const double q_pow_n = std::exp(big_n * std::log1p(-1.0 / big_n));
  return big_n * (1.0 - 2.0 * q_pow_n) / (1.0 - q_pow_n);
}

AttackReport brute_force_attack(const HiddenPair& hp, const AttackBudget& budget) {
  budget.validate();
  if (hp.c.dim() != hp.d.dim() || hp.c.dim() == 0) {
    raise(ErrorKind::DimensionMismatch, "hidden pair matrices differ in size");
  }
  const auto start = std::chrono::steady_clock::now();
  AttackReport report;
  const Target target_c = make_target(hp.c);
  const Target target_d = make_target(hp.d);
  if (target_c.det.is_zero() || target_d.det.is_zero()) {
    raise(ErrorKind::SingularMatrix, "hidden pair has a singular matrix");
  }

  report.primary_candidates = run_orientation(hp.c, hp.d, Orientation::Primary, budget, target_c,
                                              target_d, budget.max_candidates, report);
  report.candidates_tested = report.primary_candidates;
  if (!report.found && budget.try_swapped && report.candidates_tested < budget.max_candidates) {
    OpCount setup;
    const ExactMatrix d_inv = inverse(hp.d, setup);
    const ExactMatrix c_inv = inverse(hp.c, setup);
    report.inversions += setup.inversions;
    report.swapped_candidates =
        run_orientation(d_inv, c_inv, Orientation::Swapped, budget, target_c, target_d,
                        budget.max_candidates - report.candidates_tested, report);
    report.candidates_tested += report.swapped_candidates;
  }
  report.budget_exhausted = !report.found.has_value();

  const BigInteger per_level = BigInteger(static_cast<long long>(budget.max_quotient)) *
                               BigInteger(static_cast<long long>(budget.max_quotient + 1)) / 2;
  report.tabulated_multiplications = 0;
  for (std::uint64_t j = 1; j + 1 <= report.depth_reached; ++j) {
    report.tabulated_multiplications += pow(per_level, j);
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace mphide
