#include <cmath>
#include <ostream>
#include <sstream>

#include "commands.hpp"
#include "mphide/error.hpp"
#include "mphide/matrix.hpp"

namespace mphide::cli {
namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Fixed two- and three-power storage only applies once k exceeds the storage.
std::string fixed_cell(std::uint64_t k, std::uint64_t s) {
  return k > s ? std::to_string(op_count_with_storage(k, s)) : "";
}

std::vector<std::uint64_t> default_ks() {
  std::vector<std::uint64_t> ks;
  for (std::uint64_t k = 2; k <= 12; ++k) ks.push_back(k);
  ks.push_back(113);
  return ks;
}

void storage_table(std::ostream& out, const std::vector<std::uint64_t>& ks) {
  out << "k,ops_storage_2,ops_storage_3\n";
  for (auto k : ks) out << k << "," << fixed_cell(k, 2) << "," << fixed_cell(k, 3) << "\n";
}

void optimal_table(std::ostream& out, const std::vector<std::uint64_t>& ks) {
  out << "k,storage,ops,floor_sqrt_k_minus_1\n";
  for (auto k : ks) {
    const PowerPlan plan = optimal_storage(k);
    out << k << "," << plan.storage << "," << plan.predicted_ops << "," << (k ? isqrt(k - 1) : 0)
        << "\n";
  }
}

void curves_table(std::ostream& out) {
  const std::uint64_t ks[] = {53, 113, 159};
  out << "storage,ops_k53,ops_k113,ops_k159\n";
  for (std::uint64_t s = 1; s <= 40; ++s) {
    out << s;
    for (auto k : ks) out << "," << op_count_with_storage(k, s);
    out << "\n";
  }
}

void growth_table(std::ostream& out, std::uint64_t k_max) {
  out << "k,naive,binary,two_sqrt_bound,optimal\n";
  for (std::uint64_t k = 2; k <= k_max; ++k) {
    out << k << "," << k - 1 << "," << binary_plan(k).predicted_ops << ","
        << isqrt(4 * (k - 1)) - 1 << "," << optimal_storage(k).predicted_ops << "\n";
  }
}

}  // namespace

int cmd_bench(const Context& ctx, const BenchOptions& o) {
  if (o.k_max < 2) raise(ErrorKind::OutOfRange, "--k-max must be at least 2");
  for (auto k : o.k)
    if (k < 1) raise(ErrorKind::OutOfRange, "exponents must be positive");
  const std::vector<std::uint64_t> ks = o.k.empty() ? default_ks() : o.k;
  const bool all = o.table == "all";

  std::ostringstream csv;
  bool first = true;
  auto section = [&](const char* name) {
    if (!all) return;
    if (!first) csv << "\n";
    csv << "# " << name << "\n";
    first = false;
  };
  if (all || o.table == "storage") section("storage"), storage_table(csv, ks);
  if (all || o.table == "optimal") section("optimal"), optimal_table(csv, ks);
  // An exponent list narrows "all" to the per-exponent tables.
  const bool wide = all && o.k.empty();
  if (wide || o.table == "curves") section("curves"), curves_table(csv);
  if (wide || o.table == "growth") section("growth"), growth_table(csv, o.k_max);

  if (o.out.empty()) {
    ctx.out << csv.str();
  } else {
    ctx.write(o.out, csv.str());
  }
  return kOk;
}

}  // namespace mphide::cli
