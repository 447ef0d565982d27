// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "mphide/mphide.hpp"

using namespace mphide;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failed sub-checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (got == want) return;
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    failures_.push_back(os.str());
  }
  void near(double got, double want, double tol, const std::string& what) {
    if (std::fabs(got - want) <= tol) return;
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want << " +- " << tol;
    failures_.push_back(os.str());
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool passed() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string format_complex(std::complex<double> z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f%+.5fi", z.real(), z.imag());
  return buf;
}

std::vector<BigInteger> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

std::string join(const std::vector<BigInteger>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].to_string();
  return s;
}

void seed_hidden_and_recovered(Check& c) {
  const auto start = Clock::now();
  const HideResult h = hide(fixtures::seed(), CoprimePair(17, 11));
  c.expect(h.hidden.c == fixtures::c17(), "seed^17 differs from the published C");
  c.expect(h.hidden.d == fixtures::d11(), "seed^11 differs from the published D");
  const BezoutRecovery b = recover_bezout(h.hidden, CoprimePair(17, 11));
  c.equal(b.p, BigInteger(2), "exponent on C");
  c.equal(b.t, BigInteger(-3), "exponent on D");
  c.expect(b.result == fixtures::seed(), "C^2 D^-3 is not the seed");
  const ExactMatrix direct = power(h.hidden.c, 2).value * power(h.hidden.d, -3).value;
  c.expect(direct == fixtures::seed(), "direct product C^2 D^-3 is not the seed");
  const double t = seconds_since(start);
  c.expect(t < 1.0, "took " + std::to_string(t) + " s");
  c.note("C and D match in all 8 entries; recovered in " + std::to_string(t) + " s");
}

void wrong_key_detected(Check& c) {
  const HiddenPair hp{fixtures::c17(), fixtures::d11()};
  try {
    recover_iterative(hp, CoprimePair(17, 12));
    c.expect(false, "wrong key (17,12) was accepted");
  } catch (const VerificationError& e) {
    c.expect(e.kind() == ErrorKind::VerificationFailed, "wrong error kind");
    c.expect(e.candidate() == fixtures::wrong_key_result(), "rejected matrix differs");
    c.note("VerificationFailed raised; rejected matrix matches exactly");
  }
}

void check_bezout_rows(Check& c, const CoprimePair& pair,
                       const std::vector<std::array<long long, 3>>& rows) {
  const BezoutTable table = bezout_table(pair);
  c.equal(table.rows.size(), rows.size(), "Bezout row count");
  for (std::size_t i = 0; i < std::min(rows.size(), table.rows.size()); ++i) {
    const auto& r = table.rows[i];
    const std::string at = "row " + std::to_string(i + 1);
    c.equal(r.p, BigInteger(rows[i][0]), at + " p");
    c.equal(r.t, BigInteger(rows[i][1]), at + " t");
    c.equal(r.remainder, BigInteger(rows[i][2]), at + " remainder");
  }
}

void long_quotient_example(Check& c) {
  const CoprimePair pair(1019, 239);
  const QuotientSequence qs = quotient_sequence(pair);
  c.equal(join(qs.terms()), join(ints({4, 3, 1, 3, 1, 5, 2})), "quotients");
  c.equal(recovery_op_count(qs), BigInteger(23), "recovery operations");
  check_bezout_rows(c, pair,
                    {{1, -4, 63}, {-3, 13, 50}, {4, -17, 13}, {-15, 64, 11}, {19, -81, 2},
                     {-110, 469, 1}});
  c.expect(continued_fraction_eval(qs) == pair, "continued fraction does not evaluate to 1019/239");
  c.expect(continued_fraction_eval(QuotientSequence(qs.terms())) == pair, "re-evaluation differs");
}

void large_quotient_example(Check& c) {
  const CoprimePair pair(1001, 213);
  const QuotientSequence qs = quotient_sequence(pair);
  c.equal(join(qs.terms()), join(ints({4, 1, 2, 3, 21})), "quotients");
  c.equal(recovery_op_count(qs), BigInteger(14), "recovery operations");
  check_bezout_rows(c, pair, {{1, -4, 149}, {-1, 5, 64}, {3, -14, 21}, {-10, 47, 1}});
  const HiddenPair hp = hide(fixtures::seed(), pair).hidden;
  const BezoutRecovery b = recover_bezout(hp, pair);
  c.equal(b.p, BigInteger(-10), "exponent on C");
  c.equal(b.t, BigInteger(47), "exponent on D");
  c.expect(b.result == fixtures::seed(), "(C^-1)^10 D^47 is not the seed");
}

void cost_model(Check& c) {
  const std::vector<std::uint64_t> ks = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 113};
  const std::vector<std::uint64_t> two = {2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 57};
  for (std::size_t i = 0; i < ks.size(); ++i)
    c.equal(op_count_with_storage(ks[i], 2), two[i], "storage 2, k=" + std::to_string(ks[i]));
  const std::vector<std::uint64_t> three = {3, 3, 3, 4, 4, 4, 5, 5, 5, 39};
  for (std::size_t i = 1; i < ks.size(); ++i)
    c.equal(op_count_with_storage(ks[i], 3), three[i - 1], "storage 3, k=" + std::to_string(ks[i]));
  c.equal(optimal_storage(53).predicted_ops, 13u, "optimal ops k=53");
  c.equal(optimal_storage(113).predicted_ops, 20u, "optimal ops k=113");
  c.equal(optimal_storage(159).predicted_ops, 24u, "optimal ops k=159");
  // floor(2 sqrt(k-1) - 1) at k = 12 is 5; the published cell says 6.
  c.equal(optimal_storage(12).predicted_ops, 5u, "optimal ops k=12");
  c.equal(static_cast<std::uint64_t>(std::floor(2 * std::sqrt(11.0) - 1)), 5u, "bound at k=12");
  c.note("k=12 asserted as 5; published 6 kept as a known discrepancy in the fixture file");
}

void gauss_kuzmin(Check& c) {
  const double want[] = {0.41505, 0.16993, 0.09311, 0.05889};
  for (std::uint64_t a = 1; a <= 4; ++a)
    c.near(gauss_kuzmin_probability(a), want[a - 1], 1e-5, "p(" + std::to_string(a) + ")");
}

void disguise(Check& c) {
  const HiddenPair hp{fixtures::c19(), fixtures::d13()};
  c.expect(hide(fixtures::seed(), CoprimePair(19, 13)).hidden == hp, "seed^19, seed^13 differ");
  const std::complex<double> plain = det_ratio_leak(hp);
  c.near(plain.real(), 1.4502, 1e-3, "plain leak real part");
  c.near(plain.imag(), -0.1622, 1e-3, "plain leak imaginary part");

  const DisguiseKey key{19, 13, 11, 2, 1, 2};
  key.validate();
  const HiddenPair blurred = blur(hp, key);
  const std::complex<double> leak = det_ratio_leak(blurred);
  c.near(leak.real(), 1.0456, 1e-3, "blurred leak real part");
  c.near(leak.imag(), -0.05696, 1e-3, "blurred leak imaginary part");

  c.expect(unblur(blurred, key) == hp, "unblur(blur(x)) != x");
  c.expect(recover_bezout(unblur(blurred, key), key.pair()).result == fixtures::seed(),
           "blurred pipeline does not recover the seed");
  c.note("plain leak " + format_complex(plain) + ", blurred leak " + format_complex(leak) +
         " with z = " + derive_z(key).to_string());
}

void key_exchange(Check& c) {
  const DHParams params{457, 7832};
  params.validate();
  c.equal(dh_public(params, 2), BigInteger(313), "Bob's public value");
  c.equal(dh_public(params, 11), BigInteger(438), "first public value from Alice");
  c.equal(dh_public(params, 7), BigInteger(203), "second public value from Alice");
  c.equal(dh_shared(params, 313, 11), BigInteger(361), "first key at Alice");
  c.equal(dh_shared(params, 438, 2), BigInteger(361), "first key at Bob");
  c.equal(dh_shared(params, 313, 7), BigInteger(79), "second key at Alice");
  c.equal(dh_shared(params, 203, 2), BigInteger(79), "second key at Bob");

  const RSAKeySet k = rsa_keygen(37, 53, 163);
  c.equal(k.n, BigInteger(1961), "n");
  c.equal(k.phi, BigInteger(1872), "phi");
  c.equal(k.e, BigInteger(379), "e");
  const BigInteger y1 = rsa_encrypt(361, k.e, k.n);
  const BigInteger y2 = rsa_encrypt(79, k.e, k.n);
  c.equal(y1, BigInteger(324), "first cipher text");
  c.equal(y2, BigInteger(1253), "second cipher text");
  const std::vector<BigInteger> plain = {rsa_decrypt(y1, k.d, k.n), rsa_decrypt(y2, k.d, k.n)};
  c.equal(pack_keys(plain, 3), BigInteger(361079), "packed decryptions");

  const auto start = Clock::now();
  bool all = true;
  for (long long m = 0; m < 1961; ++m)
    all = all && rsa_decrypt(rsa_encrypt(m, k.e, k.n), k.d, k.n) == BigInteger(m);
  const double t = seconds_since(start);
  c.expect(all, "RSA round trip fails for some message");
  c.expect(t < 5.0, "RSA sweep took " + std::to_string(t) + " s");
  c.note("all 1961 messages round-trip in " + std::to_string(t) + " s");
}

void attack_lab(Check& c) {
  c.equal(enumerate_cost(9, 10), BigInteger::parse("435848049"), "enumerate_cost(9,10)");
  c.equal(enumerate_cost(9, 15), BigInteger::parse("25736391511830"), "enumerate_cost(9,15)");

  const HiddenPair hp{fixtures::c17(), fixtures::d11()};
  AttackBudget budget;
  budget.max_quotient = 6;
  budget.max_depth = 6;
  budget.exp_lo = 2;
  budget.exp_hi = 20;
  budget.threads = 0;
  const AttackReport r = brute_force_attack(hp, budget);
  c.expect(r.found.has_value(), "seed not found within the budget");
  if (r.found) c.expect(r.found->seed == fixtures::seed(), "found matrix is not the seed");
  c.expect(r.elapsed.count() < 60.0, "attack took " + std::to_string(r.elapsed.count()) + " s");

  const RecoveryTrace bob = recover_iterative(hp, CoprimePair(17, 11));
  const double ratio = static_cast<double>(r.multiplications) /
                       static_cast<double>(bob.total.multiplications);
  c.expect(ratio >= 50.0, "attacker/Bob multiplication ratio " + std::to_string(ratio));
  c.note("attacker " + std::to_string(r.multiplications) + " multiplications vs Bob " +
         std::to_string(bob.total.multiplications) + " (ratio " + std::to_string(ratio) + "), " +
         std::to_string(r.candidates_tested) + " candidates in " +
         std::to_string(r.elapsed.count()) + " s");
}

void property_suites(Check& c) {
  std::set<std::vector<BigInteger>> seen;
  std::size_t pairs = 0;
  bool roundtrip = true, coprime_steps = true;
  for (long long k1 = 2; k1 <= 500; ++k1) {
    for (long long k2 = 1; k2 < k1; ++k2) {
      if (std::gcd(k1, k2) != 1) continue;
      const CoprimePair pair(k1, k2);
      const QuotientSequence qs = quotient_sequence(pair);
      roundtrip = roundtrip && continued_fraction_eval(qs) == pair &&
                  quotients_to_pair_matrix(qs) == pair;
      seen.insert(qs.terms());
      ++pairs;
      for (const auto& s : euclid_steps(pair))
        coprime_steps = coprime_steps && gcd(s.dividend, s.divisor) == BigInteger(1);
    }
  }
  c.expect(roundtrip, "pair/quotient round trip fails");
  c.equal(seen.size(), pairs, "distinct quotient sequences");
  c.expect(coprime_steps, "a Euclid step left coprimality");

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long long> entry(-3, 3);
  bool identity = true, routes_agree = true;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = trial % 2 == 0 ? 2 : 3;
    ExactMatrix seed(dim);
    do {
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t col = 0; col < dim; ++col)
          seed(r, col) = GaussianRational(entry(rng), entry(rng));
    } while (determinant(seed).is_zero());
    long long k1, k2;
    do {
      k1 = std::uniform_int_distribution<long long>(2, 60)(rng);
      k2 = std::uniform_int_distribution<long long>(1, k1 - 1)(rng);
    } while (std::gcd(k1, k2) != 1);
    const CoprimePair pair(k1, k2);
    const HiddenPair hp = hide(seed, pair).hidden;
    const ExactMatrix it = recover_iterative(hp, pair).result;
    identity = identity && it == seed;
    routes_agree = routes_agree && recover_bezout(hp, pair).result == it;
  }
  c.expect(identity, "hide then recover is not the identity");
  c.expect(routes_agree, "Bezout and iterative recovery disagree");

  const ExactMatrix one = fixtures::mat({{"1+i"}});
  bool counts = true;
  for (std::uint64_t k = 1; k <= 200; ++k)
    for (std::uint64_t s = 1; s <= 20; ++s) {
      const PowerPlan plan = storage_plan(k, s);
      const std::uint64_t want = k <= s ? k - 1 : (s - 1) + (k - 1) / s;
      counts = counts && plan.predicted_ops == want &&
               power(one, static_cast<std::int64_t>(k), plan).ops.multiplications == want;
    }
  c.expect(counts, "planned power counts differ from the prediction");
  c.note(std::to_string(pairs) + " coprime pairs, 50 random seeds, 4000 power plans");
}

void dilation_regression(Check& c) {
  const CoprimePair base(17, 11);
  const CoprimePair moved = dilate_shift(base, 1, 6, 1, 4);
  c.expect(moved == CoprimePair(23, 15), "dilated pair is not (23,15)");
  c.equal(euclid_steps(base)[0].remainder, BigInteger(6), "third remainder of (17,11)");
  c.equal(euclid_steps(moved)[0].remainder, BigInteger(8), "third remainder of (23,15)");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"worked example hidden and recovered exactly", seed_hidden_and_recovered},
      {"wrong key yields the published wrong matrix", wrong_key_detected},
      {"quotients and Bezout rows for (1019,239)", long_quotient_example},
      {"quotients and Bezout form for (1001,213)", large_quotient_example},
      {"stored-power cost model", cost_model},
      {"quotient probabilities", gauss_kuzmin},
      {"determinant leak and disguise", disguise},
      {"toy key exchange values", key_exchange},
      {"brute-force attack lab", attack_lab},
      {"property suites", property_suites},
      {"dilated pair regression", dilation_regression},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("unexpected exception: ") + e.what());
    }
    std::cout << (c.passed() ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << "\n";
    for (const auto& n : c.notes()) std::cout << "     " << n << "\n";
    for (const auto& f : c.failures()) std::cout << "     failed: " << f << "\n";
    if (!c.passed()) ++failed;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
