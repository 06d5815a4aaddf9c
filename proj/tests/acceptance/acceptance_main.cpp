// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "udt/construction.hpp"
#include "udt/density.hpp"
#include "udt/witness.hpp"

using namespace udt;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const char* label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto start = Clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_seconds > 0 && secs > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  if (!ok) ++failures;
  std::printf("%s c%02d %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, label, secs,
              detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
}

void for_all_addresses(int max_depth, std::int64_t max_index,
                       const std::function<void(const Address&)>& fn) {
  std::vector<std::int64_t> pre;
  auto walk = [&](auto&& self) -> void {
    if (!pre.empty()) fn(Address(pre));
    if (static_cast<int>(pre.size()) == max_depth) return;
    for (std::int64_t n = 1; n <= max_index; ++n) {
      pre.push_back(n);
      self(self);
      pre.pop_back();
    }
  };
  walk(walk);
}

}  // namespace

int main() {
  // c1: the worked values of the defining recursion, exactly.
  criterion(1, "worked values a_1, a_2, a_11, a_12, r_11", 1.0, [](std::string&) {
    return a_value(Address({1})) == Rational(1, 2) && a_value(Address({2})) == Rational(1, 4) &&
           a_value(Address({1, 1})) == Rational(17, 64) &&
           a_value(Address({1, 2})) == Rational(33, 128) &&
           r_value(Address({1, 1})) == Rational(1, 128);
  });

  // c2: structural conditions over depth <= 4, indices <= 8, plus
  // closure-disjointness of every removal at eps = 2^-30.
  criterion(2, "conditions (i)/(ii), closed form, closure disjointness", 60.0,
            [](std::string& detail) {
              bool ok = true;
              for_all_addresses(4, 8, [&](const Address& u) {
                Rational r = r_value(u);
                if (r != a_value(u) - a_value(parent_successor(u))) ok = false;  // closed form
                if (r_value(parent_successor(u)) != r / 2) ok = false;           // (ii)
                if (u.depth() < 4) {
                  Rational top = a_value(u), bottom = a_value(parent_successor(u));
                  for (std::int64_t n = 1; n <= 8; ++n) {
                    Rational c = a_value(child(u, n));
                    if (!(bottom < c && c < top)) ok = false;  // (i)
                  }
                }
              });
              if (!ok) detail = "structural condition failed";
              auto removals = enumerate_removals(pow2(-30));
              std::vector<Interval> all;
              for (const auto& rp : removals) {
                all.push_back(rp.left);
                all.push_back(rp.right);
              }
              std::sort(all.begin(), all.end(),
                        [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
              for (std::size_t i = 1; i < all.size(); ++i)
                if (!(all[i - 1].hi < all[i].lo)) ok = false;
              detail += "checked " + std::to_string(all.size()) + " removal closures";
              return ok;
            });

  TruncatedSet t40 = truncate(pow2(-40));

  // c3: the K-interval density lemma at eps = 2^-40.
  criterion(3, "lemma |E∩K| >= (1-2a_k)|K| for depth <= 3, indices <= 6", 300.0,
            [&](std::string& detail) {
              bool ok = true;
              int count = 0;
              for_all_addresses(3, 6, [&](const Address& u) {
                Interval k = k_interval(u);
                MassBound mb = measure_in(t40, k);
                if (!(mb.lo >= (Rational(1) - 2 * alpha(u.depth())) * k.length())) ok = false;
                ++count;
              });
              detail = std::to_string(count) + " K intervals";
              return ok;
            });

  // c4: the one-sided ceiling at x = a(addr), r = r(addr)/2.
  criterion(4, "density_hi <= 1-2a_k at the J scale for depth <= 3, indices <= 6", 300.0,
            [&](std::string& detail) {
              bool ok = true;
              int count = 0;
              for_all_addresses(3, 6, [&](const Address& u) {
                AddressValue av = address_value(u);
                DensityBound b = max_one_sided_density(t40, av.a, av.r / 2);
                if (!(b.hi <= Rational(1) - 2 * alpha(u.depth()))) ok = false;
                ++count;
              });
              detail = std::to_string(count) + " points";
              return ok;
            });

  // c5: the two-sided ceiling at scale 2r for sampled points of K ∩ upper.
  criterion(5, "density_hi <= 1-a_k/4 at scale 2r for depth <= 2 samples", 300.0,
            [&](std::string& detail) {
              bool ok = true;
              int count = 0;
              for_all_addresses(2, 6, [&](const Address& u) {
                Rational r = r_value(u);
                Rational ceiling = Rational(1) - alpha(u.depth()) / 4;
                for (const Rational& x :
                     {a_value(parent_successor(u)), a_value(child(u, 1)),
                      a_value(child(u, 5)), a_value(u)}) {
                  if (!t40.upper().contains(x)) {
                    ok = false;
                    continue;
                  }
                  DensityBound b = max_one_sided_density(t40, x, 2 * r);
                  if (!(b.hi <= ceiling)) ok = false;
                  ++count;
                }
              });
              detail = std::to_string(count) + " samples";
              return ok;
            });

  // c6: a three-level witness certificate, produced and re-verified.
  criterion(6, "three-level witness vs gamma_n = 1-10^-(n+1), delta_n = 4^-n", 300.0,
            [](std::string& detail) {
              SequenceSpec seq = SequenceSpec::geometric(Rational(1, 10), Rational(1, 10),
                                                         Rational(1), Rational(1, 4));
              WitnessCertificate cert = find_non_udt_witness(seq, 3, pow2(-60));
              if (cert.levels.size() != 3) return false;
              for (const auto& lv : cert.levels)
                if (!(lv.r_x < lv.delta && lv.density_hi < lv.gamma)) return false;
              VerifyReport rep = verify_non_udt_witness(cert);
              int checks = static_cast<int>(rep.lines.size());
              detail = "indices " + std::to_string(cert.levels[0].n) + "," +
                       std::to_string(cert.levels[1].n) + "," + std::to_string(cert.levels[2].n) +
                       "; " + std::to_string(checks) + " re-checks";
              return rep.ok;
            });

  // c7: the non-SUDT base case comparisons plus m_1 = 42.
  criterion(7, "base case 2^-100 < 2^-47, 1/2 < 1-384e-10, and m_1 = 42", 60.0,
            [](std::string& detail) {
              Rational r10 = r_value(Address(std::vector<std::int64_t>(10, 1)));
              bool ok = r10 == pow2(-47) && pow2(-100) < r10;
              ok = ok && Rational(1, 2) < Rational(1) - 384 * alpha(10);
              SequenceSpec attacked = SequenceSpec::geometric(Rational(1), Rational(1, 2),
                                                              Rational(1), Rational(1, 2));
              SudtCertificate cert = find_non_sudt_witness(attacked, 1);
              ok = ok && cert.steps.size() == 1 && cert.steps[0].m == 42;
              // the pinning comparison (the margin is alpha_{k'_1+2}/4 = 10^-12/4)
              Rational margin = pow10(-12) / 4;
              ok = ok && pow2(-42) < margin && margin <= pow2(-41);
              ok = ok && verify_non_sudt_witness(cert).ok;
              detail = "m_1 = " + std::to_string(cert.steps.empty() ? 0 : cert.steps[0].m) +
                       ", 2^-42 < 10^-12/4 <= 2^-41";
              return ok;
            });

  // c8: mass accounting: monotone partial sums toward 16/159 and the exact
  // |E| identity on every truncation.
  criterion(8, "removal mass converges to 16/159; |upper|-omitted = 302/159", 300.0,
            [&](std::string& detail) {
              Rational total = total_removal_mass();
              bool ok = total == Rational(16, 159);
              Rational prev(0);
              for (int e : {0, 10, 20, 30, 40}) {
                Enumeration en = enumerate_with_tails(pow2(-e));
                if (!(en.removed_mass >= prev && en.removed_mass < total)) ok = false;
                prev = en.removed_mass;
              }
              if (!(total - prev < pow10(-6))) ok = false;
              detail = "gap at 2^-40 = " + decimal_string(total - prev, 3);
              for (int e : {0, 12, 40}) {
                TruncatedSet t = e == 40 ? t40 : truncate(pow2(-e));
                Rational upper = t.upper().measure();
                if (!(upper - t.omitted_mass() <= Rational(302, 159) &&
                      Rational(302, 159) <= upper))
                  ok = false;
              }
              return ok;
            });

  // c9: the WD example's right densities at 0, certified on both sides of
  // the gap for n = 2..6.
  criterion(9, "WD example: dense along n^-n, sparse along n^-(n+1/2)", 300.0,
            [](std::string& detail) {
              const int big_n = 6;
              Rational tol = pow2(-120);
              TruncatedSet w = wd_example(big_n, tol);
              // tail majorant used by the construction
              Integer top = boost::multiprecision::pow(Integer(big_n + 1),
                                                       static_cast<unsigned>(big_n + 1));
              Rational tail = Rational(big_n + 1, big_n) / top;
              bool ok = true;
              for (int n = 2; n <= big_n; ++n) {
                EnclosedInterval enc = enclose_wd_interval(n, tol);
                Integer nn = boost::multiprecision::pow(Integer(n), static_cast<unsigned>(n));
                Rational right(1, nn);
                // rational lower bound of n^-1/2 from the same bracket
                Rational inv_sqrt_lo = enc.lo_bounds.first * nn;
                DensityBound dense = one_sided_density(w, Rational(0), right, Side::Right);
                if (!(dense.lo > Rational(1) - inv_sqrt_lo - tail)) ok = false;
                Rational q_up = enc.lo_bounds.second;
                Integer mm = boost::multiprecision::pow(Integer(n + 1),
                                                        static_cast<unsigned>(n + 1));
                DensityBound sparse = one_sided_density(w, Rational(0), q_up, Side::Right);
                if (!(sparse.hi < 2 * Rational(1, mm) / q_up)) ok = false;
              }
              detail = "n = 2..6 both inequalities";
              return ok;
            });

  // c10: the 1/16 sparsity identity at 20 seeded-random addresses.
  criterion(10, "closure(A) sparsity ratio is exactly 1/16", 60.0, [](std::string&) {
    std::mt19937 gen(20250810);
    std::uniform_int_distribution<int> depth_d(1, 4);
    std::uniform_int_distribution<std::int64_t> index_d(1, 9);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::int64_t> ix;
      int d = depth_d(gen);
      for (int i = 0; i < d; ++i) ix.push_back(index_d(gen));
      if (abar_sparsity_check(Address(ix)) != Rational(1, 16)) return false;
    }
    return true;
  });

  // c11: M_f equals the max one-sided density and matches the grid oracle.
  criterion(11, "M_f identity on 50 random queries vs grid oracle", 300.0,
            [&](std::string& detail) {
              std::mt19937 gen(19561203);
              const int grid = 128;
              bool ok = true;
              for (int trial = 0; trial < 50; ++trial) {
                std::uniform_int_distribution<long long> xd(-(1 << 14), 1 << 14);
                std::uniform_int_distribution<long long> rd(1, 1 << 13);
                Rational x = Rational(xd(gen)) / pow2(14);
                Rational r = Rational(rd(gen)) / pow2(14);
                DensityBound direct = m_f(t40, x, r);
                DensityBound via = max_one_sided_density(t40, x, r);
                if (!(direct.lo == via.lo && direct.hi == via.hi)) ok = false;
                auto f = [&](const Rational& y) {
                  return t40.measure_between(Rational(0), y) -
                         t40.measure_between(y, Rational(0));
                };
                Rational fx = f(x);
                Rational sup(0);
                for (int g = -grid; g <= grid; ++g) {
                  Rational diff = f(x + r * Rational(g) / Rational(grid)) - fx;
                  if (diff < 0) diff = -diff;
                  if (diff > sup) sup = diff;
                }
                if (!(sup / r <= direct.hi && direct.hi <= sup / r + Rational(1, grid))) ok = false;
              }
              detail = "grid resolution 1/128";
              return ok;
            });

  if (failures == 0) {
    std::printf("all 11 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
