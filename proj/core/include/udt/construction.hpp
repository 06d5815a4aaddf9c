#pragma once

#include <string>
#include <utility>
#include <vector>

#include "udt/address.hpp"
#include "udt/interval.hpp"
#include "udt/rational.hpp"

namespace udt {

// alpha_k = 10^-k, gamma_k = 1 - alpha_k; k >= 1.
Rational alpha(int k);
Rational gamma(int k);

// The two open intervals removed around the point of `addr`:
//   left  = (a - r/2, a - (1/2 - alpha_k) r)
//   right = (a + (1/2 - alpha_k) r, a + r/2)
// each of length alpha_k * r.
struct RemovalPair {
  Address addr;
  Interval left;
  Interval right;
};
RemovalPair removal_pair(const Address& addr);

// J^L = [a - r/2, a], J^R = [a, a + r/2] (closed, each of length r/2).
std::pair<Interval, Interval> j_pair(const Address& addr);

// K = [a_{parent_successor}, a_{addr}] (closed, length r).
Interval k_interval(const Address& addr);

// Total length of all removal intervals over the full infinite family:
// per-depth r-sums satisfy S_1 = 1/2, S_{k+1} = S_k/16, so the removals sum
// to sum_k 2*10^-k * (1/2) * 16^(1-k) = 16/159.
Rational total_removal_mass();

// Total removal length among strict descendants of addr: 2 r 10^-k / 159.
Rational subtree_tail_mass(const Address& addr);

// An interval known to contain un-enumerated removal mass, with an exact
// bound on that mass. Used to localize truncation error in density queries.
struct OmittedRegion {
  Interval hull;
  Rational mass;
};

struct Enumeration {
  std::vector<RemovalPair> removals;   // depth-major, value-descending
  std::vector<OmittedRegion> regions;  // sorted by hull.lo
  Rational removed_mass;               // sum of all removal lengths
};

// Exactly the addresses with alpha_k * r_value(addr) >= eps, plus tail
// regions accounting for everything below the threshold. Deterministic.
Enumeration enumerate_with_tails(const Rational& eps);
std::vector<RemovalPair> enumerate_removals(const Rational& eps);

// Whether `upper` over- or under-approximates the target set.
enum class ApproxKind { Outer, Inner };

// Finite approximation of a set with exact error accounting. For the main
// construction (Outer): E is a subset of `upper` and at most `omitted_mass`
// of `upper` is not in E, localized by `regions`. For the WD example
// (Inner): `upper` is a subset of the set and at most `omitted_mass` is
// missing.
class TruncatedSet {
 public:
  TruncatedSet() = default;
  TruncatedSet(Rational epsilon, ApproxKind kind, IntervalSet upper, Rational omitted_mass,
               std::vector<OmittedRegion> regions);

  const Rational& epsilon() const { return epsilon_; }
  ApproxKind kind() const { return kind_; }
  const IntervalSet& upper() const { return upper_; }
  const Rational& omitted_mass() const { return omitted_mass_; }
  const std::vector<OmittedRegion>& regions() const { return regions_; }

  // |upper ∩ (-inf, t)|, O(log parts)
  Rational coverage_below(const Rational& t) const;
  // |upper ∩ [a, b]|
  Rational measure_between(const Rational& a, const Rational& b) const;
  // sum of masses of regions whose hull meets (a, b) in positive measure
  Rational slack_between(const Rational& a, const Rational& b) const;

 private:
  Rational epsilon_;
  ApproxKind kind_ = ApproxKind::Outer;
  IntervalSet upper_;
  Rational omitted_mass_;
  std::vector<OmittedRegion> regions_;
  // query caches
  std::vector<Rational> part_prefix_;
  std::vector<Rational> region_mass_prefix_;
  bool regions_disjoint_ = true;
  void finalize();
};

// upper = [-1,1] minus every removal of length >= eps; omitted_mass =
// 16/159 minus the enumerated length, refinable per-region.
TruncatedSet truncate(const Rational& eps);

// Rational enclosure of one interval [n^-(n+1/2), n^-n] of the WD example;
// lo_bounds bracket the irrational left endpoint (exact when sqrt(n) is an
// integer), hi_bounds are the exact right endpoint twice.
struct EnclosedInterval {
  std::pair<Rational, Rational> lo_bounds;
  std::pair<Rational, Rational> hi_bounds;
};
EnclosedInterval enclose_wd_interval(int n, const Rational& tol);

// Inner approximation of {0} ∪ ⋃_{n=2..N} [n^-(n+1/2), n^-n] with the tail
// n > N bounded by the geometric majorant (N+1)^-(N+1) * (N+1)/N.
TruncatedSet wd_example(int big_n, const Rational& tol);

// Geometry export for plotting: one row per (address, interval kind).
struct FigureRow {
  Address addr;
  const char* kind;  // "IL", "IR", "JL", "JR", "K"
  Rational lo;
  Rational hi;
};
std::vector<FigureRow> figure_rows(int depth, std::int64_t index_cap);

std::string to_json_string(const TruncatedSet& t);
TruncatedSet truncated_set_from_json_string(const std::string& text);

}  // namespace udt
