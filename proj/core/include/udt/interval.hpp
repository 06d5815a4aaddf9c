#pragma once

#include <optional>
#include <string>
#include <vector>

#include "udt/rational.hpp"

namespace udt {

// Closed/open bounds are tracked exactly (disjointness certificates need
// them); all measure computations ignore them, since a point has measure 0.
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_open = false;
  bool hi_open = false;

  Interval() = default;
  Interval(Rational lo_, Rational hi_, bool lo_open_ = false, bool hi_open_ = false);

  Rational length() const { return hi - lo; }
  bool degenerate() const { return lo == hi; }
  bool contains(const Rational& x) const;

  static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi)}; }
  static Interval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, true}; }
};

bool operator==(const Interval& a, const Interval& b);

// Point-set intersection; nullopt when empty.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

// Positive-measure overlap, i.e. the interiors meet.
bool overlaps_positively(const Interval& a, const Interval& b);

// Do the closures of a and b intersect?
bool closures_intersect(const Interval& a, const Interval& b);

// Finite union of pairwise disjoint intervals, sorted by lo. Two parts
// sharing an endpoint are merged only when both include it; an open/closed
// touching pair stays split so point-set semantics survive round trips.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(const Interval& single) : parts_{single} {}

  static IntervalSet normalize(std::vector<Interval> raw);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  Rational measure() const;
  bool contains(const Rational& x) const;

 private:
  std::vector<Interval> parts_;
  friend IntervalSet intersect(const IntervalSet&, const Interval&);
  friend IntervalSet intersect(const IntervalSet&, const IntervalSet&);
  friend IntervalSet subtract(const IntervalSet&, const IntervalSet&);
  friend IntervalSet unite(const IntervalSet&, const IntervalSet&);
};

IntervalSet intersect(const IntervalSet& s, const Interval& j);
IntervalSet intersect(const IntervalSet& s, const IntervalSet& t);
IntervalSet subtract(const IntervalSet& s, const IntervalSet& t);
IntervalSet unite(const IntervalSet& s, const IntervalSet& t);

// JSON wire format: interval = {"lo","hi","lo_open","hi_open"}, set = array.
std::string to_json_string(const Interval& iv);
std::string to_json_string(const IntervalSet& s);
Interval interval_from_json_string(const std::string& text);
IntervalSet interval_set_from_json_string(const std::string& text);

}  // namespace udt
