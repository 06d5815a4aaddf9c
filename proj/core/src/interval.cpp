#include "udt/interval.hpp"

#include <algorithm>
#include <tuple>

#include "json_util.hpp"

namespace udt {

Interval::Interval(Rational lo_, Rational hi_, bool lo_open_, bool hi_open_)
    : lo(std::move(lo_)), hi(std::move(hi_)), lo_open(lo_open_), hi_open(hi_open_) {
  if (lo > hi) throw std::invalid_argument("malformed interval: lo > hi");
  if (lo == hi && (lo_open || hi_open))
    throw std::invalid_argument("malformed interval: degenerate point must be closed");
}

bool Interval::contains(const Rational& x) const {
  if (x < lo || x > hi) return false;
  if (x == lo && lo_open) return false;
  if (x == hi && hi_open) return false;
  return true;
}

bool operator==(const Interval& a, const Interval& b) {
  return a.lo == b.lo && a.hi == b.hi && a.lo_open == b.lo_open && a.hi_open == b.hi_open;
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Rational lo;
  bool lo_open;
  if (a.lo > b.lo) {
    lo = a.lo;
    lo_open = a.lo_open;
  } else if (b.lo > a.lo) {
    lo = b.lo;
    lo_open = b.lo_open;
  } else {
    lo = a.lo;
    lo_open = a.lo_open || b.lo_open;
  }
  Rational hi;
  bool hi_open;
  if (a.hi < b.hi) {
    hi = a.hi;
    hi_open = a.hi_open;
  } else if (b.hi < a.hi) {
    hi = b.hi;
    hi_open = b.hi_open;
  } else {
    hi = a.hi;
    hi_open = a.hi_open || b.hi_open;
  }
  if (lo > hi) return std::nullopt;
  if (lo == hi && (lo_open || hi_open)) return std::nullopt;
  return Interval(std::move(lo), std::move(hi), lo_open, hi_open);
}

bool overlaps_positively(const Interval& a, const Interval& b) {
  return std::max(a.lo, b.lo) < std::min(a.hi, b.hi);
}

bool closures_intersect(const Interval& a, const Interval& b) {
  return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

IntervalSet IntervalSet::normalize(std::vector<Interval> raw) {
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return std::tie(a.lo, a.lo_open, a.hi, a.hi_open) < std::tie(b.lo, b.lo_open, b.hi, b.hi_open);
  });
  IntervalSet out;
  for (auto& iv : raw) {
    if (out.parts_.empty()) {
      out.parts_.push_back(std::move(iv));
      continue;
    }
    Interval& cur = out.parts_.back();
    const bool overlap = iv.lo < cur.hi;
    const bool closed_touch = iv.lo == cur.hi && !cur.hi_open && !iv.lo_open;
    if (overlap || closed_touch) {
      if (iv.lo == cur.lo) cur.lo_open = cur.lo_open && iv.lo_open;
      if (iv.hi > cur.hi) {
        cur.hi = iv.hi;
        cur.hi_open = iv.hi_open;
      } else if (iv.hi == cur.hi) {
        cur.hi_open = cur.hi_open && iv.hi_open;
      }
    } else {
      out.parts_.push_back(std::move(iv));
    }
  }
  return out;
}

Rational IntervalSet::measure() const {
  Rational total(0);
  for (const auto& p : parts_) total += p.length();
  return total;
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::partition_point(parts_.begin(), parts_.end(),
                                 [&](const Interval& p) { return p.hi < x; });
  for (; it != parts_.end() && it->lo <= x; ++it)
    if (it->contains(x)) return true;
  return false;
}

IntervalSet intersect(const IntervalSet& s, const Interval& j) {
  IntervalSet out;
  auto it = std::partition_point(s.parts_.begin(), s.parts_.end(),
                                 [&](const Interval& p) { return p.hi < j.lo; });
  for (; it != s.parts_.end() && it->lo <= j.hi; ++it)
    if (auto piece = intersect(*it, j)) out.parts_.push_back(std::move(*piece));
  return out;
}

IntervalSet intersect(const IntervalSet& s, const IntervalSet& t) {
  IntervalSet out;
  std::size_t i = 0, j = 0;
  while (i < s.parts_.size() && j < t.parts_.size()) {
    const Interval& a = s.parts_[i];
    const Interval& b = t.parts_[j];
    if (auto piece = intersect(a, b)) out.parts_.push_back(std::move(*piece));
    if (a.hi < b.hi) {
      ++i;
    } else if (b.hi < a.hi) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return out;
}

IntervalSet subtract(const IntervalSet& s, const IntervalSet& t) {
  IntervalSet out;
  std::size_t j = 0;
  for (const Interval& p : s.parts_) {
    // remainder of p not yet cut away
    Rational lo = p.lo;
    bool lo_open = p.lo_open;
    bool alive = true;
    // skip removals entirely to the left of p
    while (j < t.parts_.size() && t.parts_[j].hi < p.lo) ++j;
    std::size_t k = j;
    while (alive && k < t.parts_.size() && t.parts_[k].lo <= p.hi) {
      const Interval& r = t.parts_[k];
      // left piece: points of the remainder strictly before r.lo, plus the
      // point r.lo itself when r excludes it and p contains it
      const Rational& cut = r.lo;
      bool piece_hi_open = cut == p.hi ? (p.hi_open || !r.lo_open) : !r.lo_open;
      if (cut > lo || (cut == lo && !lo_open && !piece_hi_open))
        out.parts_.emplace_back(lo, cut, lo_open, piece_hi_open);
      // advance the remainder past r
      if (r.hi > p.hi || (r.hi == p.hi && (p.hi_open || !r.hi_open))) {
        alive = false;
      } else {
        if (r.hi > lo || (r.hi == lo && !r.hi_open)) {
          lo = r.hi;
          lo_open = !r.hi_open;
        }
        ++k;
      }
    }
    if (alive) {
      if (lo < p.hi || (lo == p.hi && !lo_open && !p.hi_open))
        out.parts_.emplace_back(lo, p.hi, lo_open, p.hi_open);
    }
  }
  return out;
}

IntervalSet unite(const IntervalSet& s, const IntervalSet& t) {
  std::vector<Interval> raw = s.parts_;
  raw.insert(raw.end(), t.parts_.begin(), t.parts_.end());
  return IntervalSet::normalize(std::move(raw));
}

std::string to_json_string(const Interval& iv) { return detail::interval_json(iv).dump(); }

std::string to_json_string(const IntervalSet& s) { return detail::interval_set_json(s).dump(); }

Interval interval_from_json_string(const std::string& text) {
  return detail::interval_from(nlohmann::json::parse(text));
}

IntervalSet interval_set_from_json_string(const std::string& text) {
  return detail::interval_set_from(nlohmann::json::parse(text));
}

}  // namespace udt
