#include "udt/construction.hpp"

#include <algorithm>

#include "json_util.hpp"

namespace udt {

Rational alpha(int k) {
  if (k < 1) throw std::invalid_argument("alpha: k must be >= 1");
  return pow10(-k);
}

Rational gamma(int k) { return Rational(1) - alpha(k); }

RemovalPair removal_pair(const Address& addr) {
  auto [a, r, k] = address_value(addr);
  Rational ak = alpha(k);
  Rational half(1, 2);
  Interval left(a - half * r, a - (half - ak) * r, true, true);
  Interval right(a + (half - ak) * r, a + half * r, true, true);
  return {addr, std::move(left), std::move(right)};
}

std::pair<Interval, Interval> j_pair(const Address& addr) {
  auto [a, r, k] = address_value(addr);
  Rational half_r = r / 2;
  return {Interval::closed(a - half_r, a), Interval::closed(a, a + half_r)};
}

Interval k_interval(const Address& addr) {
  auto [a, r, k] = address_value(addr);
  return Interval::closed(a - r, a);
}

Rational total_removal_mass() { return Rational(16, 159); }

Rational subtree_tail_mass(const Address& addr) {
  return r_value(addr) * Rational(2, 159) * pow10(-addr.depth());
}

namespace {

// removal length at addr plus everything below it: 2 r 10^-k * 160/159
Rational subtree_total_mass(int depth, const Rational& r) {
  return r * Rational(320, 159) * pow10(-depth);
}

struct Enumerator {
  Rational eps;
  Enumeration out;

  void visit(const Address& u, const Rational& a_u, const Rational& r_u) {
    out.removals.push_back(removal_pair(u));
    out.removed_mass += 2 * alpha(u.depth()) * r_u;
    const int child_depth = u.depth() + 1;
    const Rational child_alpha = pow10(-child_depth);
    const Rational a_succ = a_u - r_u;  // a of parent_successor(u)
    for (std::int64_t n = 1;; ++n) {
      Rational r_c = r_u * pow2(-(n + 4));
      if (child_alpha * r_c >= eps) {
        Rational a_c = a_succ + pow2(-(n + 3)) * r_u;
        visit(child(u, n), a_c, r_c);
      } else {
        // tail of siblings n, n+1, ... : sum of their r is 2^-(n+3) r_u
        Rational tail_r_sum = pow2(-(n + 3)) * r_u;
        Rational mass = subtree_total_mass(child_depth, tail_r_sum);
        Rational a_c = a_succ + pow2(-(n + 3)) * r_u;
        Interval hull(a_succ, a_c + r_c / 2, true, true);
        out.regions.push_back({std::move(hull), std::move(mass)});
        break;
      }
    }
  }

  void run() {
    const Rational a1 = alpha(1);
    for (std::int64_t n = 1;; ++n) {
      Rational r_n = pow2(-(n + 1));
      if (a1 * r_n >= eps) {
        visit(Address({n}), pow2(-n), r_n);
      } else {
        // all roots m >= n: their r-values sum to 2^-n
        Rational mass = subtree_total_mass(1, pow2(-n));
        Interval hull(Rational(0), pow2(-n) + r_n / 2, true, true);
        out.regions.push_back({std::move(hull), std::move(mass)});
        break;
      }
    }
    std::sort(out.removals.begin(), out.removals.end(),
              [](const RemovalPair& x, const RemovalPair& y) {
                if (x.addr.depth() != y.addr.depth()) return x.addr.depth() < y.addr.depth();
                return std::lexicographical_compare(
                    x.addr.indices.begin(), x.addr.indices.end(),
                    y.addr.indices.begin(), y.addr.indices.end());
              });
    std::sort(out.regions.begin(), out.regions.end(),
              [](const OmittedRegion& x, const OmittedRegion& y) { return x.hull.lo < y.hull.lo; });
  }
};

}  // namespace

Enumeration enumerate_with_tails(const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("enumeration threshold must be > 0");
  Enumerator en{eps, {}};
  en.out.removed_mass = 0;
  en.run();
  return std::move(en.out);
}

std::vector<RemovalPair> enumerate_removals(const Rational& eps) {
  return enumerate_with_tails(eps).removals;
}

TruncatedSet::TruncatedSet(Rational epsilon, ApproxKind kind, IntervalSet upper,
                           Rational omitted_mass, std::vector<OmittedRegion> regions)
    : epsilon_(std::move(epsilon)),
      kind_(kind),
      upper_(std::move(upper)),
      omitted_mass_(std::move(omitted_mass)),
      regions_(std::move(regions)) {
  finalize();
}

void TruncatedSet::finalize() {
  part_prefix_.clear();
  part_prefix_.reserve(upper_.size() + 1);
  part_prefix_.emplace_back(0);
  for (const auto& p : upper_.parts()) part_prefix_.push_back(part_prefix_.back() + p.length());

  std::sort(regions_.begin(), regions_.end(),
            [](const OmittedRegion& x, const OmittedRegion& y) { return x.hull.lo < y.hull.lo; });
  // truncation hulls can nest (a sibling-tail hull contains the child-zone
  // hull of the last enumerated sibling), which breaks the contiguous-run
  // prefix lookup; slack_between then scans linearly instead
  regions_disjoint_ = true;
  for (std::size_t i = 1; i < regions_.size(); ++i)
    if (regions_[i].hull.lo < regions_[i - 1].hull.hi) regions_disjoint_ = false;
  region_mass_prefix_.clear();
  region_mass_prefix_.emplace_back(0);
  for (const auto& reg : regions_)
    region_mass_prefix_.push_back(region_mass_prefix_.back() + reg.mass);
}

Rational TruncatedSet::coverage_below(const Rational& t) const {
  const auto& parts = upper_.parts();
  // first part with hi >= t
  std::size_t i = std::partition_point(parts.begin(), parts.end(),
                                       [&](const Interval& p) { return p.hi < t; }) -
                  parts.begin();
  Rational c = part_prefix_[i];
  if (i < parts.size() && parts[i].lo < t) c += t - parts[i].lo;
  return c;
}

Rational TruncatedSet::measure_between(const Rational& a, const Rational& b) const {
  if (b <= a) return Rational(0);
  return coverage_below(b) - coverage_below(a);
}

Rational TruncatedSet::slack_between(const Rational& a, const Rational& b) const {
  if (b <= a) return Rational(0);
  if (regions_disjoint_) {
    // hulls sorted and disjoint, so the ones meeting (a,b) are contiguous
    std::size_t lo = std::partition_point(regions_.begin(), regions_.end(),
                                          [&](const OmittedRegion& rg) { return rg.hull.hi <= a; }) -
                     regions_.begin();
    std::size_t hi = std::partition_point(regions_.begin(), regions_.end(),
                                          [&](const OmittedRegion& rg) { return rg.hull.lo < b; }) -
                     regions_.begin();
    if (hi <= lo) return Rational(0);
    return region_mass_prefix_[hi] - region_mass_prefix_[lo];
  }
  Rational total(0);
  for (const auto& rg : regions_)
    if (rg.hull.lo < b && rg.hull.hi > a) total += rg.mass;
  return total;
}

TruncatedSet truncate(const Rational& eps) {
  Enumeration en = enumerate_with_tails(eps);
  std::vector<Interval> raw;
  raw.reserve(2 * en.removals.size());
  for (auto& rp : en.removals) {
    raw.push_back(rp.left);
    raw.push_back(rp.right);
  }
  IntervalSet removals = IntervalSet::normalize(std::move(raw));
  IntervalSet upper = subtract(IntervalSet(Interval::closed(Rational(-1), Rational(1))), removals);
  Rational omitted = total_removal_mass() - en.removed_mass;
  return TruncatedSet(eps, ApproxKind::Outer, std::move(upper), std::move(omitted),
                      std::move(en.regions));
}

EnclosedInterval enclose_wd_interval(int n, const Rational& tol) {
  if (n < 2) throw std::invalid_argument("wd interval index must be >= 2");
  if (tol <= 0) throw std::invalid_argument("tolerance must be > 0");
  Integer nn = boost::multiprecision::pow(Integer(n), static_cast<unsigned>(n));
  Rational right(1, nn);
  Integer s0 = boost::multiprecision::sqrt(Integer(n));
  if (s0 * s0 == n) {
    Rational exact(1, nn * s0);
    return {{exact, exact}, {right, right}};
  }
  for (unsigned p = 16;; p += 16) {
    Integer scale = Integer(1) << p;
    Integer s = boost::multiprecision::sqrt(Integer(n) * scale * scale);
    // sqrt(n) in [s/2^p, (s+1)/2^p), so n^-(n+1/2) in (lo, up]
    Rational lo = Rational(scale, s + 1) / nn;
    Rational up = Rational(scale, s) / nn;
    if (up - lo <= tol && up < right) return {{lo, up}, {right, right}};
  }
}

TruncatedSet wd_example(int big_n, const Rational& tol) {
  if (big_n < 2) throw std::invalid_argument("wd_example: N must be >= 2");
  if (tol <= 0) throw std::invalid_argument("wd_example: tol must be > 0");
  std::vector<Interval> parts;
  std::vector<OmittedRegion> regions;
  Rational slack(0);
  for (int n = 2; n <= big_n; ++n) {
    EnclosedInterval enc = enclose_wd_interval(n, tol);
    const auto& [q_lo, q_up] = enc.lo_bounds;
    parts.push_back(Interval::closed(q_up, enc.hi_bounds.first));
    if (q_up > q_lo) {
      Rational width = q_up - q_lo;
      regions.push_back({Interval(q_lo, q_up, true, true), width});
      slack += width;
    }
  }
  // tail majorant: sum_{m>N} m^-m <= (N+1)^-(N+1) * (N+1)/N, all of it
  // inside (0, (N+1)^-(N+1)]
  Integer top = boost::multiprecision::pow(Integer(big_n + 1), static_cast<unsigned>(big_n + 1));
  Rational tail = Rational(big_n + 1, big_n) / top;
  regions.push_back({Interval(Rational(0), Rational(1, top), true, false), tail});
  slack += tail;
  return TruncatedSet(tol, ApproxKind::Inner, IntervalSet::normalize(std::move(parts)),
                      std::move(slack), std::move(regions));
}

std::vector<FigureRow> figure_rows(int depth, std::int64_t index_cap) {
  std::vector<FigureRow> rows;
  if (depth < 1 || index_cap < 1) return rows;
  auto emit = [&](const Address& u) {
    RemovalPair rp = removal_pair(u);
    auto [jl, jr] = j_pair(u);
    Interval k = k_interval(u);
    rows.push_back({u, "IL", rp.left.lo, rp.left.hi});
    rows.push_back({u, "IR", rp.right.lo, rp.right.hi});
    rows.push_back({u, "JL", jl.lo, jl.hi});
    rows.push_back({u, "JR", jr.lo, jr.hi});
    rows.push_back({u, "K", k.lo, k.hi});
  };
  // depth-major, lexicographic within a depth (= descending point value)
  for (int d = 1; d <= depth; ++d) {
    std::vector<std::int64_t> pre;
    auto walk = [&](auto&& self) -> void {
      if (static_cast<int>(pre.size()) == d) {
        emit(Address(pre));
        return;
      }
      for (std::int64_t n = 1; n <= index_cap; ++n) {
        pre.push_back(n);
        self(self);
        pre.pop_back();
      }
    };
    walk(walk);
  }
  return rows;
}

std::string to_json_string(const TruncatedSet& t) {
  nlohmann::json regions = nlohmann::json::array();
  for (const auto& rg : t.regions())
    regions.push_back({{"hull", detail::interval_json(rg.hull)}, {"mass", detail::rat_json(rg.mass)}});
  nlohmann::json j{{"epsilon", detail::rat_json(t.epsilon())},
                   {"kind", t.kind() == ApproxKind::Outer ? "outer" : "inner"},
                   {"omitted_mass", detail::rat_json(t.omitted_mass())},
                   {"upper", detail::interval_set_json(t.upper())},
                   {"regions", regions}};
  return j.dump(2);
}

TruncatedSet truncated_set_from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ApproxKind kind = ApproxKind::Outer;
  if (j.contains("kind")) {
    std::string k = j.at("kind").get<std::string>();
    if (k == "inner")
      kind = ApproxKind::Inner;
    else if (k != "outer")
      throw std::invalid_argument("truncated set kind must be \"outer\" or \"inner\"");
  }
  std::vector<OmittedRegion> regions;
  if (j.contains("regions"))
    for (const auto& e : j.at("regions"))
      regions.push_back({detail::interval_from(e.at("hull")), detail::rat_from(e.at("mass"))});
  return TruncatedSet(detail::rat_from(j.at("epsilon")), kind,
                      detail::interval_set_from(j.at("upper")),
                      detail::rat_from(j.at("omitted_mass")), std::move(regions));
}

}  // namespace udt
