#include "udt/density.hpp"

#include <algorithm>

namespace udt {

namespace {

Rational clamp01(const Rational& v) {
  if (v < 0) return Rational(0);
  if (v > 1) return Rational(1);
  return v;
}

Rational min_r(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max_r(const Rational& a, const Rational& b) { return a > b ? a : b; }

}  // namespace

MassBound measure_in(const TruncatedSet& t, const Interval& j) {
  Rational m = t.measure_between(j.lo, j.hi);
  Rational slack = min_r(t.omitted_mass(), t.slack_between(j.lo, j.hi));
  if (t.kind() == ApproxKind::Outer) {
    Rational lo = m - slack;
    if (lo < 0) lo = 0;
    return {std::move(lo), std::move(m)};
  }
  Rational hi = m + slack;
  if (hi > j.length()) hi = j.length();
  return {std::move(m), std::move(hi)};
}

namespace {

DensityBound from_mass(const MassBound& mb, const Rational& r) {
  return {clamp01(mb.lo / r), clamp01(mb.hi / r)};
}

Interval side_window(const Rational& x, const Rational& r, Side side) {
  return side == Side::Left ? Interval::closed(x - r, x) : Interval::closed(x, x + r);
}

}  // namespace

DensityBound one_sided_density(const TruncatedSet& t, const Rational& x, const Rational& r,
                               Side side) {
  if (r <= 0) throw std::invalid_argument("density radius must be > 0");
  return from_mass(measure_in(t, side_window(x, r, side)), r);
}

DensityBound max_one_sided_density(const TruncatedSet& t, const Rational& x, const Rational& r) {
  DensityBound l = one_sided_density(t, x, r, Side::Left);
  DensityBound rt = one_sided_density(t, x, r, Side::Right);
  return {max_r(l.lo, rt.lo), max_r(l.hi, rt.hi)};
}

namespace {

// One side's window measure and active omitted slack as functions of the
// radius, sampled at the piece cuts of the common refinement.
struct SideData {
  std::vector<Rational> mass_at;    // |upper ∩ window(r)| at each cut
  std::vector<Rational> slack_at;   // strict active omitted mass at each cut
  std::vector<Rational> slack_mid;  // same, on each open piece (size cuts-1)
  std::vector<Rational> slope;      // numerator slope on each piece, 0 or 1
};

Rational window_mass(const TruncatedSet& t, const Rational& x, const Rational& r, Side side) {
  return side == Side::Left ? t.measure_between(x - r, x) : t.measure_between(x, x + r);
}

Rational window_slack(const TruncatedSet& t, const Rational& x, const Rational& r, Side side) {
  return side == Side::Left ? t.slack_between(x - r, x) : t.slack_between(x, x + r);
}

// radii in (r_lo, r_hi) where the window edge crosses a part boundary or a
// region hull becomes active
void collect_cuts(const TruncatedSet& t, const Rational& x, const Rational& r_lo,
                  const Rational& r_hi, Side side, std::vector<Rational>& cuts) {
  auto add = [&](const Rational& r) {
    if (r > r_lo && r < r_hi) cuts.push_back(r);
  };
  const auto& parts = t.upper().parts();
  if (side == Side::Right) {
    Rational t0 = x + r_lo, t1 = x + r_hi;
    auto it = std::partition_point(parts.begin(), parts.end(),
                                   [&](const Interval& p) { return p.hi <= t0; });
    for (; it != parts.end() && it->lo < t1; ++it) {
      add(it->lo - x);
      add(it->hi - x);
    }
    for (const auto& rg : t.regions()) {
      if (rg.hull.hi <= x) continue;
      add(rg.hull.lo - x);
    }
  } else {
    Rational t0 = x - r_hi;
    auto it = std::partition_point(parts.begin(), parts.end(),
                                   [&](const Interval& p) { return p.hi <= t0; });
    for (; it != parts.end() && it->lo < x - r_lo; ++it) {
      add(x - it->lo);
      add(x - it->hi);
    }
    for (const auto& rg : t.regions()) {
      if (rg.hull.lo >= x) continue;
      add(x - rg.hull.hi);
    }
  }
}

SideData sample_side(const TruncatedSet& t, const Rational& x, const std::vector<Rational>& cuts,
                     Side side) {
  SideData d;
  d.mass_at.reserve(cuts.size());
  d.slack_at.reserve(cuts.size());
  for (const auto& r : cuts) {
    d.mass_at.push_back(window_mass(t, x, r, side));
    d.slack_at.push_back(window_slack(t, x, r, side));
  }
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    d.slack_mid.push_back(window_slack(t, x, mid, side));
    d.slope.push_back((d.mass_at[i + 1] - d.mass_at[i]) / (cuts[i + 1] - cuts[i]));
  }
  return d;
}

struct LinOverR {
  // value(r) = slope + off / r on one piece
  Rational slope;
  Rational off;
  Rational at(const Rational& r) const { return slope + off / r; }
};

LinOverR piece_fn(const SideData& d, const std::vector<Rational>& cuts, std::size_t i,
                  const Rational& slack) {
  // numerator m(r) = mass_at[i] + slope*(r - cuts[i]) - slack
  return {d.slope[i], d.mass_at[i] - d.slope[i] * cuts[i] - slack};
}

}  // namespace

DensityBound inf_density_over_range(const TruncatedSet& t, const Rational& x,
                                    const Rational& r_lo, const Rational& r_hi,
                                    DensityMode mode) {
  if (r_lo <= 0 || r_hi < r_lo) throw std::invalid_argument("degenerate radius range");
  const bool outer = t.kind() == ApproxKind::Outer;

  std::vector<Rational> cuts{r_lo};
  if (r_hi > r_lo) cuts.push_back(r_hi);
  if (mode != DensityMode::Right) collect_cuts(t, x, r_lo, r_hi, Side::Left, cuts);
  if (mode != DensityMode::Left) collect_cuts(t, x, r_lo, r_hi, Side::Right, cuts);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Side> sides;
  if (mode != DensityMode::Right) sides.push_back(Side::Left);
  if (mode != DensityMode::Left) sides.push_back(Side::Right);
  std::vector<SideData> data;
  for (Side s : sides) data.push_back(sample_side(t, x, cuts, s));

  // pointwise bounds at a sampled radius: lo uses the slack, hi does not
  // (Outer kind; roles swap for Inner)
  auto lo_at = [&](std::size_t side_idx, std::size_t cut_idx) {
    const SideData& d = data[side_idx];
    if (outer) return Rational((d.mass_at[cut_idx] - d.slack_at[cut_idx]) / cuts[cut_idx]);
    return Rational(d.mass_at[cut_idx] / cuts[cut_idx]);
  };
  auto hi_at = [&](std::size_t side_idx, std::size_t cut_idx) {
    const SideData& d = data[side_idx];
    if (outer) return Rational(d.mass_at[cut_idx] / cuts[cut_idx]);
    return Rational((d.mass_at[cut_idx] + d.slack_at[cut_idx]) / cuts[cut_idx]);
  };
  auto combine = [&](const Rational& a, const Rational& b) {
    return sides.size() == 2 ? max_r(a, b) : a;
  };

  // upper bound for the infimum: min over sampled radii of the pointwise hi
  Rational hi_inf = combine(hi_at(0, 0), sides.size() == 2 ? hi_at(1, 0) : Rational(0));
  for (std::size_t c = 1; c < cuts.size(); ++c) {
    Rational v = combine(hi_at(0, c), sides.size() == 2 ? hi_at(1, c) : Rational(0));
    hi_inf = min_r(hi_inf, v);
  }

  // lower bound: exact inf of the piecewise lower envelope
  Rational lo_inf = combine(lo_at(0, 0), sides.size() == 2 ? lo_at(1, 0) : Rational(0));
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    Rational v = combine(lo_at(0, c), sides.size() == 2 ? lo_at(1, c) : Rational(0));
    lo_inf = min_r(lo_inf, v);
  }
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    std::vector<LinOverR> fns;
    for (std::size_t s = 0; s < sides.size(); ++s) {
      Rational slack = outer ? data[s].slack_mid[i] : Rational(0);
      fns.push_back(piece_fn(data[s], cuts, i, slack));
    }
    auto value = [&](const Rational& r) {
      Rational v = fns[0].at(r);
      if (fns.size() == 2) v = max_r(v, fns[1].at(r));
      return v;
    };
    // piece-end limits (the piece function extends continuously to the cuts)
    lo_inf = min_r(lo_inf, value(cuts[i]));
    lo_inf = min_r(lo_inf, value(cuts[i + 1]));
    if (fns.size() == 2 && fns[0].slope != fns[1].slope) {
      // crossing of the two monotone branches
      Rational r_star = (fns[1].off - fns[0].off) / (fns[0].slope - fns[1].slope);
      if (r_star > cuts[i] && r_star < cuts[i + 1]) {
        lo_inf = min_r(lo_inf, value(r_star));
        hi_inf = min_r(hi_inf, [&] {
          // pointwise hi at r_star is also a valid upper bound for the inf
          Rational v(0);
          for (std::size_t s = 0; s < sides.size(); ++s) {
            Rational slack = outer ? Rational(0) : data[s].slack_mid[i];
            LinOverR hi_fn = piece_fn(data[s], cuts, i, -slack);
            v = s == 0 ? hi_fn.at(r_star) : max_r(v, hi_fn.at(r_star));
          }
          return v;
        }());
      }
    }
  }
  return {clamp01(lo_inf), clamp01(hi_inf)};
}

SmallRCertificate small_r_floor_certificate(const std::vector<Address>& chain, int k) {
  if (chain.empty() || k < 1 || k > static_cast<int>(chain.size()))
    throw std::invalid_argument("small_r_floor_certificate: bad chain or level");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].depth() != static_cast<int>(i) + 1)
      throw std::invalid_argument("small_r_floor_certificate: chain is not depth-consecutive");
    if (i > 0 && !std::equal(chain[i - 1].indices.begin(), chain[i - 1].indices.end(),
                             chain[i].indices.begin()))
      throw std::invalid_argument("small_r_floor_certificate: chain is not nested");
  }
  for (std::size_t i = 1; i < chain.size(); ++i) {
    Interval outer_k = k_interval(chain[i - 1]);
    Interval inner_k = k_interval(chain[i]);
    if (!(outer_k.lo <= inner_k.lo && inner_k.hi <= outer_k.hi))
      throw std::invalid_argument("small_r_floor_certificate: K intervals do not nest");
  }
  const Address& at = chain[static_cast<std::size_t>(k) - 1];
  return {chain, k, r_value(at), Rational(1) - 384 * alpha(k)};
}

Tri in_E_gamma_delta(const TruncatedSet& t, const Rational& x, const Rational& gamma_v,
                     const Rational& delta, const Rational& r_floor,
                     const SmallRCertificate* small_r) {
  if (r_floor <= 0 || r_floor > delta)
    throw std::invalid_argument("in_E_gamma_delta requires 0 < r_floor <= delta");
  DensityBound range = inf_density_over_range(t, x, r_floor, delta, DensityMode::Max);
  if (range.hi < gamma_v) return Tri::No;

  bool small_covered = false;
  // a full side certifies density 1 at every r <= r_floor on that side
  MassBound left = measure_in(t, Interval::closed(x - r_floor, x));
  MassBound right = measure_in(t, Interval::closed(x, x + r_floor));
  if (left.lo == r_floor || right.lo == r_floor) small_covered = true;
  if (!small_covered && small_r != nullptr) {
    SmallRCertificate fresh = small_r_floor_certificate(small_r->chain, small_r->level);
    if (fresh.radius == small_r->radius && fresh.bound == small_r->bound &&
        small_r->radius >= r_floor && small_r->bound >= gamma_v &&
        k_interval(small_r->chain.back()).contains(x))
      small_covered = true;
  }
  if (small_covered && range.lo >= gamma_v) return Tri::Yes;
  return Tri::Unknown;
}

DensityBound m_f(const TruncatedSet& t, const Rational& x, const Rational& r) {
  return max_one_sided_density(t, x, r);
}

TruncatedSet exact_set(IntervalSet s) {
  return TruncatedSet(Rational(0), ApproxKind::Outer, std::move(s), Rational(0), {});
}

}  // namespace udt
