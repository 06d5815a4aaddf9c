#pragma once

#include <vector>

#include "udt/construction.hpp"

namespace udt {

// Two-sided enclosure of a measure; the true value lies in [lo, hi].
struct MassBound {
  Rational lo;
  Rational hi;
};

// Two-sided enclosure of a density value in [0, 1].
struct DensityBound {
  Rational lo;
  Rational hi;
};

enum class Side { Left, Right };
enum class DensityMode { Left, Right, Max };

// Certified membership answers: Yes/No only when the bounds strictly decide.
enum class Tri { Yes, No, Unknown };

// Certified bounds on |E ∩ j| from the truncation: the materialized measure
// plus/minus the omitted mass localized to regions meeting j.
MassBound measure_in(const TruncatedSet& t, const Interval& j);

// |E ∩ [x-r,x]|/r or |E ∩ [x,x+r]|/r; boundary points carry no measure, so
// open and closed query intervals are identified.
DensityBound one_sided_density(const TruncatedSet& t, const Rational& x, const Rational& r,
                               Side side);

// max of the two one-sided densities (componentwise max of the bounds)
DensityBound max_one_sided_density(const TruncatedSet& t, const Rational& x, const Rational& r);

// Certified bounds on inf over r in [r_lo, r_hi] of the chosen density.
// The numerator is piecewise linear in r with slope 0 or 1 and the omitted
// slack is piecewise constant, so each piece is monotone and the infimum is
// attained at piece boundaries (plus the crossing radius in Max mode); the
// evaluation is exact.
DensityBound inf_density_over_range(const TruncatedSet& t, const Rational& x,
                                    const Rational& r_lo, const Rational& r_hi,
                                    DensityMode mode);

// The small-radius density floor: for every x in closure(A) ∩ K(chain[k-1])
// and every r in (0, radius), the max one-sided density is >= bound, with
// bound = 1 - 384 alpha_k. Justified by the construction's lemmas; the
// structural requirements on the chain are validated, the floor itself is
// not recomputed.
struct SmallRCertificate {
  std::vector<Address> chain;
  int level = 0;
  Rational radius;
  Rational bound;
};
SmallRCertificate small_r_floor_certificate(const std::vector<Address>& chain, int k);

// Membership in E^{gamma,delta}: Yes when the infimum over [r_floor, delta]
// is certified >= gamma and (0, r_floor) is covered either by a full side
// ([x-r_floor,x] or [x,x+r_floor] certified inside the set) or by a
// small-radius floor certificate; No when some radius certifies < gamma;
// Unknown otherwise.
Tri in_E_gamma_delta(const TruncatedSet& t, const Rational& x, const Rational& gamma,
                     const Rational& delta, const Rational& r_floor,
                     const SmallRCertificate* small_r = nullptr);

// M_f(x,r) for f the primitive of the set's indicator. For a monotone
// primitive the sup over |x-y| <= r is attained at the window ends, so this
// equals max_one_sided_density identically; the equality is the contract.
DensityBound m_f(const TruncatedSet& t, const Rational& x, const Rational& r);

// Wrap an exactly-known finite interval union as a zero-slack TruncatedSet.
TruncatedSet exact_set(IntervalSet s);

}  // namespace udt
