#pragma once

#include <optional>
#include <vector>

#include "qheun/upoly.hpp"

namespace qheun {

// One isolated real root: exactly one distinct root of the polynomial lies
// in [lo, hi]. When the root was identified exactly, `exact` is set and
// lo == hi == *exact.
struct RootInterval {
  Rat lo, hi;
  std::optional<Rat> exact;
  int multiplicity = 1;

  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  double midpoint() const { return (lo.to_double() + hi.to_double()) / 2; }
};

// Sturm chain of p (p assumed squarefree for exact counting semantics).
std::vector<UPoly> sturm_chain(const UPoly& p);

// Number of distinct real roots in (a, b]; requires p(a) != 0.
int sturm_count(const std::vector<UPoly>& chain, const Rat& a, const Rat& b);

// Isolates every distinct real root of p in the open interval (lo, hi).
// Endpoints that are roots are nudged inward by (hi-lo)/2^k with k grown
// until no other root can be skipped (verified by a Sturm count on the
// endpoint-deflated polynomial). Multiplicities come from the square-free
// decomposition. Roots found exactly are reported as degenerate intervals.
std::vector<RootInterval> isolate_roots(const UPoly& p, const Rat& lo, const Rat& hi);

// Shrinks the isolating interval by exact bisection until hi - lo <= width.
// Tests the simplest rational in the interval at every step, so rational
// roots of moderate height are identified exactly along the way.
RootInterval refine_root(const UPoly& p, RootInterval iv, const Rat& width);

// The unique rational with the smallest denominator (ties: smallest |num|)
// in [lo, hi].
Rat simplest_rational_in(const Rat& lo, const Rat& hi);

// Cauchy bound: every real root of p lies in [-B, B].
Rat cauchy_root_bound(const UPoly& p);

// All rational roots of p inside (lo, hi), exactly. (Isolation + refinement
// with the simplest-rational probe; refinement depth bounded by `width`.)
std::vector<Rat> rational_roots(const UPoly& p, const Rat& lo, const Rat& hi,
                                const Rat& width = Rat(1, 1000000000000L));

}  // namespace qheun
