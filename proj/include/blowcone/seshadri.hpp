#pragma once

#include <vector>

#include "blowcone/space_model.hpp"

namespace blowcone {

struct SeshadriResult {
  Rational value;
  /// Curves through the marked point attaining `value`.
  std::vector<CurveClass> witnesses;
  bool ample = false;
};

struct SeshadriOptions {
  /// Evaluate the closed form even when L is not ample. The result is
  /// then flagged ample = false and may be 0 or negative.
  bool allow_non_ample = false;
};

/// Seshadri constant at a general point of X^n_{r,0}:
///
///   min over S with |S| = min(r, k) of d - sum_{i in S} m_i, capped by d,
///
/// where k = transversal_cap(n). Throws NotAmpleError for non-ample L unless
/// options.allow_non_ample, OutOfRangeError outside the supported range.
SeshadriResult seshadri_lines(const BlowupSpace& space, const DivisorClass& L,
                              SeshadriOptions options = {});

/// d - max_i m_i (capped by d) on X^n_{0,s}: the ratio along the line
/// joining the marked point to a blown-up point. An upper bound for the
/// Seshadri constant at a general point.
Rational seshadri_upper_bound_points(const BlowupSpace& space, const DivisorClass& L);

struct NthRootBound {
  /// L^n = d^n - sum m_i^n
  Rational radicand;
  /// radicand^(1/n) in double precision; NaN when the radicand is negative.
  double approx;
  int n;
};

/// Volume bound eps^n <= L^n for point blow-ups. Line blow-ups throw
/// OutOfRangeError (self-intersection out of scope).
NthRootBound nth_root_bound(const BlowupSpace& space, const DivisorClass& L);

}  // namespace blowcone
