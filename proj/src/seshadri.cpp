#include "blowcone/seshadri.hpp"

#include <cmath>
#include <limits>

#include "blowcone/errors.hpp"
#include "blowcone/nef_cones.hpp"

namespace blowcone {

namespace {

void require_size(const BlowupSpace& space, const DivisorClass& L) {
  const auto k = static_cast<std::size_t>(space.center_count());
  if (L.m.size() != k) {
    throw DimensionError("divisor has " + std::to_string(L.m.size()) + " exceptional coefficients, " +
                         space.name() + " has " + std::to_string(k) + " centers");
  }
}

}  // namespace

SeshadriResult seshadri_lines(const BlowupSpace& space, const DivisorClass& L,
                              SeshadriOptions options) {
  if (!space.line_theorem_supported()) {
    throw OutOfRangeError(space.name() + " is outside theorem range");
  }
  require_size(space, L);

  SeshadriResult result;
  result.ample = is_ample(space, L);
  if (!result.ample && !options.allow_non_ample) {
    throw NotAmpleError("formula stated for ample L; " + to_string(L) + " is not ample on " +
                        space.name());
  }

  const auto r = static_cast<std::size_t>(space.center_count());
  const auto k = static_cast<std::size_t>(transversal_cap(space.dimension()));

  struct Candidate {
    Rational value;
    std::vector<std::size_t> met;
  };
  std::vector<Candidate> candidates;
  candidates.push_back({L.d, {}});
  if (r > 0) {
    for (auto& subset : subsets_of_size(r, std::min(r, k))) {
      Rational value = L.d;
      for (auto i : subset) value -= L.m[i];
      candidates.push_back({std::move(value), std::move(subset)});
    }
  }

  result.value = candidates.front().value;
  for (const auto& c : candidates) {
    if (c.value < result.value) result.value = c.value;
  }
  for (const auto& c : candidates) {
    if (c.value == result.value) result.witnesses.push_back(CurveClass::line_through_point(r, c.met));
  }
  return result;
}

Rational seshadri_upper_bound_points(const BlowupSpace& space, const DivisorClass& L) {
  if (!space.has_point_centers()) {
    throw OutOfRangeError("point-line upper bound needs point centers, got " + space.name());
  }
  require_size(space, L);
  Rational bound = L.d;
  for (const auto& mi : L.m) {
    if (L.d - mi < bound) bound = L.d - mi;
  }
  return bound;
}

NthRootBound nth_root_bound(const BlowupSpace& space, const DivisorClass& L) {
  if (!space.has_point_centers()) {
    throw OutOfRangeError("self-intersection out of scope for line blow-up " + space.name());
  }
  require_size(space, L);
  const int n = space.dimension();

  auto power = [n](const Rational& x) {
    Rational p = 1;
    for (int i = 0; i < n; ++i) p *= x;
    return p;
  };
  Rational radicand = power(L.d);
  for (const auto& mi : L.m) radicand -= power(mi);

  const double approx = radicand < 0 ? std::numeric_limits<double>::quiet_NaN()
                                     : std::pow(radicand.get_d(), 1.0 / n);
  return NthRootBound{std::move(radicand), approx, n};
}

}  // namespace blowcone
