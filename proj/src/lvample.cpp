#include "blowcone/lvample.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "blowcone/errors.hpp"

namespace blowcone {

LvaQuery LvaQuery::make(int l, const BlowupSpace& space, DivisorClass L) {
  if (l < 1) throw std::invalid_argument("l must be >= 1, got " + std::to_string(l));
  if (!space.has_point_centers()) {
    throw std::invalid_argument("l-very ampleness is only handled for point blow-ups, got " +
                                space.name());
  }
  if (L.m.size() != static_cast<std::size_t>(space.center_count())) {
    throw DimensionError("divisor has " + std::to_string(L.m.size()) + " exceptional coefficients, " +
                         space.name() + " has " + std::to_string(space.center_count()) + " centers");
  }
  if (!is_integer(L.d)) throw std::invalid_argument("d must be an integer, got " + to_string(L.d));
  for (const auto& mi : L.m) {
    if (!is_integer(mi)) throw std::invalid_argument("m_i must be integers, got " + to_string(mi));
  }
  return LvaQuery(l, space, std::move(L));
}

std::string to_string(BlBranch branch) {
  switch (branch) {
    case BlBranch::FewPoints: return "few-points";
    case BlBranch::SpecialConfiguration: return "special-configuration";
    case BlBranch::Generic: return "generic";
  }
  return "unknown";
}

bool special_bl_configuration(const LvaQuery& q) {
  const auto& L = q.divisor();
  if (L.m.empty()) return false;
  if (L.m[0] != L.d - q.l() - 1) return false;
  return std::all_of(L.m.begin() + 1, L.m.end(), [](const Rational& mi) { return mi == 1; });
}

BlThreshold compute_bl(const LvaQuery& q) {
  const long n = q.space().dimension();
  const long s = q.space().center_count();
  const long l = q.l();
  if (s <= n + 2) return {-l - 1, BlBranch::FewPoints};
  if (special_bl_configuration(q)) return {std::min(n - 1, s - n - 2) - l - 1, BlBranch::SpecialConfiguration};
  return {std::min(n, s - n - 2) - l - 1, BlBranch::Generic};
}

LvaVerdict is_l_very_ample(const LvaQuery& q) {
  const auto& L = q.divisor();
  const int n = q.space().dimension();
  const int s = q.space().center_count();
  const Rational l = q.l();

  LvaVerdict verdict;
  verdict.bl = compute_bl(q);
  verdict.excess = -n * L.d;
  for (const auto& mi : L.m) verdict.excess += mi;
  verdict.applicable = s <= 2 * n || verdict.excess <= verdict.bl.value;
  if (!verdict.applicable) return verdict;

  bool ok = std::all_of(L.m.begin(), L.m.end(), [&](const Rational& mi) { return mi >= l; });
  // Only the two largest multiplicities matter for the pairwise condition.
  std::vector<Rational> sorted = L.m;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  sorted.resize(std::max<std::size_t>(sorted.size(), 2), Rational(0));
  ok = ok && L.d - sorted[0] - sorted[1] >= l;
  verdict.very_ample = ok;
  return verdict;
}

LowerBoundResult seshadri_lower_bound(const LvaQuery& q, TailMode tail_mode) {
  const int n = q.space().dimension();
  const int s = q.space().center_count();

  const auto verdict = is_l_very_ample(q);
  if (!verdict.applicable) return {std::nullopt, "l-very ampleness criterion not applicable"};
  if (!verdict.very_ample) return {std::nullopt, "L is not l-very ample"};
  if (s <= 2 * n) return {q.l(), ""};
  if (s > 3 * n - 1) return {std::nullopt, "theorem inapplicable: s > 3n - 1"};

  std::vector<Rational> sorted = q.divisor().m;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const Rational l = q.l();
  for (std::size_t i = static_cast<std::size_t>(2 * n); i < sorted.size(); ++i) {
    const bool ok = tail_mode == TailMode::Equal ? sorted[i] == l : sorted[i] <= l;
    if (!ok) {
      return {std::nullopt, std::string("theorem inapplicable: tail multiplicity ") +
                                to_string(sorted[i]) +
                                (tail_mode == TailMode::Equal ? " != l" : " > l")};
    }
  }
  return {q.l(), ""};
}

}  // namespace blowcone
