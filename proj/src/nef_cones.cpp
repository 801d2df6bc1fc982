#include "blowcone/nef_cones.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "blowcone/errors.hpp"

namespace blowcone {

namespace {

void require_supported(const BlowupSpace& space) {
  if (!space.line_theorem_supported()) {
    throw OutOfRangeError(space.name() + " is outside theorem range");
  }
}

void require_size(const BlowupSpace& space, const DivisorClass& D) {
  const auto k = static_cast<std::size_t>(space.center_count());
  if (D.m.size() != k) {
    throw DimensionError("divisor has " + std::to_string(D.m.size()) + " exceptional coefficients, " +
                         space.name() + " has " + std::to_string(k) + " centers");
  }
}

ConeDescription build_cone(const BlowupSpace& space) {
  const auto r = static_cast<std::size_t>(space.center_count());
  const auto k = static_cast<std::size_t>(transversal_cap(space.dimension()));

  std::vector<Facet> facets;
  facets.push_back(Facet{1, std::vector<Rational>(r, Rational(0))});
  for (std::size_t i = 0; i < r; ++i) {
    Facet f{0, std::vector<Rational>(r, Rational(0))};
    f.m_coeffs[i] = 1;
    facets.push_back(std::move(f));
  }
  if (r > 0) {
    for (const auto& subset : subsets_of_size(r, std::min(r, k))) {
      Facet f{1, std::vector<Rational>(r, Rational(0))};
      for (auto i : subset) f.m_coeffs[i] = -1;
      facets.push_back(std::move(f));
    }
  }

  std::vector<DivisorClass> generators;
  generators.push_back(DivisorClass::hyperplane(r));
  for (std::size_t i = 0; i < r; ++i) generators.push_back(DivisorClass::hyperplane_minus(r, i));
  for (std::size_t size = k + 1; size <= r; ++size) {
    for (const auto& subset : subsets_of_size(r, size)) {
      generators.push_back(DivisorClass::balanced(r, Rational(static_cast<long>(k)), subset));
    }
  }
  return ConeDescription(std::move(facets), std::move(generators));
}

}  // namespace

const ConeDescription& cone_description(const BlowupSpace& space) {
  require_supported(space);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, ConeDescription> cache;

  const std::lock_guard lock(mutex);
  const auto key = std::make_pair(space.dimension(), space.center_count());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_cone(space)).first;
  // std::map nodes are stable, so the reference outlives the lock.
  return it->second;
}

NefVerdict is_nef(const BlowupSpace& space, const DivisorClass& D) {
  const auto& cone = cone_description(space);
  require_size(space, D);
  NefVerdict verdict;
  for (std::size_t i = 0; i < cone.facets().size(); ++i) {
    const auto value = cone.facets()[i].evaluate(D);
    if (value == 0) {
      verdict.tight.push_back(i);
    } else if (value < 0) {
      verdict.violated.push_back(i);
    }
  }
  verdict.nef = verdict.violated.empty();
  return verdict;
}

bool is_ample(const BlowupSpace& space, const DivisorClass& D) {
  const auto& cone = cone_description(space);
  require_size(space, D);
  for (const auto& f : cone.facets()) {
    if (f.evaluate(D) <= 0) return false;
  }
  return true;
}

DivisorClass DecompositionCertificate::reassemble(std::size_t centers) const {
  auto sum = DivisorClass::zero(centers);
  for (const auto& term : terms) sum += term.weight * term.generator;
  return sum;
}

DecompositionCertificate decompose(const BlowupSpace& space, const DivisorClass& D) {
  require_supported(space);
  require_size(space, D);
  const auto r = static_cast<std::size_t>(space.center_count());
  const auto k = static_cast<std::size_t>(transversal_cap(space.dimension()));

  DecompositionCertificate certificate;
  bool failed = false;
  auto emit = [&](DivisorClass generator, const Rational& weight) {
    if (weight < 0) failed = true;
    if (weight != 0) certificate.terms.push_back({std::move(generator), weight});
  };

  std::vector<std::size_t> active(r);
  std::iota(active.begin(), active.end(), std::size_t{0});
  DivisorClass residual = D;

  while (active.size() > k) {
    std::size_t pivot = 0;
    for (std::size_t j = 1; j < active.size(); ++j) {
      if (residual.m[active[j]] < residual.m[active[pivot]]) pivot = j;
    }
    const Rational mu = residual.m[active[pivot]];
    auto generator = DivisorClass::balanced(r, Rational(static_cast<long>(k)), active);
    residual -= mu * generator;
    emit(std::move(generator), mu);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot));
  }

  Rational base = residual.d;
  for (auto i : active) base -= residual.m[i];
  emit(DivisorClass::hyperplane(r), base);
  for (auto i : active) emit(DivisorClass::hyperplane_minus(r, i), residual.m[i]);

  if (failed) {
    const auto verdict = is_nef(space, D);
    if (verdict.violated.empty()) {
      throw std::logic_error("decomposition of " + to_string(D) +
                             " produced a negative weight but no facet is violated");
    }
    const auto& facet = cone_description(space).facets()[verdict.violated.front()];
    const auto value = facet.evaluate(D);
    throw NotNefError(to_string(D) + " is not nef on " + space.name() + ": " + facet.describe() +
                          " evaluates to " + to_string(value),
                      facet, value);
  }
  return certificate;
}

}  // namespace blowcone
