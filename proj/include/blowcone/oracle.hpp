#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "blowcone/space_model.hpp"

namespace blowcone::oracle {

struct Failure {
  /// Replayable problem document: {"n":..,"centers":..,"count":..,"d":..,"m":[..]}
  std::string input;
  std::string expected;
  std::string got;
  /// Which two routes disagreed, e.g. "facets/catalog".
  std::string routes;

  friend bool operator==(const Failure&, const Failure&) = default;
  friend auto operator<=>(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  std::size_t checks_run = 0;
  std::vector<Failure> failures;
  std::uint64_t seed = 0;

  bool passed() const { return failures.empty(); }

  /// Adds counts and failures. The failure list is kept sorted, so merging
  /// is associative and commutative.
  void merge(const VerificationReport& other);
};

/// The problem document used to replay a failing input.
std::string replay_document(const BlowupSpace& space, const DivisorClass& D);

/// Catalog route: D . C >= 0 for every curve in curve_catalog(space).
bool catalog_nef(const BlowupSpace& space, const DivisorClass& D);

/// Catalog route for the Seshadri constant: minimum of (L . C) / mult over
/// catalog curves through the marked point (point_multiplicity > 0).
Rational catalog_seshadri(const BlowupSpace& space, const DivisorClass& L);

/// Compares, for every sample, the facet verdict, whether decompose()
/// succeeds (with exact reassembly and non-negative weights), and the
/// catalog verdict.
VerificationReport verify_nef_three_ways(const BlowupSpace& space,
                                         const std::vector<DivisorClass>& sample,
                                         std::uint64_t seed = 0);

/// seshadri_lines(L).value == catalog_seshadri(L) for every ample sample
/// element. Non-ample elements are skipped.
VerificationReport verify_seshadri_formula(const BlowupSpace& space,
                                           const std::vector<DivisorClass>& sample,
                                           std::uint64_t seed = 0);

/// Checks the peeling identity
///   D = mu (k H - sum E_i) + (d - k mu) H - sum (m_i - mu) E_i
/// (or D = (d - sum m_i) H + sum m_i (H - E_i) once r <= k) on 125 fixed
/// rational instantiations, and that the residual after pivoting on the
/// minimal m_i of a nef class is nef on the space with one line fewer.
VerificationReport verify_decomposition_identities(const BlowupSpace& space);

/// For each facet of cone_description(space): true when it is implied by
/// the remaining facets. Decided by an exact feasibility LP looking for a
/// point violating only that facet.
std::vector<bool> facet_redundancy(const BlowupSpace& space);

/// Rank of the generators lying on the facet. A facet of a full-dimensional
/// cone in k + 1 coordinates has rank k.
std::size_t facet_support_rank(const BlowupSpace& space, std::size_t facet_index);

/// Rank of a list of exact vectors.
std::size_t rank(std::vector<std::vector<Rational>> rows);

/// Deterministic random divisor generator with numerators in [0, 64] and
/// denominators in [1, 64].
class DivisorSampler {
 public:
  DivisorSampler(BlowupSpace space, std::uint64_t seed);

  Rational rational();
  Rational positive_rational();

  /// Smallest d making (d; m) nef by the catalog, for m >= 0.
  Rational required_degree(const std::vector<Rational>& m) const;

  /// Nef with at least one tight catalog curve.
  DivisorClass boundary();
  /// Nef with d strictly above the required degree (m_i may be 0).
  DivisorClass interior();
  /// Ample: all m_i > 0, d above the required degree.
  DivisorClass ample();
  /// Not nef: d below the required degree, or one m_i negative.
  DivisorClass exterior();
  /// boundary() or interior(), alternating in a 1:1 ratio.
  DivisorClass nef();

  /// `count` divisors: 30% boundary, 40% interior, 30% exterior.
  std::vector<DivisorClass> mixed(std::size_t count);

 private:
  std::vector<Rational> multiplicities(bool strictly_positive);

  BlowupSpace space_;
  std::mt19937_64 rng_;
  std::vector<CurveClass> through_point_;
  std::size_t nef_counter_ = 0;
};

/// Calls `visit` on every integer divisor with d and each m_i in [0, max].
void visit_integer_grid(const BlowupSpace& space, int max,
                        const std::function<void(const DivisorClass&)>& visit);

}  // namespace blowcone::oracle
