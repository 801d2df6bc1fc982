#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "blowcone/space_model.hpp"

namespace blowcone {

/// Nef cone of X^n_{r,0} for the supported (n, r).
///
/// Facets are d >= 0, m_i >= 0 and d >= sum_{i in S} m_i for every S with
/// |S| = min(r, k), k = transversal_cap(n). Generators are H, H - E_i and,
/// once r > k, the balanced classes k*H - sum_{i in T} E_i for every T with
/// k < |T| <= r. The descriptions are built once and cached.
///
/// Throws OutOfRangeError outside the supported range.
const ConeDescription& cone_description(const BlowupSpace& space);

struct NefVerdict {
  bool nef = false;
  /// Indices into cone_description(space).facets() evaluating to 0.
  std::vector<std::size_t> tight;
  /// Indices of facets evaluating negative.
  std::vector<std::size_t> violated;
};

NefVerdict is_nef(const BlowupSpace& space, const DivisorClass& D);

/// Strict positivity on every facet.
bool is_ample(const BlowupSpace& space, const DivisorClass& D);

struct WeightedGenerator {
  DivisorClass generator;
  Rational weight;

  friend bool operator==(const WeightedGenerator&, const WeightedGenerator&) = default;
};

/// D written as a non-negative combination of cone generators. Zero
/// weights are omitted, so the zero class has an empty certificate.
struct DecompositionCertificate {
  std::vector<WeightedGenerator> terms;

  /// Sum of weight * generator over all terms.
  DivisorClass reassemble(std::size_t centers) const;
};

/// Raised by decompose() for a non-nef class; carries a violated facet as
/// the certificate of non-membership.
class NotNefError : public std::domain_error {
 public:
  NotNefError(const std::string& what, Facet facet, Rational value)
      : std::domain_error(what), facet_(std::move(facet)), value_(std::move(value)) {}

  const Facet& facet() const { return facet_; }
  const Rational& value() const { return value_; }

 private:
  Facet facet_;
  Rational value_;
};

/// Decomposes a nef class by repeatedly peeling off the balanced generator.
///
/// While more than k centers remain, take mu = min m_i over the remaining
/// centers (smallest index on ties), put weight mu on k*H - sum E_i over the
/// remaining centers, subtract it, and drop the pivot center. With at most
/// k centers left, the residual is (d - sum m_i) H + sum m_i (H - E_i).
/// The recursion does not consult the facet list: a negative weight at any
/// stage is what signals a non-nef input.
DecompositionCertificate decompose(const BlowupSpace& space, const DivisorClass& D);

}  // namespace blowcone
