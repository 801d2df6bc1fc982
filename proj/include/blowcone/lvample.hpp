#pragma once

#include <optional>
#include <string>

#include "blowcone/space_model.hpp"

namespace blowcone {

/// "Is L = dH - sum m_i e_i l-very ample on X^n_{0,s}?"
///
/// make() enforces l >= 1, point centers, a matching length, and integral
/// d and m_i; violations throw std::invalid_argument (DimensionError for
/// the length).
class LvaQuery {
 public:
  static LvaQuery make(int l, const BlowupSpace& space, DivisorClass L);

  int l() const { return l_; }
  const BlowupSpace& space() const { return space_; }
  const DivisorClass& divisor() const { return L_; }

  /// Same space and divisor, different l.
  LvaQuery with_l(int l) const { return make(l, space_, L_); }

 private:
  LvaQuery(int l, BlowupSpace space, DivisorClass L)
      : l_(l), space_(std::move(space)), L_(std::move(L)) {}

  int l_;
  BlowupSpace space_;
  DivisorClass L_;
};

enum class BlBranch {
  /// s <= n + 2
  FewPoints,
  /// s >= n + 3 and special_bl_configuration() holds
  SpecialConfiguration,
  /// s >= n + 3 otherwise
  Generic,
};

struct BlThreshold {
  long value;
  BlBranch branch;
};

std::string to_string(BlBranch branch);

/// m_1 = d - l - 1 and m_i = 1 for every i >= 2. This is the reading used
/// for the degenerate case of the b_l threshold.
bool special_bl_configuration(const LvaQuery& q);

/// b_l:
///   s <= n + 2                : -l - 1
///   special configuration     : min(n - 1, s - n - 2) - l - 1
///   otherwise                 : min(n, s - n - 2) - l - 1
BlThreshold compute_bl(const LvaQuery& q);

struct LvaVerdict {
  /// The criterion's hypothesis holds: s <= 2n, or s >= 2n + 1 with
  /// sum m_i - n d <= b_l.
  bool applicable = false;
  /// Meaningful only when applicable.
  bool very_ample = false;
  /// sum m_i - n d
  Rational excess;
  BlThreshold bl;
};

/// Criterion: m_i >= l for all i and d - m_i - m_j >= l for all i != j.
/// With fewer than two points an absent partner counts as multiplicity 0,
/// so s = 1 asks d - m_1 >= l and s = 0 asks d >= l.
LvaVerdict is_l_very_ample(const LvaQuery& q);

enum class TailMode {
  /// Positions 2n+1..s (after sorting m non-increasingly) must equal l.
  Equal,
  /// Positions 2n+1..s must be at most l.
  AtMost,
};

struct LowerBoundResult {
  /// l when a lower-bound theorem applies.
  std::optional<int> bound;
  /// Why no bound was produced (empty when bound is set).
  std::string reason;
};

/// Seshadri constant at any point is >= l for an l-very ample L when
/// s <= 2n, or when 2n < s <= 3n - 1 and the tail multiplicities satisfy
/// `tail_mode`. Otherwise no bound (reason says why).
LowerBoundResult seshadri_lower_bound(const LvaQuery& q, TailMode tail_mode = TailMode::Equal);

}  // namespace blowcone
