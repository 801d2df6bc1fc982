#pragma once

#include <optional>
#include <vector>

#include "blowcone/rational.hpp"

namespace blowcone::lp {

enum class Relation { GreaterEqual, LessEqual, Equal };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation;
  Rational rhs;
};

/// Finds some x (free variables) satisfying every constraint, or nullopt
/// if the system is infeasible. Exact phase-one simplex with Bland's rule.
std::optional<std::vector<Rational>> find_feasible_point(const std::vector<Constraint>& constraints,
                                                         std::size_t variables);

}  // namespace blowcone::lp
