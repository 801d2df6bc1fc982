#include "exact_lp.hpp"

#include <stdexcept>

namespace blowcone::lp {

std::optional<std::vector<Rational>> find_feasible_point(const std::vector<Constraint>& constraints,
                                                         std::size_t variables) {
  const std::size_t rows = constraints.size();
  if (rows == 0) return std::vector<Rational>(variables, Rational(0));

  // Column layout: [u_0..u_{v-1} | w_0..w_{v-1} | slacks | artificials | rhs]
  // with x = u - w.
  std::size_t slack_count = 0;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != variables) throw std::invalid_argument("constraint width mismatch");
    if (c.relation != Relation::Equal) ++slack_count;
  }
  const std::size_t first_slack = 2 * variables;
  const std::size_t first_artificial = first_slack + slack_count;
  const std::size_t rhs_col = first_artificial + rows;

  std::vector<std::vector<Rational>> T(rows, std::vector<Rational>(rhs_col + 1, Rational(0)));
  std::vector<std::size_t> basis(rows);
  std::size_t slack = first_slack;
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& c = constraints[i];
    auto& row = T[i];
    for (std::size_t j = 0; j < variables; ++j) {
      row[j] = c.coeffs[j];
      row[variables + j] = -c.coeffs[j];
    }
    if (c.relation == Relation::GreaterEqual) row[slack++] = -1;
    if (c.relation == Relation::LessEqual) row[slack++] = 1;
    row[rhs_col] = c.rhs;
    if (c.rhs < 0) {
      for (auto& v : row) v = -v;
    }
    row[first_artificial + i] = 1;
    basis[i] = first_artificial + i;
  }

  // Reduced costs for minimizing the sum of artificials.
  std::vector<Rational> reduced(rhs_col + 1, Rational(0));
  for (std::size_t j = 0; j < first_artificial; ++j) {
    for (std::size_t i = 0; i < rows; ++i) reduced[j] -= T[i][j];
  }
  for (std::size_t i = 0; i < rows; ++i) reduced[rhs_col] -= T[i][rhs_col];

  while (true) {
    std::size_t entering = rhs_col;
    for (std::size_t j = 0; j < rhs_col; ++j) {
      if (reduced[j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering == rhs_col) break;

    std::size_t leaving = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (T[i][entering] <= 0) continue;
      Rational ratio = T[i][rhs_col] / T[i][entering];
      if (leaving == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leaving == rows) throw std::logic_error("phase-one objective unbounded");

    const Rational pivot = T[leaving][entering];
    for (auto& v : T[leaving]) v /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leaving || T[i][entering] == 0) continue;
      const Rational factor = T[i][entering];
      for (std::size_t j = 0; j <= rhs_col; ++j) T[i][j] -= factor * T[leaving][j];
    }
    const Rational factor = reduced[entering];
    for (std::size_t j = 0; j <= rhs_col; ++j) reduced[j] -= factor * T[leaving][j];
    basis[leaving] = entering;
  }

  // reduced[rhs] holds minus the objective value.
  if (reduced[rhs_col] != 0) return std::nullopt;

  std::vector<Rational> x(variables, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) {
    const auto col = basis[i];
    if (col < variables) {
      x[col] += T[i][rhs_col];
    } else if (col < 2 * variables) {
      x[col - variables] -= T[i][rhs_col];
    }
  }
  return x;
}

}  // namespace blowcone::lp
