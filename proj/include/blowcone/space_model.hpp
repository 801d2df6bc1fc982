#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "blowcone/rational.hpp"

namespace blowcone {

enum class CenterKind { Points, Lines };

/// Projective n-space blown up at s general points or r general lines.
///
/// Construction only enforces n >= 2, a non-negative count, and n >= 3
/// for line centers. Whether a theorem covers the space is queried via
/// line_theorem_supported(); operations that need it reject the space.
class BlowupSpace {
 public:
  static BlowupSpace points(int n, int s);
  static BlowupSpace lines(int n, int r);

  int dimension() const { return n_; }
  CenterKind kind() const { return kind_; }
  int center_count() const { return count_; }
  bool has_line_centers() const { return kind_ == CenterKind::Lines; }
  bool has_point_centers() const { return kind_ == CenterKind::Points; }

  /// True when the nef cone and Seshadri formula are known for this space:
  /// line centers with (n, r) in {(3, 0..6), (4, 0..7), (5, 0..5)}.
  bool line_theorem_supported() const;

  /// "X^3_{5,0}" for five lines in P^3, "X^3_{0,2}" for two points.
  std::string name() const;

  friend bool operator==(const BlowupSpace&, const BlowupSpace&) = default;

 private:
  BlowupSpace(int n, CenterKind kind, int count) : n_(n), kind_(kind), count_(count) {}

  int n_;
  CenterKind kind_;
  int count_;
};

/// Largest r with a nef-cone description for r general lines in P^n.
std::optional<int> max_supported_lines(int n);

/// Maximum number of general lines in P^n that a single line can meet
/// (4 in P^3, 3 in P^4, 2 in P^5). Throws OutOfRangeError for other n.
int transversal_cap(int n);

/// d*H - sum m_i * E_i (or e_i for point centers).
struct DivisorClass {
  Rational d;
  std::vector<Rational> m;

  static DivisorClass zero(std::size_t centers);
  static DivisorClass hyperplane(std::size_t centers);
  /// H - E_i (0-based index).
  static DivisorClass hyperplane_minus(std::size_t centers, std::size_t i);
  /// c*H - sum over `subset` of E_i.
  static DivisorClass balanced(std::size_t centers, const Rational& c,
                               const std::vector<std::size_t>& subset);

  std::size_t size() const { return m.size(); }
  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(DivisorClass lhs, const DivisorClass& rhs);
DivisorClass operator-(DivisorClass lhs, const DivisorClass& rhs);
DivisorClass operator*(const Rational& c, DivisorClass D);

/// Componentwise multiplication by c.
DivisorClass scale(const DivisorClass& D, const Rational& c);

/// Human-readable form, e.g. "4H - E1 - E2 - E3 - E4 - E5".
std::string to_string(const DivisorClass& D, CenterKind kind = CenterKind::Lines);

/// a*l - sum b_i * l_i, where l is the pullback of a general line and
/// l_i is a line in the i-th exceptional divisor. A fiber line l_i is
/// therefore a = 0, b_i = -1. point_multiplicity is the multiplicity at
/// the marked general point.
struct CurveClass {
  Rational a;
  std::vector<Rational> b;
  Rational point_multiplicity;

  /// Strict transform of a line through the marked point meeting the
  /// centers listed in `met`.
  static CurveClass line_through_point(std::size_t centers,
                                       const std::vector<std::size_t>& met);
  static CurveClass fiber(std::size_t centers, std::size_t i);

  std::size_t size() const { return b.size(); }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

std::string to_string(const CurveClass& C);

/// D . C = d*a - sum m_i * b_i. Throws DimensionError when either vector
/// length differs from the center count.
Rational intersect(const BlowupSpace& space, const DivisorClass& D, const CurveClass& C);

/// Finite set of curves that the nef and Seshadri statements are tested
/// against.
///
/// Lines: the general line l (through the marked point), each fiber l_i,
/// and every l - sum_{i in S} l_i with 1 <= |S| <= transversal_cap(n).
/// Points: l, each fiber, and l - l_i for every single center.
/// Throws OutOfRangeError for line spaces outside the supported range.
std::vector<CurveClass> curve_catalog(const BlowupSpace& space);

/// A linear form c_d * d + sum c_i * m_i, read as the inequality form >= 0.
struct Facet {
  Rational d_coeff;
  std::vector<Rational> m_coeffs;

  Rational evaluate(const DivisorClass& D) const;
  /// "d - m1 - m3 >= 0"
  std::string describe() const;

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Facet inequalities together with spanning generators for a cone in
/// the (d, m_1..m_k) coordinates.
class ConeDescription {
 public:
  /// Throws std::logic_error if some generator violates some facet.
  ConeDescription(std::vector<Facet> facets, std::vector<DivisorClass> generators);

  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<DivisorClass>& generators() const { return generators_; }

 private:
  std::vector<Facet> facets_;
  std::vector<DivisorClass> generators_;
};

/// All subsets of {0..n-1} of the given size, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t size);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace blowcone
