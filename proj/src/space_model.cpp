#include "blowcone/space_model.hpp"

#include <sstream>
#include <stdexcept>

#include "blowcone/errors.hpp"

namespace blowcone {

BlowupSpace BlowupSpace::points(int n, int s) {
  if (n < 2) throw std::invalid_argument("ambient dimension must be >= 2, got " + std::to_string(n));
  if (s < 0) throw std::invalid_argument("point count must be >= 0, got " + std::to_string(s));
  return BlowupSpace(n, CenterKind::Points, s);
}

BlowupSpace BlowupSpace::lines(int n, int r) {
  if (n < 3) {
    throw std::invalid_argument("line centers need ambient dimension >= 3, got " + std::to_string(n));
  }
  if (r < 0) throw std::invalid_argument("line count must be >= 0, got " + std::to_string(r));
  return BlowupSpace(n, CenterKind::Lines, r);
}

bool BlowupSpace::line_theorem_supported() const {
  if (kind_ != CenterKind::Lines) return false;
  const auto cap = max_supported_lines(n_);
  return cap && count_ <= *cap;
}

std::string BlowupSpace::name() const {
  std::ostringstream out;
  out << "X^" << n_ << "_{";
  if (kind_ == CenterKind::Lines) {
    out << count_ << ",0}";
  } else {
    out << "0," << count_ << "}";
  }
  return out.str();
}

std::optional<int> max_supported_lines(int n) {
  switch (n) {
    case 3: return 6;
    case 4: return 7;
    case 5: return 5;
    default: return std::nullopt;
  }
}

int transversal_cap(int n) {
  switch (n) {
    case 3: return 4;
    case 4: return 3;
    case 5: return 2;
    default:
      throw OutOfRangeError("no transversal-line count known for P^" + std::to_string(n));
  }
}

// ---------------------------------------------------------------------------
// DivisorClass

DivisorClass DivisorClass::zero(std::size_t centers) {
  return DivisorClass{0, std::vector<Rational>(centers, Rational(0))};
}

DivisorClass DivisorClass::hyperplane(std::size_t centers) {
  auto D = zero(centers);
  D.d = 1;
  return D;
}

DivisorClass DivisorClass::hyperplane_minus(std::size_t centers, std::size_t i) {
  auto D = hyperplane(centers);
  D.m.at(i) = 1;
  return D;
}

DivisorClass DivisorClass::balanced(std::size_t centers, const Rational& c,
                                    const std::vector<std::size_t>& subset) {
  auto D = zero(centers);
  D.d = c;
  for (auto i : subset) D.m.at(i) = 1;
  return D;
}

bool DivisorClass::is_zero() const {
  if (d != 0) return false;
  for (const auto& mi : m) {
    if (mi != 0) return false;
  }
  return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (other.m.size() != m.size()) {
    throw DimensionError("cannot add classes of lengths " + std::to_string(m.size()) + " and " +
                         std::to_string(other.m.size()));
  }
  d += other.d;
  for (std::size_t i = 0; i < m.size(); ++i) m[i] += other.m[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  if (other.m.size() != m.size()) {
    throw DimensionError("cannot subtract classes of lengths " + std::to_string(m.size()) +
                         " and " + std::to_string(other.m.size()));
  }
  d -= other.d;
  for (std::size_t i = 0; i < m.size(); ++i) m[i] -= other.m[i];
  return *this;
}

DivisorClass operator+(DivisorClass lhs, const DivisorClass& rhs) { return lhs += rhs; }
DivisorClass operator-(DivisorClass lhs, const DivisorClass& rhs) { return lhs -= rhs; }

DivisorClass operator*(const Rational& c, DivisorClass D) {
  D.d *= c;
  for (auto& mi : D.m) mi *= c;
  return D;
}

DivisorClass scale(const DivisorClass& D, const Rational& c) { return c * D; }

namespace {

// Appends "+ c*X" / "- c*X" to `out`, omitting unit coefficients.
void append_term(std::ostringstream& out, bool& first, const Rational& coeff,
                 const std::string& symbol) {
  if (coeff == 0) return;
  const bool negative = coeff < 0;
  const Rational magnitude = abs(coeff);
  if (first) {
    if (negative) out << "-";
  } else {
    out << (negative ? " - " : " + ");
  }
  if (magnitude != 1) out << to_string(magnitude);
  out << symbol;
  first = false;
}

}  // namespace

std::string to_string(const DivisorClass& D, CenterKind kind) {
  std::ostringstream out;
  bool first = true;
  append_term(out, first, D.d, "H");
  const char* e = kind == CenterKind::Lines ? "E" : "e";
  for (std::size_t i = 0; i < D.m.size(); ++i) {
    append_term(out, first, -D.m[i], e + std::to_string(i + 1));
  }
  if (first) out << "0";
  return out.str();
}

// ---------------------------------------------------------------------------
// CurveClass

CurveClass CurveClass::line_through_point(std::size_t centers,
                                          const std::vector<std::size_t>& met) {
  CurveClass C{1, std::vector<Rational>(centers, Rational(0)), 1};
  for (auto i : met) C.b.at(i) = 1;
  return C;
}

CurveClass CurveClass::fiber(std::size_t centers, std::size_t i) {
  CurveClass C{0, std::vector<Rational>(centers, Rational(0)), 0};
  C.b.at(i) = -1;
  return C;
}

std::string to_string(const CurveClass& C) {
  std::ostringstream out;
  bool first = true;
  append_term(out, first, C.a, "l");
  for (std::size_t i = 0; i < C.b.size(); ++i) {
    append_term(out, first, -C.b[i], "l" + std::to_string(i + 1));
  }
  if (first) out << "0";
  out << " [mult " << to_string(C.point_multiplicity) << "]";
  return out.str();
}

Rational intersect(const BlowupSpace& space, const DivisorClass& D, const CurveClass& C) {
  const auto k = static_cast<std::size_t>(space.center_count());
  if (D.m.size() != k) {
    throw DimensionError("divisor has " + std::to_string(D.m.size()) + " exceptional coefficients, " +
                         space.name() + " has " + std::to_string(k) + " centers");
  }
  if (C.b.size() != k) {
    throw DimensionError("curve has " + std::to_string(C.b.size()) + " fiber coefficients, " +
                         space.name() + " has " + std::to_string(k) + " centers");
  }
  Rational result = D.d * C.a;
  for (std::size_t i = 0; i < k; ++i) result -= D.m[i] * C.b[i];
  return result;
}

std::vector<CurveClass> curve_catalog(const BlowupSpace& space) {
  const auto k = static_cast<std::size_t>(space.center_count());
  std::size_t cap = 1;
  if (space.has_line_centers()) {
    if (!space.line_theorem_supported()) {
      throw OutOfRangeError(space.name() + " is outside theorem range");
    }
    cap = static_cast<std::size_t>(transversal_cap(space.dimension()));
  }

  std::vector<CurveClass> catalog;
  catalog.push_back(CurveClass::line_through_point(k, {}));
  for (std::size_t i = 0; i < k; ++i) catalog.push_back(CurveClass::fiber(k, i));
  for (std::size_t size = 1; size <= std::min(cap, k); ++size) {
    for (const auto& subset : subsets_of_size(k, size)) {
      catalog.push_back(CurveClass::line_through_point(k, subset));
    }
  }
  return catalog;
}

// ---------------------------------------------------------------------------
// Facets and cones

Rational Facet::evaluate(const DivisorClass& D) const {
  if (D.m.size() != m_coeffs.size()) {
    throw DimensionError("facet has " + std::to_string(m_coeffs.size()) +
                         " exceptional coefficients, divisor has " + std::to_string(D.m.size()));
  }
  Rational value = d_coeff * D.d;
  for (std::size_t i = 0; i < m_coeffs.size(); ++i) value += m_coeffs[i] * D.m[i];
  return value;
}

std::string Facet::describe() const {
  std::ostringstream out;
  bool first = true;
  append_term(out, first, d_coeff, "d");
  for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
    append_term(out, first, m_coeffs[i], "m" + std::to_string(i + 1));
  }
  if (first) out << "0";
  out << " >= 0";
  return out.str();
}

ConeDescription::ConeDescription(std::vector<Facet> facets, std::vector<DivisorClass> generators)
    : facets_(std::move(facets)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    for (const auto& f : facets_) {
      if (f.evaluate(g) < 0) {
        throw std::logic_error("generator " + to_string(g) + " violates facet " + f.describe());
      }
    }
  }
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  if (size > n) return out;
  std::vector<std::size_t> current(size);
  for (std::size_t i = 0; i < size; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    // Advance the rightmost index that still has room.
    std::size_t pos = size;
    while (pos > 0 && current[pos - 1] == n - size + pos - 1) --pos;
    if (pos == 0) break;
    ++current[pos - 1];
    for (std::size_t j = pos; j < size; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace blowcone
