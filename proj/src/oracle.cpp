#include "blowcone/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "blowcone/errors.hpp"
#include "blowcone/nef_cones.hpp"
#include "blowcone/seshadri.hpp"
#include "exact_lp.hpp"

namespace blowcone::oracle {

void VerificationReport::merge(const VerificationReport& other) {
  checks_run += other.checks_run;
  std::vector<Failure> combined;
  combined.reserve(failures.size() + other.failures.size());
  std::merge(failures.begin(), failures.end(), other.failures.begin(), other.failures.end(),
             std::back_inserter(combined));
  failures = std::move(combined);
  std::sort(failures.begin(), failures.end());
}

std::string replay_document(const BlowupSpace& space, const DivisorClass& D) {
  std::ostringstream out;
  out << R"({"n":)" << space.dimension() << R"(,"centers":")"
      << (space.has_line_centers() ? "lines" : "points") << R"(","count":)" << space.center_count()
      << R"(,"d":")" << to_string(D.d) << R"(","m":[)";
  for (std::size_t i = 0; i < D.m.size(); ++i) {
    if (i) out << ",";
    out << '"' << to_string(D.m[i]) << '"';
  }
  out << "]}";
  return out.str();
}

namespace {

bool nonnegative_on(const BlowupSpace& space, const DivisorClass& D,
                    const std::vector<CurveClass>& curves) {
  for (const auto& C : curves) {
    if (intersect(space, D, C) < 0) return false;
  }
  return true;
}

}  // namespace

bool catalog_nef(const BlowupSpace& space, const DivisorClass& D) {
  return nonnegative_on(space, D, curve_catalog(space));
}

Rational catalog_seshadri(const BlowupSpace& space, const DivisorClass& L) {
  std::optional<Rational> best;
  for (const auto& C : curve_catalog(space)) {
    if (C.point_multiplicity <= 0) continue;
    Rational ratio = intersect(space, L, C) / C.point_multiplicity;
    if (!best || ratio < *best) best = std::move(ratio);
  }
  return *best;  // the general line through the point is always present
}

namespace {

std::string verdict_string(bool b) { return b ? "nef" : "not nef"; }

void sort_failures(VerificationReport& report) {
  std::sort(report.failures.begin(), report.failures.end());
}

}  // namespace

VerificationReport verify_nef_three_ways(const BlowupSpace& space,
                                         const std::vector<DivisorClass>& sample,
                                         std::uint64_t seed) {
  VerificationReport report;
  report.seed = seed;
  (void)cone_description(space);  // rejects unsupported spaces up front
  const auto catalog = curve_catalog(space);

  for (const auto& D : sample) {
    ++report.checks_run;
    const bool by_facets = is_nef(space, D).nef;
    const bool by_catalog = nonnegative_on(space, D, catalog);

    bool by_decomposition = false;
    std::string decomposition_detail = "decomposition failed";
    try {
      const auto certificate = decompose(space, D);
      const bool weights_ok = std::all_of(certificate.terms.begin(), certificate.terms.end(),
                                          [](const WeightedGenerator& t) { return t.weight >= 0; });
      const bool reassembles = certificate.reassemble(D.size()) == D;
      by_decomposition = weights_ok && reassembles;
      if (!weights_ok) decomposition_detail = "certificate has a negative weight";
      if (!reassembles) decomposition_detail = "certificate does not reassemble";
    } catch (const NotNefError&) {
      by_decomposition = false;
    }

    if (by_facets == by_decomposition && by_facets == by_catalog) continue;
    const auto input = replay_document(space, D);
    if (by_facets != by_decomposition) {
      report.failures.push_back({input, verdict_string(by_facets),
                                 by_decomposition ? "nef" : decomposition_detail,
                                 "facets/decomposition"});
    }
    if (by_facets != by_catalog) {
      report.failures.push_back(
          {input, verdict_string(by_facets), verdict_string(by_catalog), "facets/catalog"});
    }
  }
  sort_failures(report);
  return report;
}

VerificationReport verify_seshadri_formula(const BlowupSpace& space,
                                           const std::vector<DivisorClass>& sample,
                                           std::uint64_t seed) {
  VerificationReport report;
  report.seed = seed;
  (void)cone_description(space);

  for (const auto& L : sample) {
    if (!is_ample(space, L)) continue;
    ++report.checks_run;
    const auto formula = seshadri_lines(space, L).value;
    const auto catalog = catalog_seshadri(space, L);
    if (formula != catalog) {
      report.failures.push_back(
          {replay_document(space, L), to_string(catalog), to_string(formula), "catalog/formula"});
    }
  }
  sort_failures(report);
  return report;
}

namespace {

// Deterministic instantiation grid over five rational values. Index i in
// [0, 125) is read as three base-5 digits; coordinate j uses digit j mod 3
// shifted by j, so the first three coordinates run through all 125 triples.
std::vector<Rational> grid_point(std::size_t index, std::size_t length) {
  static const std::vector<Rational> values = {Rational(0), Rational(1, 3), Rational(1, 2),
                                               Rational(1), Rational(7, 4)};
  static constexpr std::size_t powers[3] = {1, 5, 25};
  std::vector<Rational> point(length);
  for (std::size_t j = 0; j < length; ++j) {
    point[j] = values[(index / powers[j % 3] + j) % values.size()];
  }
  return point;
}

}  // namespace

VerificationReport verify_decomposition_identities(const BlowupSpace& space) {
  VerificationReport report;
  (void)cone_description(space);
  const auto r = static_cast<std::size_t>(space.center_count());
  const auto k = static_cast<std::size_t>(transversal_cap(space.dimension()));
  const Rational k_rat(static_cast<long>(k));
  constexpr std::size_t instantiations = 125;

  std::vector<std::size_t> all(r);
  for (std::size_t i = 0; i < r; ++i) all[i] = i;

  for (std::size_t idx = 0; idx < instantiations; ++idx) {
    const auto coords = grid_point(idx, r + 2);
    DivisorClass D{coords[0] * 4, std::vector<Rational>(coords.begin() + 2, coords.end())};
    const Rational mu = coords[1];

    // Symbolic identity, checked at an arbitrary multiplier mu.
    DivisorClass rhs = DivisorClass::zero(r);
    if (r > k) {
      DivisorClass rest{D.d - k_rat * mu, {}};
      for (const auto& mi : D.m) rest.m.push_back(mi - mu);
      rhs = mu * DivisorClass::balanced(r, k_rat, all) + rest;
    } else {
      Rational base = D.d;
      for (const auto& mi : D.m) base -= mi;
      rhs = base * DivisorClass::hyperplane(r);
      for (std::size_t i = 0; i < r; ++i) rhs += D.m[i] * DivisorClass::hyperplane_minus(r, i);
    }
    ++report.checks_run;
    if (rhs != D) {
      report.failures.push_back(
          {replay_document(space, D), to_string(D), to_string(rhs), "identity/lhs"});
    }

    if (r <= k) continue;

    // Residual step: raise d to the smallest nef degree, pivot on the
    // minimal m_i, and test the residual on one line fewer.
    Rational required = 0;
    for (const auto& subset : subsets_of_size(r, k)) {
      Rational sum = 0;
      for (auto i : subset) sum += D.m[i];
      if (sum > required) required = sum;
    }
    D.d = required + coords[1];
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < r; ++i) {
      if (D.m[i] < D.m[pivot]) pivot = i;
    }
    const Rational low = D.m[pivot];
    DivisorClass residual{D.d - k_rat * low, {}};
    for (std::size_t i = 0; i < r; ++i) {
      if (i != pivot) residual.m.push_back(D.m[i] - low);
    }
    const auto smaller = BlowupSpace::lines(space.dimension(), static_cast<int>(r - 1));
    ++report.checks_run;
    if (!is_nef(smaller, residual).nef) {
      report.failures.push_back({replay_document(space, D), "residual nef on " + smaller.name(),
                                 to_string(residual) + " not nef", "cone/residual"});
    }
  }
  sort_failures(report);
  return report;
}

std::vector<bool> facet_redundancy(const BlowupSpace& space) {
  const auto& facets = cone_description(space).facets();
  const std::size_t width = static_cast<std::size_t>(space.center_count()) + 1;

  auto row = [](const Facet& f) {
    std::vector<Rational> coeffs{f.d_coeff};
    coeffs.insert(coeffs.end(), f.m_coeffs.begin(), f.m_coeffs.end());
    return coeffs;
  };

  std::vector<bool> redundant(facets.size());
  for (std::size_t j = 0; j < facets.size(); ++j) {
    std::vector<lp::Constraint> system;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      if (i == j) {
        system.push_back({row(facets[i]), lp::Relation::LessEqual, Rational(-1)});
      } else {
        system.push_back({row(facets[i]), lp::Relation::GreaterEqual, Rational(0)});
      }
    }
    const auto witness = lp::find_feasible_point(system, width);
    if (witness) {
      // Double-check the LP's witness independently.
      DivisorClass point{(*witness)[0], std::vector<Rational>(witness->begin() + 1, witness->end())};
      for (std::size_t i = 0; i < facets.size(); ++i) {
        const auto value = facets[i].evaluate(point);
        if ((i == j && value >= 0) || (i != j && value < 0)) {
          throw std::logic_error("LP witness for " + facets[j].describe() + " is invalid");
        }
      }
    }
    redundant[j] = !witness.has_value();
  }
  return redundant;
}

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational factor = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t facet_support_rank(const BlowupSpace& space, std::size_t facet_index) {
  const auto& cone = cone_description(space);
  const auto& facet = cone.facets().at(facet_index);
  std::vector<std::vector<Rational>> tight;
  for (const auto& g : cone.generators()) {
    if (facet.evaluate(g) != 0) continue;
    std::vector<Rational> v{g.d};
    v.insert(v.end(), g.m.begin(), g.m.end());
    tight.push_back(std::move(v));
  }
  return rank(std::move(tight));
}

// ---------------------------------------------------------------------------
// Sampling

DivisorSampler::DivisorSampler(BlowupSpace space, std::uint64_t seed)
    : space_(std::move(space)), rng_(seed) {
  for (auto& C : curve_catalog(space_)) {
    if (C.a == 1 && C.point_multiplicity > 0) through_point_.push_back(std::move(C));
  }
}

Rational DivisorSampler::rational() {
  std::uniform_int_distribution<long> num(0, 64);
  std::uniform_int_distribution<long> den(1, 64);
  Rational q(num(rng_), den(rng_));
  q.canonicalize();
  return q;
}

Rational DivisorSampler::positive_rational() {
  std::uniform_int_distribution<long> num(1, 64);
  std::uniform_int_distribution<long> den(1, 64);
  Rational q(num(rng_), den(rng_));
  q.canonicalize();
  return q;
}

Rational DivisorSampler::required_degree(const std::vector<Rational>& m) const {
  Rational required = 0;
  for (const auto& C : through_point_) {
    Rational load = 0;
    for (std::size_t i = 0; i < m.size(); ++i) load += C.b[i] * m[i];
    if (load > required) required = load;
  }
  return required;
}

std::vector<Rational> DivisorSampler::multiplicities(bool strictly_positive) {
  const auto k = static_cast<std::size_t>(space_.center_count());
  std::vector<Rational> m(k);
  std::uniform_int_distribution<int> coin(0, 4);
  for (auto& mi : m) {
    if (strictly_positive) {
      mi = positive_rational();
    } else {
      // One in five coordinates is zero so the m_i >= 0 facets get hit.
      mi = coin(rng_) == 0 ? Rational(0) : rational();
    }
  }
  return m;
}

DivisorClass DivisorSampler::boundary() {
  auto m = multiplicities(false);
  Rational d = required_degree(m);
  return DivisorClass{std::move(d), std::move(m)};
}

DivisorClass DivisorSampler::interior() {
  auto m = multiplicities(false);
  Rational d = required_degree(m) + positive_rational();
  return DivisorClass{std::move(d), std::move(m)};
}

DivisorClass DivisorSampler::ample() {
  auto m = multiplicities(true);
  Rational d = required_degree(m) + positive_rational();
  return DivisorClass{std::move(d), std::move(m)};
}

DivisorClass DivisorSampler::exterior() {
  auto m = multiplicities(false);
  Rational d = required_degree(m);
  std::uniform_int_distribution<int> coin(0, 1);
  if (m.empty() || coin(rng_) == 0) {
    d -= positive_rational();
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, m.size() - 1);
    m[pick(rng_)] = -positive_rational();
    d = required_degree(m) + rational();
  }
  return DivisorClass{std::move(d), std::move(m)};
}

DivisorClass DivisorSampler::nef() { return nef_counter_++ % 2 == 0 ? boundary() : interior(); }

std::vector<DivisorClass> DivisorSampler::mixed(std::size_t count) {
  std::vector<DivisorClass> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto slot = i % 10;
    if (slot < 3) {
      out.push_back(boundary());
    } else if (slot < 7) {
      out.push_back(interior());
    } else {
      out.push_back(exterior());
    }
  }
  return out;
}

void visit_integer_grid(const BlowupSpace& space, int max,
                        const std::function<void(const DivisorClass&)>& visit) {
  const auto k = static_cast<std::size_t>(space.center_count());
  std::vector<int> digits(k + 1, 0);
  DivisorClass D = DivisorClass::zero(k);
  while (true) {
    visit(D);
    std::size_t pos = 0;
    while (pos <= k && digits[pos] == max) {
      digits[pos] = 0;
      (pos == 0 ? D.d : D.m[pos - 1]) = 0;
      ++pos;
    }
    if (pos > k) break;
    ++digits[pos];
    (pos == 0 ? D.d : D.m[pos - 1]) = digits[pos];
  }
}

}  // namespace blowcone::oracle
