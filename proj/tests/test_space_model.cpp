#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "blowcone/errors.hpp"
#include "blowcone/space_model.hpp"

using namespace blowcone;

namespace {

DivisorClass divisor(long d, std::vector<long> m) {
  DivisorClass D{d, {}};
  for (auto v : m) D.m.emplace_back(v);
  return D;
}

}  // namespace

TEST(BlowupSpace, ConstructionChecks) {
  EXPECT_THROW(BlowupSpace::points(1, 0), std::invalid_argument);
  EXPECT_THROW(BlowupSpace::lines(2, 1), std::invalid_argument);
  EXPECT_THROW(BlowupSpace::lines(3, -1), std::invalid_argument);
  EXPECT_NO_THROW(BlowupSpace::lines(6, 10));  // generic construction is allowed
  EXPECT_FALSE(BlowupSpace::lines(6, 10).line_theorem_supported());
  EXPECT_FALSE(BlowupSpace::lines(3, 7).line_theorem_supported());
  EXPECT_TRUE(BlowupSpace::lines(4, 7).line_theorem_supported());
  EXPECT_FALSE(BlowupSpace::points(3, 2).line_theorem_supported());
  EXPECT_EQ(BlowupSpace::lines(3, 5).name(), "X^3_{5,0}");
  EXPECT_EQ(BlowupSpace::points(4, 2).name(), "X^4_{0,2}");
}

TEST(Intersect, StrictTransformOfLineMeetingOneCenter) {
  const auto X = BlowupSpace::lines(3, 1);
  EXPECT_EQ(intersect(X, divisor(3, {1}), CurveClass::line_through_point(1, {0})), 2);
}

TEST(Intersect, HyperplaneAgainstGeneralLine) {
  for (int r = 0; r <= 6; ++r) {
    const auto X = BlowupSpace::lines(3, r);
    EXPECT_EQ(intersect(X, DivisorClass::hyperplane(r), CurveClass::line_through_point(r, {})), 1);
  }
}

TEST(Intersect, AnticanonicalAgainstTransversal) {
  const auto X = BlowupSpace::lines(3, 5);
  const auto K = DivisorClass::balanced(5, 4, {0, 1, 2, 3, 4});
  EXPECT_EQ(intersect(X, K, CurveClass::line_through_point(5, {1, 2, 3, 4})), 0);
}

TEST(Intersect, FiberPairsWithExceptionalCoefficient) {
  const auto X = BlowupSpace::lines(3, 2);
  EXPECT_EQ(intersect(X, divisor(3, {2, 5}), CurveClass::fiber(2, 1)), 5);
}

TEST(Intersect, DimensionMismatchNamesTheLength) {
  const auto X = BlowupSpace::lines(3, 2);
  try {
    intersect(X, divisor(1, {1, 1, 1}), CurveClass::line_through_point(2, {}));
    FAIL() << "expected DimensionError";
  } catch (const DimensionError& e) {
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
  }
  EXPECT_THROW(intersect(X, divisor(1, {1, 1}), CurveClass::line_through_point(3, {})),
               DimensionError);
}

TEST(Intersect, Bilinearity) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
  auto q = [&] {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    return x;
  };
  const auto X = BlowupSpace::lines(4, 5);
  for (int trial = 0; trial < 200; ++trial) {
    DivisorClass A{q(), {q(), q(), q(), q(), q()}}, B{q(), {q(), q(), q(), q(), q()}};
    CurveClass C{q(), {q(), q(), q(), q(), q()}, 1};
    Rational c = q();
    EXPECT_EQ(intersect(X, A + B, C), intersect(X, A, C) + intersect(X, B, C));
    EXPECT_EQ(intersect(X, c * A, C), c * intersect(X, A, C));
  }
}

TEST(CurveCatalog, FourLinesInP3HaveTransversal) {
  const auto catalog = curve_catalog(BlowupSpace::lines(3, 4));
  const auto transversal = CurveClass::line_through_point(4, {0, 1, 2, 3});
  EXPECT_NE(std::find(catalog.begin(), catalog.end(), transversal), catalog.end());
}

TEST(CurveCatalog, NothingBlownUpIsJustTheLine) {
  for (int n : {3, 4, 5}) {
    const auto catalog = curve_catalog(BlowupSpace::lines(n, 0));
    ASSERT_EQ(catalog.size(), 1u);
    EXPECT_EQ(catalog[0], CurveClass::line_through_point(0, {}));
  }
  const auto points = curve_catalog(BlowupSpace::points(2, 0));
  ASSERT_EQ(points.size(), 1u);
}

TEST(CurveCatalog, P5LinesMeetAtMostTwoCenters) {
  for (const auto& C : curve_catalog(BlowupSpace::lines(5, 3))) {
    const auto ones = std::count(C.b.begin(), C.b.end(), Rational(1));
    EXPECT_LE(ones, 2);
  }
}

TEST(CurveCatalog, SizeAndShape) {
  for (auto [n, max_r] : {std::pair{3, 6}, std::pair{4, 7}, std::pair{5, 5}}) {
    const auto k = static_cast<std::size_t>(transversal_cap(n));
    for (int r = 0; r <= max_r; ++r) {
      const auto catalog = curve_catalog(BlowupSpace::lines(n, r));
      // l counted once, r fibers, one line per nonempty subset of size <= k.
      std::size_t expected = 1 + static_cast<std::size_t>(r);
      for (std::size_t j = 1; j <= k; ++j) expected += binomial(static_cast<std::size_t>(r), j);
      EXPECT_EQ(catalog.size(), expected) << n << "," << r;
      for (const auto& C : catalog) {
        EXPECT_TRUE(C.a == 0 || C.a == 1);
        if (C.a == 1) {
          EXPECT_EQ(C.point_multiplicity, 1);
          EXPECT_EQ(intersect(BlowupSpace::lines(n, r), DivisorClass::hyperplane(r), C), 1);
        } else {
          EXPECT_EQ(C.point_multiplicity, 0);  // fibers miss the general point
        }
      }
    }
  }
}

TEST(CurveCatalog, PermutationSymmetric) {
  const auto X = BlowupSpace::lines(4, 6);
  const auto catalog = curve_catalog(X);
  std::vector<std::size_t> perm = {3, 0, 5, 1, 4, 2};
  for (const auto& C : catalog) {
    CurveClass P = C;
    for (std::size_t i = 0; i < perm.size(); ++i) P.b[perm[i]] = C.b[i];
    EXPECT_NE(std::find(catalog.begin(), catalog.end(), P), catalog.end());
  }
}

TEST(CurveCatalog, PointCenters) {
  const auto catalog = curve_catalog(BlowupSpace::points(3, 4));
  EXPECT_EQ(catalog.size(), 1u + 4u + 4u);
  for (const auto& C : catalog) {
    EXPECT_LE(std::count(C.b.begin(), C.b.end(), Rational(1)), 1);
  }
}

TEST(CurveCatalog, OutsideTheoremRange) {
  EXPECT_THROW(curve_catalog(BlowupSpace::lines(3, 7)), OutOfRangeError);
  EXPECT_THROW(curve_catalog(BlowupSpace::lines(6, 1)), OutOfRangeError);
}

TEST(Scale, Componentwise) {
  EXPECT_TRUE(scale(DivisorClass::hyperplane(3), 0).is_zero());
  const auto K = DivisorClass::balanced(5, 4, {0, 1, 2, 3, 4});
  const auto half = scale(K, Rational(1, 2));
  EXPECT_EQ(half.d, 2);
  for (const auto& mi : half.m) EXPECT_EQ(mi, Rational(1, 2));
  EXPECT_EQ(scale(divisor(3, {1}), 3), divisor(9, {3}));
}

TEST(DivisorClass, Labels) {
  EXPECT_EQ(to_string(DivisorClass::balanced(5, 4, {0, 1, 2, 3, 4})), "4H - E1 - E2 - E3 - E4 - E5");
  EXPECT_EQ(to_string(DivisorClass::zero(2)), "0");
  EXPECT_EQ(to_string(DivisorClass{Rational(1, 2), {0, Rational(-3)}}, CenterKind::Points),
            "1/2H + 3e2");
}

TEST(Subsets, CountsMatchBinomials) {
  for (std::size_t n = 0; n <= 7; ++n) {
    for (std::size_t k = 0; k <= n + 1; ++k) {
      EXPECT_EQ(subsets_of_size(n, k).size(), binomial(n, k));
    }
  }
  EXPECT_EQ(subsets_of_size(4, 2).front(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(subsets_of_size(4, 2).back(), (std::vector<std::size_t>{2, 3}));
}
