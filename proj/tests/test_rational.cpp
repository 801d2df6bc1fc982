#include <gtest/gtest.h>

#include "blowcone/errors.hpp"
#include "blowcone/rational.hpp"

using namespace blowcone;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7/4"), Rational(-7, 4));
  EXPECT_EQ(parse_rational("0"), Rational(0));
}

TEST(Rational, CanonicalizesOnParse) {
  EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
  EXPECT_EQ(to_string(parse_rational("6/3")), "2");
  EXPECT_EQ(to_string(parse_rational("-0")), "0");
  EXPECT_EQ(to_string(parse_rational("007")), "7");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "1e3", "+1", "1/-2", " 1", "a/b", "1//2"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
}

TEST(Rational, TextRoundTripIsIdentity) {
  for (long p = -30; p <= 30; ++p) {
    for (long q = 1; q <= 12; ++q) {
      Rational x(p, q);
      x.canonicalize();
      const auto text = to_string(x);
      EXPECT_EQ(parse_rational(text), x);
      EXPECT_EQ(to_string(parse_rational(text)), text);
    }
  }
}

TEST(Rational, IntegerTest) {
  EXPECT_TRUE(is_integer(parse_rational("4/2")));
  EXPECT_FALSE(is_integer(parse_rational("3/2")));
}
