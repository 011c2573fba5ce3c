#include <gtest/gtest.h>

#include <random>

#include "lacunary/bi_poly.hpp"
#include "lacunary/mod_poly.hpp"
#include "lacunary/poly_ops.hpp"
#include "lacunary/text.hpp"
#include "test_util.hpp"

using namespace lacunary;
using lacunary::testing::B;
using lacunary::testing::P;

namespace {

// Display form of the sextic family G(x) at a given n (n >= 2).
IntPoly sextic_family(std::int64_t n) {
  return P("1").shifted(6 * n) + P("x+1").shifted(5 * n + 1) + P("2").shifted(4 * n) +
         P("x^4-x^3-x^2-2*x-2").shifted(3 * n - 2) + P("2").shifted(2 * n) + P("x+1").shifted(n - 2) + P("1");
}

}  // namespace

TEST(JNormalize, ShiftsToNonzeroConstantTerm) {
  EXPECT_EQ(j_normalize(parse_laurent("x^-2+x^-1")), P("1+x"));
  EXPECT_EQ(j_normalize(parse_laurent("5")), P("5"));
  // a = 1, b = 2 instance of the knot-complement trace-field Laurent polynomial
  EXPECT_EQ(j_normalize(parse_laurent("x^8-x^4-x-2-x^-1-x^-4+x^-8")), P("x^16-x^12-x^9-2*x^8-x^7-x^4+1"));
  EXPECT_THROW(j_normalize(LaurentPoly{}), Error);
}

TEST(JNormalize, IdempotentWithNonzeroConstant) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly f = to_laurent(lacunary::testing::random_sparse(rng, 5, 40, 9)).shifted(lacunary::testing::uniform(rng, -30, 30));
    IntPoly g = j_normalize(f);
    EXPECT_NE(g.constant_term(), 0);
    EXPECT_EQ(j_normalize(g), g);
  }
}

TEST(Reciprocal, Basics) {
  EXPECT_EQ(reciprocal(P("x+2")), P("2*x+1"));
  EXPECT_EQ(reciprocal(P("x^2+1")), P("x^2+1"));
  EXPECT_TRUE(is_reciprocal(P("x^2+3*x+1")));
  EXPECT_TRUE(is_reciprocal(P("x-1")));
  EXPECT_FALSE(is_reciprocal(P("x+2")));
  EXPECT_THROW(reciprocal(IntPoly{}), Error);
}

TEST(Reciprocal, SexticFamilyTildeAtTwo) {
  const std::int64_t n = 2;
  const IntPoly tilde = P("1").shifted(6 * n) + P("x+1").shifted(5 * n + 1) + P("2").shifted(4 * n) +
                        P("-2*x^4-2*x^3-x^2-x+1").shifted(3 * n - 2) + P("2").shifted(2 * n) +
                        P("x+1").shifted(n - 2) + P("1");
  EXPECT_EQ(reciprocal(sextic_family(n)), tilde);
  EXPECT_EQ(sextic_family(n) - tilde, P("3*x^4+x^3-x-3").shifted(3 * n - 2));
}

TEST(Reciprocal, InvolutionAndNormPreserved) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    IntPoly f = lacunary::testing::random_poly(rng, lacunary::testing::uniform(rng, 0, 15), 20, true);
    EXPECT_EQ(reciprocal(reciprocal(f)), f);
    EXPECT_EQ(norm2_sq(reciprocal(f)), norm2_sq(f));
  }
}

TEST(Norms, HeightAndNorm) {
  EXPECT_EQ(norm2_sq(P("x^2-2*x+3")), 14);
  EXPECT_EQ(height(P("-x^7+4*x^6-8*x^4+4*x^2-x")), 8);
  EXPECT_EQ(norm2_sq(IntPoly{}), 0);
  EXPECT_EQ(height(IntPoly{}), 0);
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd_zx(P("x^2-1"), P("x^2+2*x+1")), P("x+1"));
  EXPECT_EQ(content(P("6*x^2+4")), 2);
  EXPECT_EQ(primitive_part(P("-6*x^2-4")), P("3*x^2+2"));
  EXPECT_EQ(gcd_zx(P("6*x+6"), P("4*x^2-4")), P("2*x+2"));
  EXPECT_THROW(gcd_zx(IntPoly{}, IntPoly{}), Error);
  // a = 1 and a = 3 coefficient lists of the quartic knot family
  for (int a : {1, 3}) {
    const IntPoly xa = IntPoly::x_power(a);
    std::vector<IntPoly> fs = {P("1"), -xa, -((xa + P("1")).pow(2) * xa), -IntPoly::x_power(3 * a), IntPoly::x_power(4 * a)};
    EXPECT_EQ(gcd_zx(fs), P("1"));
  }
}

TEST(Gcd, DividesBothAndIsMaximalAgainstDivisorSearch) {
  std::mt19937_64 rng(13);
  // every primitive polynomial of degree 1..2 with coefficients in [-3, 3] and positive leading coefficient
  std::vector<IntPoly> candidates;
  for (int a = 1; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      IntPoly d = IntPoly::from_dense({Integer(b), Integer(a)});
      if (content(d) == 1) candidates.push_back(d);
      for (int c = -3; c <= 3; ++c) {
        IntPoly e = IntPoly::from_dense({Integer(c), Integer(b), Integer(a)});
        if (content(e) == 1) candidates.push_back(e);
      }
    }
  for (int i = 0; i < 150; ++i) {
    IntPoly common = lacunary::testing::random_poly(rng, lacunary::testing::uniform(rng, 0, 2), 3);
    IntPoly f = common * lacunary::testing::random_poly(rng, lacunary::testing::uniform(rng, 0, 3), 3);
    IntPoly g = common * lacunary::testing::random_poly(rng, lacunary::testing::uniform(rng, 0, 3), 3);
    IntPoly d = gcd_zx(f, g);
    ASSERT_GT(d.leading_coeff(), 0);
    EXPECT_TRUE(divides_poly(d, f));
    EXPECT_TRUE(divides_poly(d, g));
    EXPECT_TRUE(divides_poly(primitive_part(common), d));
    EXPECT_EQ(content(d), gcd_int(content(f), content(g)));
    for (const auto& c : candidates)
      if (divides_poly(c, f) && divides_poly(c, g)) EXPECT_TRUE(divides_poly(c, d)) << to_text(c) << " | " << to_text(d);
  }
}

TEST(BiPolyOps, EvalY) {
  EXPECT_EQ(bipoly_eval_y(B("1+x*y"), 3), P("1+x^4"));
  EXPECT_EQ(bipoly_eval_y(B("1-x*(x+1)*y-2*x^2*y^2-x^2*(x+1)*y^3+x^4*y^4"), 1),
            P("1-x^2*(x+1)-2*x^4-x^5*(x+1)+x^8"));
}

TEST(BiPolyOps, Shift) {
  EXPECT_EQ(bipoly_shift(B("1+x^2*y"), 3, ShiftDirection::MultiplyY), B("1+x^5*y"));
  try {
    bipoly_shift(B("1+y"), 1, ShiftDirection::DivideY);
    FAIL() << "expected NotAPolynomial";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAPolynomial);
  }
  // F_{1,t}(x, y / x^t) = F_{1,0}(x, y) for the sextic family coefficients
  std::vector<IntPoly> f = {P("1"), P("x+1"), P("2*x^4"), P("x^4*(x^4-x^3-x^2-2*x-2)"), P("2*x^8"), P("x^11*(x+1)"), P("x^12")};
  for (std::int64_t t : {0, 1, 5}) {
    std::vector<IntPoly> v;
    for (std::size_t j = 0; j < f.size(); ++j) v.push_back(f[j].shifted(static_cast<std::int64_t>(j) * t));
    EXPECT_EQ(bipoly_shift(BiPoly(v), t, ShiftDirection::DivideY), BiPoly(f));
  }
}

TEST(BiPolyOps, ShiftRoundTrip) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    BiPoly F = lacunary::testing::random_bipoly(rng, 5, 4, 9);
    std::int64_t q = lacunary::testing::uniform(rng, 0, 4);
    EXPECT_EQ(bipoly_shift(bipoly_shift(F, q, ShiftDirection::MultiplyY), q, ShiftDirection::DivideY), F);
  }
}

TEST(BiPolyOps, StripAndContent) {
  auto s = strip_x(B("x^3+x^2*y"));
  EXPECT_EQ(s.M, 2);
  EXPECT_EQ(s.core, B("x+y"));
  EXPECT_EQ(content_y(B("x^2*y+x^3*y^2")), P("x^2"));
  EXPECT_EQ(content_y(B("1+x*y")), P("1"));
}

TEST(BiPolyOps, DivisionAndKronecker) {
  BiPoly a = B("1-x*y"), b = B("1+x*y+x^3*y^2");
  EXPECT_EQ(divide_exact(a * b, a), b);
  EXPECT_FALSE(try_divide_bi(b, a).has_value());
  BiPoly F = a * b;
  EXPECT_EQ(BiPoly::from_kronecker(F.kronecker(F.deg_x() + 1), F.deg_x() + 1), F);
}

TEST(ModPolyOps, ReduceAndDivide) {
  EXPECT_EQ(mod_reduce(P("(x+1)^2"), 2), mod_reduce(P("x^2+1"), 2));
  EXPECT_EQ(divide_exact(P("x^2-1"), P("x-1")), P("x+1"));
  try {
    divide_exact(P("x^2+1"), P("x-1"));
    FAIL() << "expected NotDivisible";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDivisible);
  }
  EXPECT_THROW(mod_reduce(P("x"), 4), Error);
}

TEST(ModPolyOps, ReductionIsRingHomomorphism) {
  std::mt19937_64 rng(15);
  for (std::uint64_t p : {2ULL, 3ULL, 7ULL, 101ULL, 2147483629ULL}) {
    for (int i = 0; i < 60; ++i) {
      IntPoly f = lacunary::testing::random_poly(rng, lacunary::testing::uniform(rng, 0, 12), 1000);
      IntPoly g = lacunary::testing::random_poly(rng, lacunary::testing::uniform(rng, 0, 12), 1000);
      EXPECT_EQ(mod_reduce(f * g, p), mod_reduce(f, p) * mod_reduce(g, p));
      EXPECT_EQ(mod_reduce(f + g, p), mod_reduce(f, p) + mod_reduce(g, p));
    }
  }
}

TEST(Text, CanonicalPrinting) {
  EXPECT_EQ(to_text(P("-x + 4x^2 - 8*x^4 + 4*x^6 - x^7")), "-x^7+4*x^6-8*x^4+4*x^2-x");
  EXPECT_EQ(to_text(B("1 - x*(x+1)*y")), "-x^2*y-x*y+1");
  EXPECT_EQ(to_text(IntPoly{}), "0");
  EXPECT_EQ(to_text(parse_laurent("x^-3+2")), "2+x^-3");
}

TEST(Text, ParseErrorsCarryPosition) {
  try {
    parse_poly("x^2 + * 3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_poly(""), ParseError);
  EXPECT_THROW(parse_poly("x^-1"), ParseError);
  EXPECT_THROW(parse_poly("(x+1)^-2"), ParseError);
  EXPECT_THROW(parse_poly("x+y"), ParseError);
  EXPECT_THROW(parse_poly("(x+1"), ParseError);
}

TEST(Text, RoundTripRandom) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 1000; ++i) {
    IntPoly f = lacunary::testing::random_sparse(rng, static_cast<std::size_t>(lacunary::testing::uniform(rng, 0, 8)), 200, 1000000);
    EXPECT_EQ(parse_poly(to_text(f)), f);
    LaurentPoly l = to_laurent(f).shifted(-100);
    EXPECT_EQ(parse_laurent(to_text(l)), l);
  }
  for (int i = 0; i < 200; ++i) {
    BiPoly F = lacunary::testing::random_bipoly(rng, 6, 5, 50);
    EXPECT_EQ(parse_bipoly(to_text(F)), F);
  }
}
