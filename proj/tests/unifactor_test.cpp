#include <gtest/gtest.h>

#include <map>
#include <random>

#include "lacunary/text.hpp"
#include "lacunary/unifactor.hpp"
#include "test_util.hpp"

using namespace lacunary;
using lacunary::testing::P;
using lacunary::testing::uniform;

namespace {

std::vector<std::pair<std::string, int>> listing(const Factorization& f) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& [g, m] : f.factors) out.emplace_back(to_text(g), m);
  return out;
}

IntPoly quartic_w() { return P("256*x^4-80*x^3-32*x^2-20*x+1"); }

}  // namespace

TEST(Squarefree, Examples) {
  auto sf = squarefree_decompose(P("(x-1)^2*(x+2)"));
  ASSERT_EQ(sf.size(), 2u);
  EXPECT_EQ(sf[0], std::make_pair(P("x+2"), 1));
  EXPECT_EQ(sf[1], std::make_pair(P("x-1"), 2));
  auto one = squarefree_decompose(P("x^3-x+1"));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].first, P("x^3-x+1"));
}

TEST(Squarefree, OcticFamilyHasSquaredLinearFactorAtThree) {
  // J(x^{2n} + (-x^3+4x^2-8+4x^-2-x^-3) x^n + 1) at n = 3
  const std::int64_t n = 3;
  LaurentPoly F = LaurentPoly::x_power(2 * n) + parse_laurent("-x^3+4*x^2-8+4*x^-2-x^-3").shifted(n) + LaurentPoly::x_power(0);
  bool found = false;
  for (const auto& [g, m] : squarefree_decompose(j_normalize(F)))
    if (m >= 2 && divides_poly(P("x-1"), g)) found = true;
  EXPECT_TRUE(found);
}

TEST(Squarefree, RandomWeightedProductReproduces) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    IntPoly f = lacunary::testing::random_poly(rng, uniform(rng, 1, 3), 5) *
                lacunary::testing::random_poly(rng, uniform(rng, 1, 3), 5).pow(2) *
                lacunary::testing::random_poly(rng, uniform(rng, 0, 2), 5).pow(3);
    IntPoly prod = IntPoly::constant(1);
    for (const auto& [g, m] : squarefree_decompose(f)) {
      EXPECT_EQ(gcd_zx(g, g.derivative()).deg(), 0);
      prod *= g.pow(static_cast<unsigned>(m));
    }
    EXPECT_EQ(prod, normalize_sign(primitive_part(f)));
  }
}

TEST(FactorModP, Examples) {
  auto f5 = factor_mod_p(mod_reduce(P("x^2+1"), 5));
  ASSERT_EQ(f5.size(), 2u);
  EXPECT_EQ(f5[0].first, mod_reduce(P("x+2"), 5));
  EXPECT_EQ(f5[1].first, mod_reduce(P("x+3"), 5));
  auto f3 = factor_mod_p(mod_reduce(P("x^2+1"), 3));
  ASSERT_EQ(f3.size(), 1u);
  EXPECT_EQ(f3[0].second, 1);
  auto f2 = factor_mod_p(mod_reduce(P("(x+1)^6*(x^2+x+1)"), 2));
  ASSERT_EQ(f2.size(), 2u);
  EXPECT_EQ(f2[0], std::make_pair(mod_reduce(P("x+1"), 2), 6));
}

TEST(FactorModP, ConstructThenFactor) {
  std::mt19937_64 rng(22);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 13ULL, 101ULL}) {
    // monic irreducibles collected by rejection on random monic polynomials
    std::vector<ModPoly> irr;
    while (irr.size() < 12) {
      std::size_t d = static_cast<std::size_t>(uniform(rng, 1, 5));
      std::vector<ModPoly::Coeff> c(d + 1);
      for (auto& v : c) v = static_cast<ModPoly::Coeff>(uniform(rng, 0, static_cast<std::int64_t>(p) - 1));
      c[d] = 1;
      ModPoly g(p, c);
      auto fs = factor_mod_p(g);
      if (fs.size() == 1 && fs[0].second == 1 && std::find(irr.begin(), irr.end(), g) == irr.end()) irr.push_back(g);
    }
    for (int trial = 0; trial < 40; ++trial) {
      std::map<std::size_t, int> want;
      ModPoly prod = ModPoly::constant(p, 1);
      for (int k = 0; k < 4; ++k) {
        std::size_t i = static_cast<std::size_t>(uniform(rng, 0, 11));
        ++want[i];
        prod = prod * irr[i];
      }
      auto got = factor_mod_p(prod);
      std::map<std::size_t, int> seen;
      for (const auto& [g, m] : got) {
        auto it = std::find(irr.begin(), irr.end(), g);
        ASSERT_NE(it, irr.end());
        seen[static_cast<std::size_t>(it - irr.begin())] = m;
      }
      EXPECT_EQ(seen, want);
    }
  }
}

TEST(FactorZ, WorkedExamples) {
  auto f1 = factor_z(P("3*x^4+x^3-x-3"));
  EXPECT_EQ(listing(f1), (std::vector<std::pair<std::string, int>>{{"x-1", 1}, {"x+1", 1}, {"3*x^2+x+3", 1}}));

  LaurentPoly oct = LaurentPoly::x_power(14) + parse_laurent("-x^3+4*x^2-8+4*x^-2-x^-3").shifted(7) + LaurentPoly::x_power(0);
  auto f3 = factor_z(j_normalize(oct));
  EXPECT_EQ(listing(f3), (std::vector<std::pair<std::string, int>>{
                             {"x-1", 2}, {"x+1", 2}, {"x^4+x^3+3*x^2+x+1", 1}, {"x^6-x^5+2*x^3-x+1", 1}}));

  auto fw = factor_z(quartic_w());
  ASSERT_EQ(fw.factors.size(), 1u);
  EXPECT_EQ(fw.factors[0].first, quartic_w());
}

TEST(FactorZ, UnitsContentAndXPowers) {
  auto f = factor_z(P("-6*x^3-6*x^2"));
  EXPECT_EQ(f.unit, -1);
  EXPECT_EQ(f.content, 6);
  EXPECT_EQ(listing(f), (std::vector<std::pair<std::string, int>>{{"x", 2}, {"x+1", 1}}));
  auto c = factor_z(P("-7"));
  EXPECT_EQ(c.unit, -1);
  EXPECT_EQ(c.content, 7);
  EXPECT_TRUE(c.factors.empty());
  EXPECT_THROW(factor_z(IntPoly{}), Error);
}

TEST(FactorZ, SwinnertonDyerStyleManyModularFactors) {
  // minimal polynomial of sqrt2+sqrt3+sqrt5 splits into linear or quadratic factors modulo every prime
  IntPoly f = P("x^8-40*x^6+352*x^4-960*x^2+576");
  auto fz = factor_z(f);
  EXPECT_EQ(fz.count(), 1);
  IntPoly g = P("(x^4-10*x^2+1)*(x^4-10*x^2+1-2*x)");
  EXPECT_EQ(factor_z(g).count(), 2);
}

TEST(IsIrreducible, Examples) {
  EXPECT_TRUE(is_irreducible_z(quartic_w().compose_power(4)));
  EXPECT_FALSE(is_irreducible_z(P("x^2-1")));
  EXPECT_TRUE(is_irreducible_z(P("3*x^2+x+3")));
  EXPECT_FALSE(is_irreducible_z(P("2*x+2")));
  EXPECT_THROW(is_irreducible_z(P("5")), Error);
}

TEST(FactorZ, ConstructThenFactorRoundTrip) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    std::map<std::string, int> want;
    IntPoly prod = IntPoly::constant(1);
    std::int64_t total = 0;
    while (total < 10) {
      IntPoly g = primitive_part(lacunary::testing::random_poly(rng, uniform(rng, 1, 5), 20));
      if (!is_irreducible_z(g)) continue;
      int m = uniform(rng, 1, 4) == 1 ? 2 : 1;
      want[to_text(g)] += m;
      prod *= g.pow(static_cast<unsigned>(m));
      total += m * g.deg();
    }
    auto fz = factor_z(prod);
    std::map<std::string, int> got;
    std::int64_t degsum = 0;
    for (const auto& [g, m] : fz.factors) {
      got[to_text(g)] += m;
      degsum += m * g.deg();
      EXPECT_TRUE(is_irreducible_z(g));
    }
    EXPECT_EQ(got, want);
    EXPECT_EQ(degsum, prod.deg());
  }
}

TEST(FactorZ, ModularConsistency) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly f = lacunary::testing::random_poly(rng, 3, 9, true) * lacunary::testing::random_poly(rng, 4, 9, true);
    auto fz = factor_z(f);
    for (std::uint64_t p : {7ULL, 11ULL, 13ULL}) {
      if (divides(Integer(static_cast<unsigned long>(p)), f.leading_coeff())) continue;
      ModPoly fp = mod_reduce(f, p);
      if (gcd(fp, fp.derivative()).degree() > Degree(0)) continue;
      auto mods = factor_mod_p(fp);
      for (const auto& [g, m] : fz.factors) {
        // each Z-factor is a product of some of the modular factors
        ModPoly gp = mod_reduce(g, p).monic();
        for (const auto& [u, e] : factor_mod_p(gp)) {
          bool present = false;
          for (const auto& [v, ee] : mods)
            if (v == u) present = true;
          EXPECT_TRUE(present);
        }
      }
    }
  }
}
