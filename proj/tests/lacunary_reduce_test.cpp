#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lacunary/lacunary_reduce.hpp"
#include "test_util.hpp"

using namespace lacunary;
using lacunary::testing::P;
using lacunary::testing::uniform;

namespace {

ReductionConfig quarter() { return make_config(Rational(1, 4), Rational(2)); }

std::vector<Integer> ints(std::initializer_list<long> v) { return std::vector<Integer>(v.begin(), v.end()); }

}  // namespace

TEST(ReductionConfig, Constants) {
  auto c = quarter();
  EXPECT_EQ(c.kappa, 5);
  EXPECT_EQ(make_config(Rational(1, 6), Rational(2)).kappa, 7);
  EXPECT_EQ(make_config(Rational(2, 9), Rational(2)).kappa, 5);
  EXPECT_THROW(make_config(Rational(1, 3), Rational(2)), Error);
  EXPECT_THROW(make_config(Rational(1, 4), Rational(1)), Error);
}

TEST(VBound, Values) {
  EXPECT_EQ(v_bound(1, quarter()), Rational(10));
  EXPECT_EQ(v_bound(2, quarter()), Rational(250));
  EXPECT_EQ(v_bound(3, quarter()), Rational(6250));
  EXPECT_THROW(v_bound(0, quarter()), Error);
}

TEST(ResidueOk, Boundaries) {
  const Rational e(1, 4);
  EXPECT_TRUE(residue_ok(0, 8, e));
  EXPECT_TRUE(residue_ok(1, 8, e));
  EXPECT_FALSE(residue_ok(2, 8, e));
  EXPECT_FALSE(residue_ok(6, 8, e));
  EXPECT_TRUE(residue_ok(7, 8, e));
  EXPECT_TRUE(residue_ok(17, 8, e));
}

TEST(FindK, BruteForceSmall) {
  auto ks = find_k_bruteforce(ints({0, 5, 11}), quarter());
  for (const auto& k : ks) EXPECT_TRUE(residues_ok(ints({0, 5, 11}), k, Rational(1, 4)));
  for (long k = 2; k < 15; ++k) {
    const bool listed = std::find(ks.begin(), ks.end(), Integer(k)) != ks.end();
    EXPECT_EQ(listed, residues_ok(ints({0, 5, 11}), k, Rational(1, 4))) << k;
  }
  EXPECT_THROW(find_k_bruteforce(ints({0, 3, 3}), quarter()), Error);
}

TEST(FindK, ConstructiveMeetsThresholdGuarantee) {
  std::mt19937_64 rng(61);
  const auto cfg = quarter();
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t rho = uniform(rng, 1, 3);
    const Integer V = ceil_rational(v_bound(rho, cfg));
    std::vector<Integer> v;
    std::set<long> s;
    const long top = V.get_si() + uniform(rng, 0, 3 * V.get_si());
    while (static_cast<std::int64_t>(s.size()) < rho - 1) s.insert(static_cast<long>(uniform(rng, 0, top - 1)));
    for (long x : s) v.emplace_back(x);
    v.emplace_back(top);
    auto c = find_k_constructive(v, cfg);
    EXPECT_TRUE(residues_ok(v, c.k, cfg.eps));
    EXPECT_GE(Rational(c.k), cfg.k0);
    EXPECT_LT(Rational(c.k), Rational(v.back()) / (1 - cfg.eps));
    if (v.back() < 100000) {
      auto all = find_k_bruteforce(v, cfg);
      EXPECT_NE(std::find(all.begin(), all.end(), c.k), all.end());
    }
  }
}

TEST(FindK, BelowThreshold) {
  EXPECT_THROW(
      {
        try {
          find_k_constructive(ints({0, 100}), quarter());
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::BelowThreshold);
          throw;
        }
      },
      Error);
  EXPECT_EQ(find_k_constructive(ints({12}), quarter()).k, 12);
}

TEST(Fold, IdentityHolds) {
  const IntPoly F = P("1+3*x^7-2*x^30+x^41");
  auto [G, w] = fold_exponents(F, 10, quarter());
  EXPECT_EQ(w.floor_eps_k, 2);
  EXPECT_EQ(G.eval_y_power(10), F.shifted(2));
  EXPECT_EQ(G.deg_y(), 4);
  for (const auto& ft : w.folded) EXPECT_EQ(ft.d + 2, 10 * ft.ell + ft.dbar);
  EXPECT_THROW(fold_exponents(P("x+x^3"), 10, quarter()), Error);
}

TEST(Fold, RandomPolynomialsWithConstructedK) {
  std::mt19937_64 rng(62);
  const auto cfg = quarter();
  for (int trial = 0; trial < 50; ++trial) {
    const IntPoly F = lacunary::testing::random_sparse(rng, 1, 6000, 5) + P("1") + IntPoly::x_power(7000);
    if (F.constant_term() == 0) continue;
    std::vector<Integer> v;
    for (const auto& t : F.terms()) v.emplace_back(static_cast<long>(t.exp));
    const Integer k = find_k_constructive(v, cfg).k;
    auto [G, w] = fold_exponents(F, k.get_si(), cfg);
    EXPECT_EQ(G.eval_y_power(w.k), F.shifted(w.floor_eps_k));
    // every folded exponent sits near a multiple of k
    for (const auto& ft : w.folded) EXPECT_TRUE(ft.dbar < 2 * w.floor_eps_k + 1 || ft.dbar >= w.k - 1);
  }
}

TEST(Twisted, InstancesMatchDefinition) {
  FamilySpec s{{P("1"), P("x+1"), P("x^2")}};
  auto [a, b] = twisted_pair(s, 3, 2);
  EXPECT_EQ(a.poly, lacunary::testing::B("1+(x+1)*x^3*y^2+x^8*y^4"));
  EXPECT_EQ(b.poly, lacunary::testing::B("x^6+(x+1)*x^3*y^2+x^2*y^4"));
  // F1(x, x^k) recovers F(x, x^n) with n = k l + t
  const std::int64_t k = 7, ell = 2, t = 3;
  auto [c, d] = twisted_pair(s, t, 1);
  EXPECT_EQ(c.poly.eval_y_power(k * ell), s.to_bipoly().eval_y_power(k * ell + t));
  EXPECT_EQ(d.poly.eval_y_power(k * ell), s.to_bipoly().eval_y_power(k * ell - t).shifted(2 * t));
  EXPECT_THROW(twisted_instance(s, Shape::F1, -1, 1), Error);
}

TEST(Constraints, DerivedFromSpec) {
  auto c = constraint_data(FamilySpec{{P("1"), IntPoly{}, P("-x^7+4*x^6-8*x^4+4*x^2-x"), IntPoly{}, P("x^8")}});
  EXPECT_EQ(c.eps, Rational(1, 10));
  EXPECT_EQ(c.k0, Rational(16));
  EXPECT_EQ(c.t_bound_factor, Rational(1, 20));
  EXPECT_EQ(c.n_of(Shape::F2, 40, 3, 1), 119);
  EXPECT_TRUE(c.t_admissible(40, 1));
  EXPECT_FALSE(c.t_admissible(40, 2));
}

TEST(FindK, WindowedScanAgreesWithFullScan) {
  const auto cfg = make_config(Rational(1, 6), Rational(3));
  const auto v = ints({0, 17, 402, 977});
  const auto all = find_k_bruteforce(v, cfg);
  ScanWindow w;
  w.lo = Integer(100);
  w.hi = Integer(700);
  std::vector<Integer> expect;
  for (const auto& k : all)
    if (k >= 100 && k < 700) expect.push_back(k);
  EXPECT_EQ(find_k_bruteforce(v, cfg, w), expect);
  w.max_results = 2;
  EXPECT_EQ(find_k_bruteforce(v, cfg, w).size(), std::min<std::size_t>(2, expect.size()));
  // direct residue test over the whole range
  std::vector<Integer> direct;
  for (long k = 3; Rational(k) < Rational(977) / (1 - cfg.eps); ++k)
    if (residues_ok(v, k, cfg.eps)) direct.emplace_back(k);
  EXPECT_EQ(all, direct);
}

TEST(Structure, FoldedMemberIsTwistedInstance) {
  std::mt19937_64 rng(63);
  int matched = 0;
  for (int trial = 0; trial < 30; ++trial) {
    FamilySpec s;
    const std::int64_t r = uniform(rng, 1, 3);
    for (std::int64_t j = 0; j <= r; ++j)
      s.f.push_back(uniform(rng, 0, 2) == 0 && j > 0 && j < r ? IntPoly{} : lacunary::testing::random_poly(rng, uniform(rng, 0, 3), 3));
    if (s.f.front().constant_term() == 0) s.f.front() += P("1");
    if (s.f.back().is_zero()) s.f.back() = P("x^2");
    const auto c = constraint_data(s);
    const auto cfg = make_config(c.eps, c.k0);
    const std::int64_t n = uniform(rng, 50, 400);
    BiPoly spec_poly = s.to_bipoly();
    const IntPoly Fn = spec_poly.eval_y_power(n);
    for (const auto& kk : find_k_bruteforce(block_exponents(s, n), cfg)) {
      const std::int64_t k = kk.get_si();
      auto [G, w] = fold_exponents(Fn, k, cfg);
      auto m = match_twisted(s, n, k, G, cfg.eps);
      ASSERT_TRUE(m.has_value()) << to_text(spec_poly) << " n=" << n << " k=" << k;
      ++matched;
    }
  }
  EXPECT_GT(matched, 100);
}
