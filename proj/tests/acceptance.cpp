// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "lacunary/lacunary.hpp"

using namespace lacunary;

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); }

FamilyInput fixture(const std::string& name) { return load_family(std::string(LACUNARY_FIXTURES) + "/" + name); }

struct Check {
  bool ok = true;
  std::ostringstream log;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << " [failed: " << what << "]";
    }
  }
};

int report(int id, const std::string& title, Check& c, double secs) {
  std::cout << "criterion " << id << ": " << (c.ok ? "PASS" : "FAIL") << "  " << title << " (" << std::fixed;
  std::cout.precision(1);
  std::cout << secs << " s)" << c.log.str() << std::endl;
  return c.ok ? 0 : 1;
}

template <class F>
int run(int id, const std::string& title, F&& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report(id, title, c, s);
}

std::multiset<std::string> factor_texts(const Factorization& fz) {
  std::multiset<std::string> out;
  for (const auto& [f, m] : fz.factors)
    for (int i = 0; i < m; ++i) out.insert(to_text(f));
  return out;
}

IntPoly positive(IntPoly f) { return f.leading_coeff() < 0 ? Integer(-1) * f : f; }

// ---------------------------------------------------------------------------
// independent irreducibility certificates for the round-trip criterion

std::vector<Integer> divisors(Integer n) {
  n = abs_int(n);
  std::vector<Integer> d;
  for (Integer i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i * i != n) d.push_back(n / i);
    }
  return d;
}

/// Degree at most 3 and primitive: irreducible over Z exactly when there is no rational root.
bool low_degree_irreducible(const IntPoly& f) {
  if (f.deg() < 1 || f.deg() > 3 || content(f) != 1) return false;
  if (f.deg() == 1) return true;
  if (f.constant_term() == 0) return false;
  for (const auto& p : divisors(f.constant_term()))
    for (const auto& q : divisors(f.leading_coeff()))
      for (int s : {1, -1}) {
        // q^d f(s p / q) == 0
        Integer acc = 0;
        for (const auto& t : f.terms()) acc += t.coeff * pow_int(Integer(s) * p, t.exp) * pow_int(q, f.deg() - t.exp);
        if (acc == 0) return false;
      }
  return true;
}

/// Primitive polynomial that is Eisenstein at 2 or 3.
IntPoly eisenstein(std::mt19937_64& rng, std::int64_t deg, std::int64_t h) {
  const long p = uniform(rng, 0, 1) ? 2 : 3;
  for (;;) {
    std::vector<Integer> c(static_cast<std::size_t>(deg) + 1);
    for (std::int64_t i = 1; i < deg; ++i) c[static_cast<std::size_t>(i)] = p * uniform(rng, -h / p, h / p);
    long c0 = p * uniform(rng, -h / p, h / p);
    while (c0 == 0 || c0 % (p * p) == 0) c0 = p * uniform(rng, -h / p, h / p);
    c[0] = c0;
    long lc = uniform(rng, 1, h);
    while (lc % p == 0) lc = uniform(rng, 1, h);
    c.back() = lc;
    IntPoly f = IntPoly::from_dense(c);
    if (content(f) == 1) return f;
  }
}

}  // namespace

int main() {
  int failures = 0;

  failures += run(1, "sextic family: n = 4 split, eight y^4 cells, G - G~ exclusion", [](Check& c) {
    const auto in = fixture("ex1.json");
    const auto cc = concrete_check(in, 4);
    c.expect(cc.factorization.count() == 2, "two irreducible factors at n = 4");
    c.expect(std::none_of(cc.reciprocal.begin(), cc.reciprocal.end(), [](bool b) { return b; }), "both non-reciprocal");
    c.expect(cc.factorization.product() == cc.member, "product reproduces G");
    const auto cert = analyze_family(in);
    c.expect(cert.verdict == Verdict::IrreducibleForLargeN, "verdict");
    int y4 = 0;
    for (const auto& g : cert.grid) y4 += g.modulus == 4 && g.status == CellStatus::Irreducible && g.rule == "oracle";
    c.expect(y4 == 8, "eight F_{j,rho}(x,y^4) cells");
    c.expect(cert.reciprocal && cert.reciprocal->block && cert.reciprocal->block->coeff == parse_poly("3*x^4+x^3-x-3"), "u(x)");
    if (cert.reciprocal && cert.reciprocal->block_factorization)
      c.expect(factor_texts(*cert.reciprocal->block_factorization) == std::multiset<std::string>{"x-1", "x+1", "3*x^2+x+3"},
               "u = (x-1)(x+1)(3x^2+x+3)");
    c.expect(cert.reciprocal && cert.reciprocal->all_excluded, "reciprocal factors excluded");
    c.expect(verify(cert).ok, "certificate verifies");
    c.log << " factors at n=4: " << to_text(cc.factorization.factors[0].first) << " | " << to_text(cc.factorization.factors[1].first);
  });

  failures += run(2, "figure-eight family (a = 1): 17-point evaluation certificate, norm 1/256, reciprocal verdict", [](Check& c) {
    const auto in = fixture("ex2.json");
    const BiPoly W = twisted_instance(in.spec, Shape::F1, 0, 2);
    const auto pc = parametric_evaluation(W, integer_range(2, 18));
    c.expect(pc.base.required == 17 && pc.points.size() == 17, "17 points required and tried");
    int counted = 0;
    for (const auto& p : pc.points) {
      counted += p.counted;
      for (std::int64_t a : {1, 3, 4}) c.expect(is_irreducible_z(p.w.compose_power(a)), "w_" + p.k.get_str() + "(x^" + std::to_string(a) + ")");
      c.expect(p.capelli && p.capelli->norm == Rational(1) / pow_int(p.k, 8), "norm 1/k^8 at k = " + p.k.get_str());
    }
    c.expect(counted == 17, "17 counted points");
    c.expect(pc.conclusive, "conclusive for every a");
    const auto& w2 = pc.points.front();
    c.expect(w2.w == parse_poly("256*x^4-80*x^3-32*x^2-20*x+1"), "w(x) at k = 2");
    c.expect(w2.capelli && w2.capelli->norm == Rational(1, 256), "norm 1/256");
    c.expect(w2.capelli && w2.capelli->norm_power_primes == std::vector<std::uint64_t>{2}, "p = 2 only");
    const auto cert = analyze_family(in);
    c.expect(cert.verdict == Verdict::ProductOfIrreducibleReciprocalsForLargeN, "verdict");
    c.expect(verify(cert).ok, "certificate verifies");
    for (std::int64_t b : {25, 26}) {
      const auto cc = concrete_check(in, 2 * b - 1);
      c.expect(cc.all_reciprocal() && cc.factorization.product() == cc.member, "reciprocal irreducibles at b = " + std::to_string(b));
      c.log << " b=" << b << ": " << cc.factorization.count() << " reciprocal factors;";
    }
  });

  failures += run(3, "pretzel family: primes {3,5,7}, n = 7 variant, (x-1)^2 | F, reciprocal verdict", [](Check& c) {
    const auto in = fixture("ex3.json");
    const auto ps = prime_set(in.spec);
    c.expect(ps.primes == std::vector<std::uint64_t>{3, 5, 7}, "prime set");
    for (auto p : ps.primes) {
      c.expect(!pth_power_obstruction(in.spec, p), "no congruence for F at p = " + std::to_string(p));
      for (auto s : {Shape::F1, Shape::F2})
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(p); ++t)
          c.expect(!pth_power_obstruction_up_to_x(twisted_instance(in.spec, s, t, 1), p), "no congruence for twisted instances");
    }
    FamilyInput general;
    general.spec.f = {parse_poly("1"), parse_poly("-x^6+4*x^5-8*x^3+4*x-1"), parse_poly("x^6")};
    general.n_shift = -3;
    const auto cc = concrete_check(general, 7);
    c.expect(cc.member == parse_poly("x^14-x^10+4*x^9-8*x^7+4*x^5-x^4+1"), "n = 7 member");
    c.expect(factor_texts(cc.factorization) ==
                 std::multiset<std::string>{"x^4+x^3+3*x^2+x+1", "x^6-x^5+2*x^3-x+1", "x-1", "x-1", "x+1", "x+1"},
             "four-factor product");
    for (std::int64_t n = 2; n <= 30; ++n) {
      const IntPoly F = in.member(n);
      Integer v = 0, d = 0;
      for (const auto& t : F.terms()) v += t.coeff, d += t.coeff * t.exp;
      c.expect(v == 0 && d == 0, "(x-1)^2 divides F at n = " + std::to_string(n));
    }
    const auto cert = analyze_family(in);
    c.expect(cert.verdict == Verdict::ProductOfIrreducibleReciprocalsForLargeN, "verdict");
    c.expect(verify(cert).ok, "certificate verifies");
  });

  failures += run(4, "quartic-in-y example: IrreducibleForAllN, oracle n = 1..6, univariate specializations", [](Check& c) {
    const auto in = fixture("quartic_all_n.json");
    const BiPoly F = in.spec.to_bipoly();
    const auto v = classify_capelli(in.spec, 1, default_oracle());
    c.expect(v.status == CapelliStatus::IrreducibleForAllN, "classify_capelli");
    for (std::int64_t n = 1; n <= 6; ++n) c.expect(reducibility_oracle(F.compose_y_power(n)).status == OracleStatus::Irreducible, "oracle n = " + std::to_string(n));
    // F(a, y^n) irreducible in Z[y] with full y-degree shows F(x, y^n) has no factor of positive y-degree
    int checked = 0;
    for (std::int64_t n = 1; n <= 16; ++n) {
      bool found = false;
      for (long a = 2; a <= 40 && !found; ++a) {
        const IntPoly g = F.compose_y_power(n).eval_x(Integer(a));
        if (g.deg() != 4 * n || g.deg() > 64) break;
        found = is_irreducible_z(g);
      }
      c.expect(found, "irreducible specialization for n = " + std::to_string(n));
      checked += found;
    }
    // the one-variable members F(x, x^N) all carry the factor x + 1, since F(-1, y) = (y^2 - 1)^2
    int divisible = 0;
    for (std::int64_t N = 1; N <= 15; ++N) divisible += in.member(N).eval(Integer(-1)) == 0;
    c.expect(divisible == 15, "x + 1 divides F(x, x^N)");
    c.log << " " << checked << " univariate specializations irreducible; F(x,x^N) has the factor x+1 for N = 1..15";
  });

  failures += run(5, "box-principle k: 200 instances above V(rho), 50 below", [](Check& c) {
    std::mt19937_64 rng(5);
    const Rational eps[] = {Rational(1, 4), Rational(1, 6), Rational(1, 10)};
    int good = 0, below = 0;
    for (int trial = 0; trial < 250; ++trial) {
      const bool above = trial < 200;
      const auto cfg = make_config(eps[uniform(rng, 0, 2)], Rational(2));
      const std::int64_t rho = uniform(rng, 1, 5);
      const Integer V = ceil_rational(v_bound(rho, cfg));
      const std::int64_t Vs = V.get_si();
      const std::int64_t top = above ? Vs + uniform(rng, 0, Vs) : Vs - 1 - uniform(rng, 0, std::min<std::int64_t>(Vs - rho, 5));
      std::set<std::int64_t> s;
      while (static_cast<std::int64_t>(s.size()) < rho - 1) s.insert(uniform(rng, 0, top - 1));
      std::vector<Integer> v;
      for (auto x : s) v.emplace_back(static_cast<long>(x));
      v.emplace_back(static_cast<long>(top));
      if (!above) {
        try {
          find_k_constructive(v, cfg);
          c.expect(false, "BelowThreshold expected");
        } catch (const Error& e) {
          c.expect(e.code() == ErrorCode::BelowThreshold, "BelowThreshold code");
          below += e.code() == ErrorCode::BelowThreshold;
        }
        continue;
      }
      const auto ck = find_k_constructive(v, cfg);
      const bool in_range = Rational(ck.k) >= cfg.k0 && Rational(ck.k) < Rational(v.back()) / (1 - cfg.eps);
      ScanWindow w;
      w.lo = std::max(Integer(2), Integer(ck.k - 500));
      w.hi = ck.k + 500;
      const auto ks = find_k_bruteforce(v, cfg, w);
      const bool listed = std::find(ks.begin(), ks.end(), ck.k) != ks.end();
      c.expect(in_range && residues_ok(v, ck.k, cfg.eps) && listed, "instance " + std::to_string(trial));
      good += in_range && listed;
    }
    c.log << " " << good << "/200 constructive k verified, " << below << "/50 BelowThreshold";
  });

  failures += run(6, "fold identity on 100 sparse polynomials of degree up to 10^6", [](Check& c) {
    std::mt19937_64 rng(6);
    const auto cfg = make_config(Rational(1, 4), Rational(2));
    int done = 0;
    while (done < 100) {
      std::vector<Term> ts{Term{0, Integer(static_cast<long>(uniform(rng, 1, 9)))}};
      const std::int64_t terms = uniform(rng, 2, 12);
      for (std::int64_t i = 1; i < terms; ++i) ts.push_back(Term{uniform(rng, 1, 1000000), Integer(static_cast<long>(uniform(rng, -9, 9)) | 1)});
      const IntPoly F = IntPoly::from_terms(std::move(ts));
      std::vector<Integer> v;
      for (const auto& t : F.terms()) v.emplace_back(static_cast<long>(t.exp));
      ScanWindow w;
      w.max_results = 16;
      const auto ks = find_k_bruteforce(v, cfg, w);
      if (ks.empty()) continue;
      const std::int64_t k = ks[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(ks.size()) - 1))].get_si();
      auto [G, wit] = fold_exponents(F, k, cfg);
      c.expect(G.eval_y_power(k) == F.shifted(wit.floor_eps_k), "G(x,x^k) = x^floor(eps k) F");
      ++done;
    }
    c.log << " " << done << " identities checked";
  });

  failures += run(7, "factorization round trips: 500 univariate, 100 bivariate", [](Check& c) {
    std::mt19937_64 rng(7);
    int uni = 0;
    for (int trial = 0; trial < 500; ++trial) {
      std::multiset<std::string> want;
      IntPoly prod = IntPoly::constant(1);
      std::int64_t deg = 0;
      const std::int64_t target = uniform(rng, 2, 24);
      while (deg < target) {
        IntPoly g;
        if (uniform(rng, 0, 3) == 0 && target - deg >= 4) {
          g = eisenstein(rng, uniform(rng, 4, std::min<std::int64_t>(8, target - deg)), 50);
        } else {
          const std::int64_t d = uniform(rng, 1, std::min<std::int64_t>(3, target - deg));
          std::vector<Integer> cs(static_cast<std::size_t>(d) + 1);
          for (auto& x : cs) x = uniform(rng, -50, 50);
          if (cs.back() == 0) continue;
          g = IntPoly::from_dense(cs);
          if (!low_degree_irreducible(g)) continue;
        }
        g = positive(g);
        const int m = uniform(rng, 0, 4) == 0 && deg + 2 * g.deg() <= 24 ? 2 : 1;
        for (int i = 0; i < m; ++i) want.insert(to_text(g));
        prod *= g.pow(static_cast<unsigned>(m));
        deg += m * g.deg();
      }
      const auto fz = factor_z(prod);
      std::multiset<std::string> got;
      for (const auto& [f, m] : fz.factors)
        for (int i = 0; i < m; ++i) got.insert(to_text(positive(f)));
      const bool ok = got == want && fz.product() == prod;
      c.expect(ok, "univariate " + to_text(prod));
      uni += ok;
    }
    int bi = 0;
    for (int trial = 0; bi < 100 && trial < 1000; ++trial) {
      std::vector<IntPoly> u, v;
      const std::int64_t du = uniform(rng, 1, 3), dv = uniform(rng, 1, 3);
      for (std::int64_t j = 0; j <= du; ++j) u.push_back(IntPoly::from_dense({uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)}));
      for (std::int64_t j = 0; j <= dv; ++j) v.push_back(IntPoly::from_dense({uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -5, 5)}));
      const BiPoly U(u), V(v);
      if (U.deg_y() < 1 || V.deg_y() < 1) continue;
      const BiPoly G = U * V;
      const auto r = reducibility_oracle(G);
      const bool ok = r.status == OracleStatus::Factored && r.U && r.V && r.U->shifted_x(r.M) * *r.V == G && r.U->deg_y() >= 1 && r.V->deg_y() >= 1;
      c.expect(ok, "bivariate " + to_text(G));
      bi += ok;
    }
    c.expect(bi == 100, "100 bivariate products");
    c.log << " " << uni << "/500 univariate, " << bi << "/100 bivariate";
  });

  failures += run(8, "folded members are x^M0 times a twisted instance (20 random families)", [](Check& c) {
    std::mt19937_64 rng(8);
    int matched = 0;
    for (int trial = 0; trial < 20; ++trial) {
      FamilySpec s;
      const std::int64_t r = uniform(rng, 1, 3);
      for (std::int64_t j = 0; j <= r; ++j) {
        std::vector<Integer> cs(static_cast<std::size_t>(uniform(rng, 0, 3)) + 1);
        for (auto& x : cs) x = uniform(rng, -3, 3);
        s.f.push_back(IntPoly::from_dense(cs));
      }
      if (s.f.front().constant_term() == 0) s.f.front() += IntPoly::constant(1);
      if (s.f.back().is_zero()) s.f.back() = IntPoly::x_power(2);
      const auto cd = constraint_data(s);
      const auto cfg = make_config(cd.eps, cd.k0);
      const std::int64_t n = uniform(rng, 200, 600);
      const IntPoly Fn = s.to_bipoly().eval_y_power(n);
      for (const auto& kk : find_k_bruteforce(block_exponents(s, n), cfg)) {
        const std::int64_t k = kk.get_si();
        auto [G, w] = fold_exponents(Fn, k, cfg);
        const auto m = match_twisted(s, n, k, G, cfg.eps);
        c.expect(m.has_value(), "match for n = " + std::to_string(n) + ", k = " + std::to_string(k));
        if (!m) continue;
        const bool ok = cd.t_admissible(k, m->t) && cd.n_of(m->shape, k, m->ell, m->t) == n &&
                        twisted_instance(s, m->shape, m->t, m->ell).shifted_x(m->M0) == G;
        c.expect(ok, "twisted instance identity");
        matched += ok;
      }
    }
    c.expect(matched > 0, "some k found");
    c.log << " " << matched << " (n, k) decompositions matched";
  });

  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
