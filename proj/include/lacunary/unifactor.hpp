#ifndef LACUNARY_UNIFACTOR_HPP
#define LACUNARY_UNIFACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "dense.hpp"
#include "error.hpp"
#include "int_poly.hpp"
#include "mod_poly.hpp"
#include "poly_ops.hpp"

namespace lacunary {

struct Factorization {
  Integer unit = 1;
  Integer content = 1;
  std::vector<std::pair<IntPoly, int>> factors;

  IntPoly product() const {
    IntPoly r = IntPoly::constant(unit * content);
    for (const auto& [f, m] : factors) r *= f.pow(static_cast<unsigned>(m));
    return r;
  }

  /// Number of irreducible factors counted with multiplicity (constants excluded).
  int count() const {
    int n = 0;
    for (const auto& fm : factors) n += fm.second;
    return n;
  }
};

/// Total order used for every factor listing: degree, then coefficients from the top down.
inline bool factor_less(const IntPoly& a, const IntPoly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (std::int64_t e = a.deg(); e >= 0; --e) {
    const Integer ca = a.coeff(e), cb = b.coeff(e);
    if (ca != cb) return ca < cb;
  }
  return false;
}

// ---------------------------------------------------------------------------
// squarefree decomposition over Z

/// Yun-style decomposition of the primitive part: pairwise coprime squarefree
/// factors (positive leading coefficient) with multiplicities, ascending.
inline std::vector<std::pair<IntPoly, int>> squarefree_decompose(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<std::pair<IntPoly, int>> out;
  IntPoly g = primitive_part(f);
  if (g.ord() > 0) {
    out.emplace_back(IntPoly::x_power(1), static_cast<int>(g.ord()));
    g = g.shifted(-g.ord());
  }
  if (g.deg() == 0) return out;
  const IntPoly dg = g.derivative();
  const IntPoly u = gcd_zx(g, dg);
  IntPoly v = divide_exact(g, u);
  IntPoly w = divide_exact(dg, u);
  std::vector<std::pair<IntPoly, int>> parts;
  for (int i = 1; !v.is_constant(); ++i) {
    const IntPoly z = w - v.derivative();
    const IntPoly h = z.is_zero() ? normalize_sign(v) : gcd_zx(v, z);
    v = divide_exact(v, h);
    w = z.is_zero() ? IntPoly{} : divide_exact(z, h);
    if (!h.is_constant()) parts.emplace_back(primitive_part(h), i);
  }
  out.insert(out.end(), parts.begin(), parts.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

// ---------------------------------------------------------------------------
// factorization over F_p

namespace unifactor_detail {

inline ModPoly pth_root(const ModPoly& f) {
  const auto p = f.modulus();
  std::vector<ModPoly::Coeff> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return ModPoly(p, std::move(c));
}

inline std::vector<std::pair<ModPoly, int>> squarefree_mod_p(const ModPoly& f) {
  std::vector<std::pair<ModPoly, int>> out;
  if (f.degree() <= Degree(0)) return out;
  const auto p = f.modulus();
  const ModPoly fp = f.derivative();
  if (fp.is_zero()) {
    for (auto& [h, m] : squarefree_mod_p(pth_root(f))) out.emplace_back(h, m * static_cast<int>(p));
    return out;
  }
  ModPoly c = gcd(f, fp);
  ModPoly w = f / c;
  for (int i = 1; !w.is_one(); ++i) {
    ModPoly y = gcd(w, c);
    ModPoly z = w / y;
    if (!z.is_one()) out.emplace_back(z.monic(), i);
    w = y;
    c = c / y;
  }
  if (!c.is_one()) {
    for (auto& [h, m] : squarefree_mod_p(pth_root(c.monic()))) out.emplace_back(h, m * static_cast<int>(p));
  }
  return out;
}

// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f) {
  std::vector<std::pair<ModPoly, int>> out;
  const auto p = f.modulus();
  const ModPoly x = ModPoly::x_power(p, 1);
  ModPoly h = x % f;
  for (int d = 1; f.degree() >= Degree(2 * d); ++d) {
    h = h.powmod(Integer(static_cast<unsigned long>(p)), f);
    ModPoly g = gcd(h - x, f);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > Degree(0)) out.emplace_back(f.monic(), static_cast<int>(f.deg()));
  return out;
}

inline ModPoly random_below(std::mt19937_64& rng, std::uint64_t p, std::size_t n) {
  std::vector<ModPoly::Coeff> c(n);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (auto& v : c) v = dist(rng);
  return ModPoly(p, std::move(c));
}

// Equal-degree splitting (Cantor-Zassenhaus; trace map in characteristic 2).
inline void equal_degree(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  const std::size_t n = f.deg();
  if (n == static_cast<std::size_t>(d)) {
    out.push_back(f.monic());
    return;
  }
  const auto p = f.modulus();
  const Integer q = pow_int(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
  while (true) {
    ModPoly a = random_below(rng, p, n);
    if (a.degree() < Degree(1)) continue;
    ModPoly g = gcd(a, f);
    if (g.is_one()) {
      ModPoly b;
      if (p == 2) {
        b = a;
        ModPoly s = a;
        for (int i = 1; i < d; ++i) {
          s = (s * s) % f;
          b = b + s;
        }
      } else {
        b = a.powmod((q - 1) / 2, f) - ModPoly::constant(p, 1);
      }
      g = gcd(b, f);
    }
    if (g.degree() > Degree(0) && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree((f / g).monic(), d, rng, out);
      return;
    }
  }
}

}  // namespace unifactor_detail

/// Monic irreducible factors over F_p with multiplicities, sorted.
inline std::vector<std::pair<ModPoly, int>> factor_mod_p(const ModPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factorization of zero mod p");
  std::vector<std::pair<ModPoly, int>> out;
  std::mt19937_64 rng(0x5eed ^ (f.modulus() * 1000003ULL) ^ f.coeffs().size());
  for (const auto& [g, m] : unifactor_detail::squarefree_mod_p(f.monic())) {
    for (const auto& [h, d] : unifactor_detail::distinct_degree(g)) {
      std::vector<ModPoly> parts;
      unifactor_detail::equal_degree(h, d, rng, parts);
      for (auto& q : parts) out.emplace_back(std::move(q), m);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// ---------------------------------------------------------------------------
// factorization over Z (Zassenhaus)

namespace unifactor_detail {

using dense::Poly;

inline Poly reduce(Poly a, const Integer& M) {
  for (auto& v : a) v = mod_pos(v, M);
  dense::trim(a);
  return a;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  dense::trim(r);
  return r;
}

// Division by a polynomial whose leading coefficient is 1 modulo M.
inline std::pair<Poly, Poly> divrem_monic(Poly a, const Poly& b, const Integer& M) {
  a = reduce(std::move(a), M);
  if (a.size() < b.size()) return {Poly{}, a};
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = mod_pos(a[i], M);
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(a[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    q[i - db] = c;
  }
  a.resize(db);
  return {reduce(std::move(q), M), reduce(std::move(a), M)};
}

inline Poly from_mod(const ModPoly& f) { return f.lift().to_dense(); }

inline ModPoly to_mod(const Poly& a, std::uint64_t p) {
  const Integer P(static_cast<unsigned long>(p));
  std::vector<ModPoly::Coeff> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod_pos(a[i], P).get_ui();
  return ModPoly(p, std::move(c));
}

// s a + t b = 1 over F_p for coprime a, b.
inline std::pair<ModPoly, ModPoly> xgcd(const ModPoly& a, const ModPoly& b) {
  const auto p = a.modulus();
  ModPoly r0 = a, r1 = b, s0 = ModPoly::constant(p, 1), s1(p), t0(p), t1 = ModPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != Degree(0)) throw Error(ErrorCode::ConstructionFailed, "Hensel lifting needs coprime factors");
  const auto inv = r0.inv(r0.lead());
  return {s0.scaled(inv), t0.scaled(inv)};
}

// Lifts f = lc(f) * prod(us) mod p to monic factors modulo p^l. f is known modulo p^l.
inline std::vector<Poly> hensel_tree(const Poly& f, const std::vector<ModPoly>& us, std::uint64_t p,
                                     const std::vector<Integer>& moduli) {
  const Integer& Ml = moduli.back();
  if (us.size() == 1) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), Ml.get_mpz_t()) == 0)
      throw Error(ErrorCode::ConstructionFailed, "leading coefficient not invertible");
    Poly r = f;
    for (auto& v : r) v *= inv;
    return {reduce(std::move(r), Ml)};
  }
  const std::size_t half = us.size() / 2;
  std::vector<ModPoly> A(us.begin(), us.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<ModPoly> Bv(us.begin() + static_cast<std::ptrdiff_t>(half), us.end());
  ModPoly g0 = ModPoly::constant(p, mod_pos(f.back(), Integer(static_cast<unsigned long>(p))).get_ui());
  for (const auto& u : A) g0 = g0 * u;
  ModPoly h0 = ModPoly::constant(p, 1);
  for (const auto& u : Bv) h0 = h0 * u;
  auto [s0, t0] = xgcd(g0, h0);
  Poly g = from_mod(g0), h = from_mod(h0), s = from_mod(s0), t = from_mod(t0);
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    const Integer& M = moduli[i];
    const Poly e = reduce(dense::sub(f, dense::mul(g, h)), M);
    auto [q, r] = divrem_monic(dense::mul(s, e), h, M);
    Poly g1 = reduce(add(add(g, dense::mul(t, e)), dense::mul(q, g)), M);
    Poly h1 = reduce(add(h, r), M);
    Poly b = reduce(dense::sub(add(dense::mul(s, g1), dense::mul(t, h1)), Poly{Integer(1)}), M);
    auto [c, d] = divrem_monic(dense::mul(s, b), h1, M);
    s = reduce(dense::sub(s, d), M);
    t = reduce(dense::sub(dense::sub(t, dense::mul(t, b)), dense::mul(c, g1)), M);
    g = std::move(g1);
    h = std::move(h1);
  }
  std::vector<Poly> out = hensel_tree(g, A, p, moduli);
  std::vector<Poly> right = hensel_tree(h, Bv, p, moduli);
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

inline std::vector<char> subset_degree_sums(const std::vector<std::pair<ModPoly, int>>& fs, std::size_t n) {
  std::vector<char> s(n + 1, 0);
  s[0] = 1;
  for (const auto& [u, m] : fs) {
    const std::size_t d = u.deg();
    for (std::size_t i = n + 1; i-- > d;)
      if (s[i - d]) s[i] = 1;
  }
  return s;
}

inline Integer mignotte_style_bound(const IntPoly& f) {
  const Integer two_n = pow_int(Integer(2), static_cast<unsigned long>(f.deg()));
  return abs_int(f.leading_coeff()) * two_n * (isqrt_ceil(norm2_sq(f)) + 1);
}

constexpr int kPrimeTrials = 5;

// Irreducible factors of a primitive squarefree polynomial with positive
// leading coefficient and non-zero constant term.
inline std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
  const std::size_t n = static_cast<std::size_t>(f.deg());
  if (n <= 1) return {f};
  const Integer lc = f.leading_coeff();
  std::vector<char> allowed(n + 1, 1);
  std::uint64_t best_p = 0;
  std::vector<std::pair<ModPoly, int>> best;
  int found = 0;
  for (std::uint64_t p = 3; found < kPrimeTrials; p = next_prime_u64(p + 1)) {
    if (divides(Integer(static_cast<unsigned long>(p)), lc)) continue;
    ModPoly fp = mod_reduce(f, p);
    if (gcd(fp, fp.derivative()).degree() > Degree(0)) continue;
    auto fs = factor_mod_p(fp);
    ++found;
    if (fs.size() == 1) return {f};
    auto sums = subset_degree_sums(fs, n);
    for (std::size_t i = 0; i <= n; ++i) allowed[i] = allowed[i] && sums[i];
    bool only_trivial = true;
    for (std::size_t i = 1; i < n; ++i)
      if (allowed[i]) only_trivial = false;
    if (only_trivial) return {f};
    if (best.empty() || fs.size() < best.size()) {
      best = std::move(fs);
      best_p = p;
    }
  }
  const std::uint64_t p = best_p;
  const Integer P(static_cast<unsigned long>(p));
  const Integer bound = 2 * mignotte_style_bound(f);
  std::size_t l = 1;
  for (Integer pl = P; pl <= bound; pl *= P) ++l;
  std::vector<std::size_t> exps{l};
  while (exps.back() > 1) exps.push_back((exps.back() + 1) / 2);
  std::reverse(exps.begin(), exps.end());
  std::vector<Integer> moduli;
  for (auto e : exps) moduli.push_back(pow_int(P, static_cast<unsigned long>(e)));
  const Integer& M = moduli.back();

  std::vector<ModPoly> us;
  for (const auto& fm : best) us.push_back(fm.first);
  std::vector<Poly> lifted = hensel_tree(reduce(f.to_dense(), M), us, p, moduli);

  const Integer half_M = M / 2;
  auto symmetric = [&](Poly a) {
    for (auto& v : a) {
      v = mod_pos(v, M);
      if (v > half_M) v -= M;
    }
    dense::trim(a);
    return a;
  };

  std::vector<IntPoly> result;
  IntPoly rest = f;
  std::vector<Poly> remaining = std::move(lifted);
  std::size_t k = 1;
  while (2 * k <= remaining.size()) {
    bool found_factor = false;
    const std::size_t r = remaining.size();
    const std::size_t rest_deg = static_cast<std::size_t>(rest.deg());
    const Integer L = rest.leading_coeff();
    const Integer target0 = L * rest.constant_term();
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::size_t d = 0;
      for (auto i : idx) d += remaining[i].size() - 1;
      if (allowed[d] && allowed[n - d] && d < rest_deg) {
        Integer c0 = L;
        for (auto i : idx) c0 = mod_pos(c0 * remaining[i][0], M);
        if (c0 > half_M) c0 -= M;
        if (c0 != 0 && divides(c0, target0)) {
          Poly g{L};
          for (auto i : idx) g = reduce(dense::mul(g, remaining[i]), M);
          IntPoly cand = primitive_part(IntPoly::from_dense(symmetric(std::move(g))));
          if (auto div = try_divide(rest, cand); div && div->remainder.is_zero()) {
            result.push_back(cand);
            rest = div->quotient;
            std::vector<Poly> keep;
            for (std::size_t i = 0, j = 0; i < r; ++i) {
              if (j < k && idx[j] == i) {
                ++j;
                continue;
              }
              keep.push_back(std::move(remaining[i]));
            }
            remaining = std::move(keep);
            found_factor = true;
            break;
          }
        }
      }
      // next combination
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == r - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found_factor) ++k;
  }
  if (!rest.is_constant()) result.push_back(primitive_part(rest));
  return result;
}

}  // namespace unifactor_detail

/// Complete factorization into irreducibles over Z; the product identity is re-verified.
inline Factorization factor_z(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factorization of zero");
  Factorization out;
  out.unit = f.leading_coeff() < 0 ? -1 : 1;
  out.content = content(f);
  for (const auto& [g, m] : squarefree_decompose(f)) {
    for (auto& h : unifactor_detail::factor_squarefree(g)) out.factors.emplace_back(std::move(h), m);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });
  if (out.product() != f) throw Error(ErrorCode::ConstructionFailed, "factorization does not reproduce its input");
  return out;
}

inline bool is_irreducible_z(const IntPoly& f) {
  if (f.is_zero() || f.deg() < 1)
    throw Error(ErrorCode::NotAPolynomialOfPositiveDegree, "irreducibility needs positive degree");
  if (content(f) != 1) return false;
  if (f.deg() == 1) return true;
  if (f.constant_term() == 0) return false;
  const IntPoly g = normalize_sign(f);
  if (gcd_zx(g, g.derivative()).deg() > 0) return false;
  return unifactor_detail::factor_squarefree(g).size() == 1;
}

}  // namespace lacunary

#endif  // LACUNARY_UNIFACTOR_HPP
