#ifndef LACUNARY_LACUNARY_REDUCE_HPP
#define LACUNARY_LACUNARY_REDUCE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bi_poly.hpp"
#include "bigint.hpp"
#include "bivar_irred.hpp"
#include "capelli.hpp"
#include "error.hpp"
#include "int_poly.hpp"

namespace lacunary {

struct ReductionConfig {
  Rational eps;
  Rational k0;
  Integer kappa;  // floor(1/eps) + 1
};

inline ReductionConfig make_config(const Rational& eps, const Rational& k0) {
  if (eps <= 0 || eps > Rational(1, 4)) throw Error(ErrorCode::InvalidArgument, "eps must lie in (0, 1/4]");
  if (k0 < 2) throw Error(ErrorCode::InvalidArgument, "k0 must be at least 2");
  ReductionConfig c{eps, k0, floor_rational(Rational(1) / eps) + 1};
  return c;
}

/// V(rho) = max{ kappa^(2rho-2)/2 (eps - 1/kappa)^-1, k0 (kappa^(rho-1) + eps) }.
inline Rational v_bound(std::int64_t rho, const ReductionConfig& cfg) {
  if (rho < 1) throw Error(ErrorCode::InvalidArgument, "rho must be positive");
  const Rational gap = cfg.eps - Rational(1) / Rational(cfg.kappa);
  const Integer k2 = pow_int(cfg.kappa, static_cast<unsigned long>(2 * rho - 2));
  const Integer k1 = pow_int(cfg.kappa, static_cast<unsigned long>(rho - 1));
  Rational a = Rational(k2) / (2 * gap);
  a.canonicalize();
  Rational b = cfg.k0 * (Rational(k1) + cfg.eps);
  b.canonicalize();
  return std::max(a, b);
}

/// v mod k lies in [0, eps k) or ((1-eps) k, k).
inline bool residue_ok(const Integer& v, const Integer& k, const Rational& eps) {
  const Integer r = mod_pos(v, k);
  const Rational rr(r), ek = eps * Rational(k);
  return rr < ek || rr > Rational(k) - ek;
}

inline bool residues_ok(const std::vector<Integer>& v, const Integer& k, const Rational& eps) {
  return std::all_of(v.begin(), v.end(), [&](const Integer& x) { return residue_ok(x, k, eps); });
}

inline void check_exponent_vector(const std::vector<Integer>& v) {
  if (v.empty()) throw Error(ErrorCode::InvalidArgument, "empty exponent vector");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    if (i > 0 && v[i] <= v[i - 1]) throw Error(ErrorCode::InvalidArgument, "exponents must be strictly increasing");
  }
}

constexpr long kBruteForceScanLimit = 20000000;

struct ScanWindow {
  std::optional<Integer> lo, hi;  // inclusive lo, exclusive hi; clipped to [ceil(k0), v_rho/(1-eps))
  std::size_t max_results = 0;    // 0 keeps everything
};

namespace reduce_detail {

inline bool fits(const Integer& a) { return a.fits_slong_p() && abs_int(a) < Integer(1L << 40); }

}  // namespace reduce_detail

/// Every k in [ceil(k0), v_rho/(1-eps)) passing the residue test, optionally restricted to a window.
inline std::vector<Integer> find_k_bruteforce(const std::vector<Integer>& v, const ReductionConfig& cfg, const ScanWindow& win = {}) {
  check_exponent_vector(v);
  Integer lo = ceil_rational(cfg.k0);
  Integer hi = ceil_rational(Rational(v.back()) / (Rational(1) - cfg.eps));  // exclusive
  if (win.lo && *win.lo > lo) lo = *win.lo;
  if (win.hi && *win.hi < hi) hi = *win.hi;
  if (hi - lo > Integer(kBruteForceScanLimit)) throw Error(ErrorCode::InvalidArgument, "scan range too large for brute force");
  std::vector<Integer> out;
  const bool fast = reduce_detail::fits(hi) && std::all_of(v.begin(), v.end(), reduce_detail::fits) &&
                    reduce_detail::fits(cfg.eps.get_num()) && reduce_detail::fits(cfg.eps.get_den());
  if (fast) {
    // r < eps k  <=>  r den < num k, and r > (1-eps) k  <=>  r den > (den - num) k
    const long num = cfg.eps.get_num().get_si(), den = cfg.eps.get_den().get_si();
    std::vector<long> vv;
    for (const auto& x : v) vv.push_back(x.get_si());
    for (long k = lo.get_si(); k < hi.get_si(); ++k) {
      bool ok = true;
      for (long x : vv) {
        const __int128 r = x % k;
        if (!(r * den < static_cast<__int128>(num) * k || r * den > static_cast<__int128>(den - num) * k)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      out.emplace_back(k);
      if (win.max_results && out.size() >= win.max_results) break;
    }
    return out;
  }
  for (Integer k = lo; k < hi; ++k) {
    if (!residues_ok(v, k, cfg.eps)) continue;
    out.push_back(k);
    if (win.max_results && out.size() >= win.max_results) break;
  }
  return out;
}

struct ConstructiveK {
  Integer k;
  Integer d;                  // d = d1' - d2'
  Integer d1, d2;             // colliding multiples of D
  std::vector<Integer> w;     // nearest integers to d x_j
};

/// The box-principle construction with a chosen D (default 1).
inline ConstructiveK find_k_constructive(const std::vector<Integer>& v, const ReductionConfig& cfg, const Integer& D = 1) {
  check_exponent_vector(v);
  const Integer& vr = v.back();
  const auto rho = static_cast<std::int64_t>(v.size());
  if (Rational(vr) < v_bound(rho, cfg)) throw Error(ErrorCode::BelowThreshold, "v_rho is below V(rho)");
  if (D < 1) throw Error(ErrorCode::InvalidArgument, "D must be positive");
  ConstructiveK out;
  if (rho == 1) {
    out.k = vr;
    out.d = 1;
  } else {
    const Integer boxes = pow_int(cfg.kappa, static_cast<unsigned long>(rho - 1));
    if (boxes > Integer(50000000)) throw Error(ErrorCode::InvalidArgument, "too many boxes for the collision scan");
    std::map<std::vector<Integer>, Integer> seen;
    bool found = false;
    for (Integer i = 1; i <= boxes + 1 && !found; ++i) {
      const Integer dp = i * D;
      std::vector<Integer> cube;
      for (std::int64_t j = 0; j + 1 < rho; ++j) {
        // floor(kappa * {dp * v_j / v_rho})
        const Integer num = mod_pos(dp * v[static_cast<std::size_t>(j)], vr);
        cube.push_back(fdiv(cfg.kappa * num, vr));
      }
      auto [it, fresh] = seen.emplace(cube, dp);
      if (!fresh) {
        out.d1 = dp;
        out.d2 = it->second;
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::ConstructionFailed, "box principle produced no collision");
    out.d = out.d1 - out.d2;
    for (const auto& vj : v) out.w.push_back(floor_rational(Rational(out.d * vj, vr) + Rational(1, 2)));
    const Rational d(out.d), ik = Rational(1) / Rational(cfg.kappa);
    Rational lo = Rational(vr) * (d + ik) / (d * (d + cfg.eps));
    lo.canonicalize();
    Rational hi = Rational(vr) * (d - ik) / (d * (d - cfg.eps));
    hi.canonicalize();
    out.k = floor_rational(lo) + 1;
    if (!(Rational(out.k) < hi)) throw Error(ErrorCode::ConstructionFailed, "empty k interval");
  }
  const Rational top = Rational(vr) / (Rational(1) - cfg.eps);
  if (Rational(out.k) < cfg.k0 || !(Rational(out.k) < top) || !residues_ok(v, out.k, cfg.eps))
    throw Error(ErrorCode::ConstructionFailed, "constructed k fails verification");
  return out;
}

// ---------------------------------------------------------------------------
// exponent folding

struct FoldedTerm {
  Integer coeff;
  std::int64_t d = 0, dbar = 0, ell = 0;
};

struct ReductionWitness {
  std::int64_t k = 0;
  std::int64_t floor_eps_k = 0;
  std::vector<FoldedTerm> folded;
  std::int64_t M = 0;
};

/// G(x,y) = sum a_j x^dbar_j y^l_j with d_j + floor(eps k) = k l_j + dbar_j.
inline std::pair<BiPoly, ReductionWitness> fold_exponents(const IntPoly& F, std::int64_t k, const ReductionConfig& cfg) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be at least 2");
  if (F.is_zero() || F.constant_term() == 0) throw Error(ErrorCode::ZeroConstantTerm, "fold needs F(0) != 0");
  ReductionWitness w;
  w.k = k;
  w.floor_eps_k = floor_rational(cfg.eps * Rational(k)).get_si();
  std::map<std::int64_t, std::vector<Term>> rows;
  for (const auto& t : F.terms()) {
    const std::int64_t s = t.exp + w.floor_eps_k;
    FoldedTerm ft{t.coeff, t.exp, s % k, s / k};
    rows[ft.ell].push_back(Term{ft.dbar, t.coeff});
    w.folded.push_back(ft);
  }
  std::vector<IntPoly> v(static_cast<std::size_t>(rows.rbegin()->first) + 1);
  for (auto& [l, ts] : rows) v[static_cast<std::size_t>(l)] = IntPoly::from_terms(std::move(ts));
  BiPoly G(std::move(v));
  w.M = G.ord_x();
  if (G.eval_y_power(k) != F.shifted(w.floor_eps_k)) throw Error(ErrorCode::ConstructionFailed, "fold identity failed");
  return {G, w};
}

// ---------------------------------------------------------------------------
// the two twisted families

struct TwistedInstance {
  Shape shape = Shape::F1;
  std::int64_t t = 0, ell = 1;
  BiPoly poly;
};

/// F1 = sum f_j x^(j t) y^(j l), F2 = sum f_j x^((r-j) t) y^(j l).
inline BiPoly twisted_instance(const FamilySpec& spec, Shape shape, std::int64_t t, std::int64_t ell) {
  if (t < 0 || ell < 1) throw Error(ErrorCode::InvalidArgument, "need t >= 0 and l >= 1");
  const std::int64_t r = spec.r();
  std::vector<IntPoly> v(static_cast<std::size_t>(r * ell) + 1);
  for (std::int64_t j = 0; j <= r; ++j) {
    const std::int64_t s = shape == Shape::F1 ? j * t : (r - j) * t;
    v[static_cast<std::size_t>(j * ell)] = spec.coeff(j).shifted(s);
  }
  return BiPoly(std::move(v));
}

inline std::pair<TwistedInstance, TwistedInstance> twisted_pair(const FamilySpec& spec, std::int64_t t, std::int64_t ell) {
  return {TwistedInstance{Shape::F1, t, ell, twisted_instance(spec, Shape::F1, t, ell)},
          TwistedInstance{Shape::F2, t, ell, twisted_instance(spec, Shape::F2, t, ell)}};
}

struct ConstraintData {
  Rational eps;
  Rational k0;
  std::int64_t max_deg = 0;
  std::int64_t r = 0;
  std::string t_bound = "t < k/(r(r+1))";
  Rational t_bound_factor;  // 1/(r(r+1))

  /// n for a decomposition (k, l, t) of the given family shape.
  Integer n_of(Shape s, const Integer& k, const Integer& ell, const Integer& t) const {
    const Integer base = k * ell;
    return s == Shape::F1 ? Integer(base + t) : Integer(base - t);
  }
  bool t_admissible(const Integer& k, const Integer& t) const { return t >= 0 && Rational(t) < t_bound_factor * Rational(k); }
};

/// eps = 1/(2r+2), k0 = 2 max deg f_j (raised to 2 when every f_j is constant).
inline ConstraintData constraint_data(const FamilySpec& spec) {
  ConstraintData c;
  c.r = spec.r();
  c.eps = Rational(1, static_cast<unsigned long>(2 * c.r + 2));
  for (const auto& fj : spec.f)
    if (!fj.is_zero()) c.max_deg = std::max(c.max_deg, fj.deg());
  c.k0 = Rational(std::max<std::int64_t>(2, 2 * c.max_deg));
  c.t_bound_factor = Rational(1, static_cast<unsigned long>(c.r * (c.r + 1)));
  return c;
}


/// Exponent list of F(x,x^n) with the positions n, 2n, ..., rn always present.
inline std::vector<Integer> block_exponents(const FamilySpec& spec, std::int64_t n) {
  std::set<std::int64_t> e{0};
  for (std::int64_t j = 0; j <= spec.r(); ++j) {
    if (j > 0) e.insert(j * n);
    for (const auto& t : spec.coeff(j).terms()) e.insert(j * n + t.exp);
  }
  std::vector<Integer> v;
  for (auto x : e) v.emplace_back(static_cast<long>(x));
  return v;
}

struct TwistMatch {
  Shape shape = Shape::F1;
  std::int64_t t = 0, ell = 0, M0 = 0;
};

/// Writes G as x^M0 times one of the two twisted instances with n = k l + t (F1) or n = k l - t (F2), t < k/(r(r+1)).
inline std::optional<TwistMatch> match_twisted(const FamilySpec& spec, std::int64_t n, std::int64_t k, const BiPoly& G, const Rational& eps) {
  const std::int64_t r = spec.r();
  const std::int64_t fk = floor_rational(eps * Rational(k)).get_si();
  const auto small = [&](std::int64_t t) { return t >= 0 && Rational(t) < Rational(k, r * (r + 1)); };
  const auto same = [&](const BiPoly& H, std::int64_t M0) { return M0 >= 0 ? G == H.shifted_x(M0) : G.shifted_x(-M0) == H; };
  {
    const std::int64_t ell = n / k, t = n - k * ell;
    if (ell >= 1 && small(t) && same(twisted_instance(spec, Shape::F1, t, ell), fk)) return TwistMatch{Shape::F1, t, ell, fk};
  }
  {
    const std::int64_t ell = (n + k - 1) / k, t = k * ell - n;
    if (ell >= 1 && small(t) && same(twisted_instance(spec, Shape::F2, t, ell), fk - r * t)) return TwistMatch{Shape::F2, t, ell, fk - r * t};
  }
  return std::nullopt;
}

}  // namespace lacunary

#endif  // LACUNARY_LACUNARY_REDUCE_HPP
