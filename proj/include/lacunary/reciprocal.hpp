#ifndef LACUNARY_RECIPROCAL_HPP
#define LACUNARY_RECIPROCAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "int_poly.hpp"
#include "mod_poly.hpp"
#include "poly_ops.hpp"
#include "unifactor.hpp"

namespace lacunary {

// ---------------------------------------------------------------------------
// concrete polynomials

struct ReciprocalSplit {
  Factorization reciprocal_part;
  IntPoly nonreciprocal_part;
};

inline ReciprocalSplit split_reciprocal(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "split of zero");
  if (f.constant_term() == 0) throw Error(ErrorCode::ZeroConstantTerm, "J-normalize before splitting");
  const Factorization fz = factor_z(f);
  ReciprocalSplit out;
  out.nonreciprocal_part = IntPoly::constant(fz.unit * fz.content);
  for (const auto& [g, m] : fz.factors) {
    if (is_reciprocal(g))
      out.reciprocal_part.factors.emplace_back(g, m);
    else
      out.nonreciprocal_part *= g.pow(static_cast<unsigned>(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// families sum_i c_i(x) x^(a_i n + b_i)

struct FamilyTerm {
  IntPoly coeff;
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const FamilyTerm& u, const FamilyTerm& v) { return u.coeff == v.coeff && u.a == v.a && u.b == v.b; }
};

struct Family {
  std::vector<FamilyTerm> terms;

  /// Least n >= 0 for which every exponent a n + b (shifted by the coefficient's order) is non-negative.
  std::int64_t min_valid_n() const {
    std::int64_t n0 = 0;
    for (const auto& t : terms) {
      if (t.coeff.is_zero()) continue;
      const std::int64_t lo = t.b + t.coeff.ord();
      if (lo >= 0) continue;
      if (t.a <= 0) throw Error(ErrorCode::UnsupportedDegreePattern, "term with a negative exponent for every n");
      n0 = std::max(n0, (-lo + t.a - 1) / t.a);
    }
    return n0;
  }

  IntPoly eval(std::int64_t n) const {
    LaurentPoly acc;
    for (const auto& t : terms) acc += to_laurent(t.coeff).shifted(t.a * n + t.b);
    if (!acc.is_zero() && acc.ord() < 0) throw Error(ErrorCode::NotAPolynomial, "family member has negative exponents at n = " + std::to_string(n));
    return to_int_poly(acc);
  }
};

/// Family F(x, x^(n + shift)) of a coefficient list f_0..f_r.
inline Family family_from_coefficients(const std::vector<IntPoly>& f, std::int64_t shift = 0) {
  Family fam;
  for (std::size_t j = 0; j < f.size(); ++j)
    if (!f[j].is_zero()) fam.terms.push_back(FamilyTerm{f[j], static_cast<std::int64_t>(j), static_cast<std::int64_t>(j) * shift});
  return fam;
}

/// Merges terms with equal a into one block c(x) x^(a n + b) with c(0) != 0, sorted by a.
inline Family group_blocks(const Family& fam) {
  std::map<std::int64_t, LaurentPoly> by_a;
  for (const auto& t : fam.terms) by_a[t.a] += to_laurent(t.coeff).shifted(t.b);
  Family out;
  for (auto& [a, c] : by_a) {
    if (c.is_zero()) continue;
    const std::int64_t b = c.ord();
    out.terms.push_back(FamilyTerm{to_int_poly(c.shifted(-b)), a, b});
  }
  return out;
}

struct TildeDifference {
  Family blocks;                       // grouped family F
  Family tilde;                        // grouped family of the reciprocal
  Family difference;                   // F minus its reciprocal, grouped
  std::int64_t degree_a = 0;           // deg F(x,x^n) = degree_a n + degree_b for n >= threshold
  std::int64_t degree_b = 0;
  std::int64_t threshold = 0;          // blocks are disjoint and all exponents valid from here on
  bool is_zero() const { return difference.terms.empty(); }
  bool collapsed() const { return difference.terms.size() == 1; }
};

/// Symbolic F - F~ for a family whose degree is affine in n once blocks separate.
inline TildeDifference family_tilde_difference(const Family& fam) {
  TildeDifference out;
  out.blocks = group_blocks(fam);
  const auto& bl = out.blocks.terms;
  if (bl.empty()) throw Error(ErrorCode::UnsupportedDegreePattern, "the family is identically zero");
  // blocks must eventually be ordered by exponent with disjoint supports
  std::int64_t n0 = out.blocks.min_valid_n();
  for (std::size_t i = 0; i + 1 < bl.size(); ++i) {
    // a_i n + b_i + deg c_i < a_{i+1} n + b_{i+1}
    const std::int64_t da = bl[i + 1].a - bl[i].a;
    const std::int64_t need = bl[i].b + bl[i].coeff.deg() - bl[i + 1].b + 1;
    if (need > 0) n0 = std::max(n0, (need + da - 1) / da);
  }
  out.threshold = n0;
  const FamilyTerm& top = bl.back();
  out.degree_a = top.a;
  out.degree_b = top.b + top.coeff.deg();
  Family tilde;
  for (const auto& t : bl)
    tilde.terms.push_back(FamilyTerm{reciprocal(t.coeff), out.degree_a - t.a, out.degree_b - t.b - t.coeff.deg()});
  out.tilde = group_blocks(tilde);
  Family diff = out.blocks;
  for (const auto& t : out.tilde.terms) diff.terms.push_back(FamilyTerm{-t.coeff, t.a, t.b});
  out.difference = group_blocks(diff);
  return out;
}

// ---------------------------------------------------------------------------
// divisibility of family members by a fixed polynomial

struct FamilyDivisibility {
  std::int64_t period = 1;
  std::int64_t preperiod = 0;
  std::vector<std::int64_t> residues;  // n mod period with u | F(n), for n >= preperiod
  bool exact = true;                   // false: residues are a necessary condition only
  std::vector<std::uint64_t> primes;   // primes used by the modular test
};

namespace reciprocal_detail {

// Smallest divisor d of m whose shifts preserve the residue set.
inline void minimize_period(FamilyDivisibility& r) {
  const std::int64_t m = r.period;
  std::vector<char> in(static_cast<std::size_t>(m), 0);
  for (auto v : r.residues) in[static_cast<std::size_t>(v)] = 1;
  for (std::int64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    bool ok = true;
    for (std::int64_t i = 0; i < m && ok; ++i)
      if (in[static_cast<std::size_t>(i)] != in[static_cast<std::size_t>((i + d) % m)]) ok = false;
    if (ok) {
      std::vector<std::int64_t> res;
      for (auto v : r.residues)
        if (v < d) res.push_back(v);
      r.period = d;
      r.residues = res;
      return;
    }
  }
}

// Order of x modulo a monic u over Z when u | x^m - 1 for some m <= limit.
inline std::optional<std::int64_t> cyclotomic_order(const IntPoly& u, std::int64_t limit) {
  if (abs_int(u.leading_coeff()) != 1 || abs_int(u.constant_term()) != 1) return std::nullopt;
  const IntPoly one = IntPoly::constant(1);
  IntPoly r = IntPoly::x_power(0);
  const IntPoly x = IntPoly::x_power(1);
  for (std::int64_t m = 1; m <= limit; ++m) {
    r = try_divide(r * x, u)->remainder;
    // x^m mod u over Z: a cyclotomic product has bounded remainders
    if (height(r) > Integer(1) << 64) return std::nullopt;
    if (r == one) return m;
  }
  return std::nullopt;
}

// Order of x in (F_p[x]/(u))^*; nullopt beyond the limit.
inline std::optional<std::int64_t> order_mod_p(const ModPoly& u, std::int64_t limit) {
  const auto p = u.modulus();
  const ModPoly x = ModPoly::x_power(p, 1) % u;
  ModPoly r = x;
  for (std::int64_t m = 1; m <= limit; ++m) {
    if (r.is_one()) return m;
    r = (r * x) % u;
  }
  return std::nullopt;
}

}  // namespace reciprocal_detail

constexpr std::int64_t kPeriodSearchLimit = 100000;

/// Residue classes of n (beyond the family's validity threshold) with u | F(x, x^n).
inline FamilyDivisibility family_divides(const IntPoly& u, const Family& fam) {
  if (u.is_zero() || u.constant_term() == 0) throw Error(ErrorCode::ZeroConstantTerm, "divisor must have non-zero constant term");
  if (u.is_constant()) throw Error(ErrorCode::InvalidArgument, "divisor must have positive degree");
  FamilyDivisibility out;
  out.preperiod = fam.min_valid_n();
  const IntPoly uu = normalize_sign(u);
  if (auto m = reciprocal_detail::cyclotomic_order(uu, 4096)) {
    out.period = *m;
    for (std::int64_t rho = 0; rho < *m; ++rho) {
      IntPoly acc;
      for (const auto& t : fam.terms) {
        // exponents are taken mod the order of x, valid for every n >= preperiod
        std::int64_t e = ((t.a * rho + t.b) % *m + *m) % *m;
        acc += t.coeff.shifted(e);
      }
      if (try_divide(acc, uu)->remainder.is_zero()) out.residues.push_back(rho);
    }
    reciprocal_detail::minimize_period(out);
    return out;
  }
  // modular necessary condition: u | F(n) implies u mod p | F(n) mod p
  out.exact = false;
  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> classes;
  for (std::uint64_t p = 3; out.primes.size() < 6 && p < 200; p = next_prime_u64(p + 1)) {
    const Integer P(static_cast<unsigned long>(p));
    if (divides(P, uu.leading_coeff()) || divides(P, uu.constant_term())) continue;
    const ModPoly up = mod_reduce(uu, p);
    auto ord = reciprocal_detail::order_mod_p(up, kPeriodSearchLimit);
    if (!ord) continue;
    out.primes.push_back(p);
    const std::int64_t m = *ord;
    // x^e mod u_p table for e < m
    std::vector<ModPoly> xp;
    xp.reserve(static_cast<std::size_t>(m));
    ModPoly cur = ModPoly::constant(p, 1);
    for (std::int64_t e = 0; e < m; ++e) {
      xp.push_back(cur);
      cur = (cur * ModPoly::x_power(p, 1)) % up;
    }
    std::vector<std::int64_t> res;
    for (std::int64_t rho = 0; rho < m; ++rho) {
      ModPoly acc(p);
      for (const auto& t : fam.terms) {
        ModPoly c = mod_reduce(t.coeff, p) % up;
        std::int64_t e = ((t.a * rho + t.b) % m + m) % m;
        acc = acc + (c * xp[static_cast<std::size_t>(e)]) % up;
      }
      if (acc.is_zero()) res.push_back(rho);
    }
    if (res.empty()) {
      out.exact = true;  // no member is ever divisible
      out.period = m;
      out.residues.clear();
      return out;
    }
    classes.emplace_back(m, std::move(res));
  }
  if (classes.empty()) throw Error(ErrorCode::InvalidArgument, "no usable prime for the modular divisibility test");
  // intersect the residue systems over their common period when it stays small
  std::int64_t L = 1;
  std::size_t used = 0;
  for (; used < classes.size(); ++used) {
    const std::int64_t next = std::lcm(L, classes[used].first);
    if (next > 2000000) break;
    L = next;
  }
  out.period = L;
  for (std::int64_t n = 0; n < L; ++n) {
    bool ok = true;
    for (std::size_t i = 0; i < used && ok; ++i) {
      const auto& [m, res] = classes[i];
      ok = std::binary_search(res.begin(), res.end(), n % m);
    }
    if (ok) out.residues.push_back(n);
  }
  reciprocal_detail::minimize_period(out);
  return out;
}

// ---------------------------------------------------------------------------
// exclusion of reciprocal factors for all large n

enum class ExclusionReason { LeadingCoefficient, ConstantTerm, NeverDivides, NotExcluded };

inline const char* to_string(ExclusionReason r) {
  switch (r) {
    case ExclusionReason::LeadingCoefficient: return "leading-coefficient";
    case ExclusionReason::ConstantTerm: return "constant-term";
    case ExclusionReason::NeverDivides: return "never-divides";
    case ExclusionReason::NotExcluded: return "not-excluded";
  }
  return "unknown";
}

struct ExclusionCandidate {
  IntPoly factor;
  ExclusionReason reason = ExclusionReason::NotExcluded;
  std::optional<FamilyDivisibility> divisibility;
};

enum class ReciprocalStatus { ZeroDifference, Collapsed, MultiBlock };

inline const char* to_string(ReciprocalStatus s) {
  switch (s) {
    case ReciprocalStatus::ZeroDifference: return "zero-difference";
    case ReciprocalStatus::Collapsed: return "collapsed";
    case ReciprocalStatus::MultiBlock: return "multi-block";
  }
  return "unknown";
}

struct ReciprocalAnalysis {
  ReciprocalStatus status = ReciprocalStatus::MultiBlock;
  TildeDifference tilde;
  std::optional<FamilyTerm> block;             // the single block u(x) x^(a n + b)
  std::optional<Factorization> block_factorization;
  std::vector<ExclusionCandidate> candidates;  // reciprocal irreducible factors of u
  bool all_excluded = false;
};

/// Rules out reciprocal irreducible factors of F(x,x^n) for every n beyond the threshold,
/// when F - F~ is a single block.
inline ReciprocalAnalysis analyze_reciprocal(const Family& fam) {
  ReciprocalAnalysis out;
  out.tilde = family_tilde_difference(fam);
  if (out.tilde.is_zero()) {
    out.status = ReciprocalStatus::ZeroDifference;
    return out;
  }
  if (!out.tilde.collapsed()) {
    out.status = ReciprocalStatus::MultiBlock;
    return out;
  }
  out.status = ReciprocalStatus::Collapsed;
  out.block = out.tilde.difference.terms.front();
  const IntPoly& u = out.block->coeff;
  out.block_factorization = factor_z(u);
  const auto& bl = out.tilde.blocks.terms;
  const Integer lc_family = bl.back().coeff.leading_coeff();
  // constant term is n-independent when the lowest block sits at exponent 0 for every n
  std::optional<Integer> const_family;
  if (bl.front().a == 0 && bl.front().b == 0) const_family = bl.front().coeff.constant_term();
  out.all_excluded = true;
  for (const auto& [q, m] : out.block_factorization->factors) {
    if (!is_reciprocal(q)) continue;
    ExclusionCandidate c;
    c.factor = q;
    if (!divides(q.leading_coeff(), lc_family)) {
      c.reason = ExclusionReason::LeadingCoefficient;
    } else if (const_family && !divides(q.constant_term(), *const_family)) {
      c.reason = ExclusionReason::ConstantTerm;
    } else {
      c.divisibility = family_divides(q, out.tilde.blocks);
      c.reason = c.divisibility->residues.empty() ? ExclusionReason::NeverDivides : ExclusionReason::NotExcluded;
    }
    if (c.reason == ExclusionReason::NotExcluded) out.all_excluded = false;
    out.candidates.push_back(std::move(c));
  }
  return out;
}

}  // namespace lacunary

#endif  // LACUNARY_RECIPROCAL_HPP
