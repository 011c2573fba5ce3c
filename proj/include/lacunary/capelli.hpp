#ifndef LACUNARY_CAPELLI_HPP
#define LACUNARY_CAPELLI_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bi_poly.hpp"
#include "bigint.hpp"
#include "error.hpp"
#include "int_poly.hpp"
#include "mod_poly.hpp"
#include "poly_ops.hpp"
#include "text.hpp"
#include "unifactor.hpp"

namespace lacunary {

/// F(x,y) = sum_j f_j(x) y^j. Zero entries are kept so that gaps in j stay visible.
struct FamilySpec {
  std::vector<IntPoly> f;

  std::int64_t r() const { return static_cast<std::int64_t>(f.size()) - 1; }
  const IntPoly& coeff(std::int64_t j) const { return f[static_cast<std::size_t>(j)]; }
  BiPoly to_bipoly() const { return BiPoly(f); }

  friend bool operator==(const FamilySpec& a, const FamilySpec& b) { return a.f == b.f; }
};

inline FamilySpec spec_from_bipoly(const BiPoly& F) {
  FamilySpec s;
  for (std::int64_t j = 0; j <= F.deg_y(); ++j) s.f.push_back(F.ycoeff(j));
  return s;
}

/// Structural checks. The f0(0) != 0 requirement can be relaxed for use outside the lacunary setting.
inline void validate(const FamilySpec& spec, bool require_f0_constant = true) {
  if (spec.f.size() < 2) throw Error(ErrorCode::HypothesisViolation, "r must be at least 1");
  if (spec.f.back().is_zero()) throw Error(ErrorCode::HypothesisViolation, "f_r is zero");
  const IntPoly g = gcd_zx(spec.f);
  if (g.deg() > 0 || abs_int(g.constant_term()) != 1)
    throw Error(ErrorCode::HypothesisViolation, "coefficients share the factor " + to_text(g));
  if (require_f0_constant && spec.f.front().constant_term() == 0)
    throw Error(ErrorCode::HypothesisViolation, "f_0(0) = 0");
}

// ---------------------------------------------------------------------------
// prime set

struct PrimeSet {
  std::vector<std::uint64_t> primes;
  Integer bound;
};

inline std::vector<std::uint64_t> odd_primes_up_to(const Integer& bound) {
  std::vector<std::uint64_t> out;
  if (bound < 3) return out;
  if (bound > Integer(10000000)) throw Error(ErrorCode::InvalidArgument, "prime bound too large: " + bound.get_str());
  const std::uint64_t b = bound.get_ui();
  for (std::uint64_t p = 3; p <= b; p = next_prime_u64(p + 1)) out.push_back(p);
  return out;
}

inline PrimeSet prime_set(const FamilySpec& spec) {
  PrimeSet ps;
  ps.bound = 0;
  for (const auto& fj : spec.f) {
    if (fj.is_zero()) continue;
    ps.bound = std::max(ps.bound, Integer(static_cast<long>(fj.deg())));
    ps.bound = std::max(ps.bound, height(fj));
  }
  ps.primes = odd_primes_up_to(ps.bound);
  return ps;
}

// ---------------------------------------------------------------------------
// p-th power congruence

namespace capelli_detail {

inline std::vector<std::int64_t> surviving_exponents(const IntPoly& f, std::uint64_t p) {
  const Integer P(static_cast<unsigned long>(p));
  std::vector<std::int64_t> out;
  for (const auto& t : f.terms())
    if (!divides(P, t.coeff)) out.push_back(t.exp);
  return out;
}

inline std::int64_t mod_nonneg(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace capelli_detail

/// True iff F = sum g_j(x)^p y^j mod p is possible, i.e. every surviving exponent is divisible by p.
inline bool pth_power_obstruction(const BiPoly& F, std::uint64_t p) {
  if (!is_prime_u64(p)) throw Error(ErrorCode::InvalidArgument, "not a prime: " + std::to_string(p));
  for (const auto& fj : F.ycoeffs())
    for (auto e : capelli_detail::surviving_exponents(fj, p))
      if (e % static_cast<std::int64_t>(p) != 0) return false;
  return true;
}

inline bool pth_power_obstruction(const FamilySpec& spec, std::uint64_t p) { return pth_power_obstruction(spec.to_bipoly(), p); }

/// Same test for x^-M F with M unknown: all surviving exponents must agree mod p.
inline bool pth_power_obstruction_up_to_x(const BiPoly& F, std::uint64_t p) {
  const auto P = static_cast<std::int64_t>(p);
  std::optional<std::int64_t> seen;
  for (const auto& fj : F.ycoeffs())
    for (auto e : capelli_detail::surviving_exponents(fj, p)) {
      const std::int64_t r = capelli_detail::mod_nonneg(e, P);
      if (seen && *seen != r) return false;
      seen = r;
    }
  return true;
}

/// Some single coefficient keeps two surviving exponents that differ mod p.
/// Shifting every f_j by an x-power never repairs this, so p is ruled out for every twist.
inline std::optional<std::int64_t> internal_span_witness(const FamilySpec& spec, std::uint64_t p) {
  const auto P = static_cast<std::int64_t>(p);
  for (std::int64_t j = 0; j <= spec.r(); ++j) {
    auto es = capelli_detail::surviving_exponents(spec.coeff(j), p);
    for (std::size_t i = 1; i < es.size(); ++i)
      if ((es[i] - es[0]) % P != 0) return j;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// the -4 beta^4 case

enum class CaseII { RuledOut, NotRuledOut, NotApplicable };

inline const char* to_string(CaseII c) {
  switch (c) {
    case CaseII::RuledOut: return "RuledOut";
    case CaseII::NotRuledOut: return "NotRuledOut";
    case CaseII::NotApplicable: return "NotApplicable";
  }
  return "unknown";
}

struct CaseIIResult {
  CaseII status = CaseII::NotApplicable;
  std::string reason;
};

inline bool divisible_by(const IntPoly& f, long m) { return f.is_zero() || divides(Integer(m), content(f)); }

/// Decides whether F(x,y^4) can only become reducible through the -4 beta^4 route.
/// Works on x^-M F, so the answer is the same for F and for any x-power multiple of it.
inline CaseIIResult case_ii_filter(const BiPoly& Fin) {
  const BiPoly F = strip_x(Fin).core;
  const std::int64_t r = F.deg_y();
  CaseIIResult out;
  if (r != 4 && r % 2 == 0) {
    out.reason = "r = " + std::to_string(r) + " is even and not 4";
    return out;
  }
  std::vector<std::string> hits;
  if (divisible_by(F.ycoeff(0), 2)) hits.push_back("f0 divisible by 2");
  if (r == 4 && divisible_by(F.ycoeff(3), 2)) hits.push_back("f3 divisible by 2");
  if (divisible_by(F.ycoeff(r), 4)) hits.push_back("f" + std::to_string(r) + " divisible by 4");
  if (pth_power_obstruction(F, 2)) hits.push_back("2-congruence holds");
  if (hits.empty()) {
    out.status = CaseII::RuledOut;
    out.reason = r == 4 ? "f0, f3 odd, f4 not divisible by 4, no 2-congruence"
                        : "f0 odd, f" + std::to_string(r) + " not divisible by 4, no 2-congruence";
    return out;
  }
  out.status = CaseII::NotRuledOut;
  for (std::size_t i = 0; i < hits.size(); ++i) out.reason += (i ? "; " : "") + hits[i];
  return out;
}

inline CaseIIResult case_ii_filter(const FamilySpec& spec) { return case_ii_filter(spec.to_bipoly()); }

// ---------------------------------------------------------------------------
// classification

enum class OracleOutcome { Irreducible, Reducible, Inconclusive };

inline const char* to_string(OracleOutcome o) {
  switch (o) {
    case OracleOutcome::Irreducible: return "Irreducible";
    case OracleOutcome::Reducible: return "Reducible";
    case OracleOutcome::Inconclusive: return "Inconclusive";
  }
  return "unknown";
}

/// Decides whether a bivariate polynomial is a power of x times an irreducible.
using BivarOracle = std::function<OracleOutcome(const BiPoly&)>;

struct CapelliWitness {
  std::int64_t modulus = 0;   // odd prime, 2 or 4
  BiPoly checked;             // F(x, y^modulus), empty when discharged
  std::string discharge;      // non-empty when no oracle call was needed
  OracleOutcome verdict = OracleOutcome::Irreducible;
};

enum class CapelliStatus { IrreducibleForAllN, ReducibleForNDivisibleBy, Inconclusive };

inline const char* to_string(CapelliStatus s) {
  switch (s) {
    case CapelliStatus::IrreducibleForAllN: return "IrreducibleForAllN";
    case CapelliStatus::ReducibleForNDivisibleBy: return "ReducibleForNDivisibleBy";
    case CapelliStatus::Inconclusive: return "Inconclusive";
  }
  return "unknown";
}

struct CapelliVerdict {
  CapelliStatus status = CapelliStatus::IrreducibleForAllN;
  std::vector<CapelliWitness> witnesses;     // sorted by modulus
  std::vector<std::int64_t> reducible_moduli;
  bool reducible_at_n = false;               // some reducible modulus divides n
  PrimeSet primes;
};

/// F(x,y^m) for every m in P u {2,4}; the verdict for n follows from which moduli divide it.
inline CapelliVerdict classify_capelli(const FamilySpec& spec, std::int64_t n, const BivarOracle& oracle) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  if (spec.f.size() < 2 || spec.f.back().is_zero()) throw Error(ErrorCode::HypothesisViolation, "need r >= 1 and f_r != 0");
  bool nonconstant = false;
  for (const auto& fj : spec.f) nonconstant = nonconstant || (!fj.is_zero() && fj.deg() > 0);
  if (!nonconstant) throw Error(ErrorCode::HypothesisViolation, "every f_j is constant");
  const BiPoly F = spec.to_bipoly();
  if (F.ord_x() > 0) throw Error(ErrorCode::HypothesisViolation, "F(x,y) is divisible by x");
  const OracleOutcome base = oracle(F);
  if (base == OracleOutcome::Reducible) throw Error(ErrorCode::HypothesisViolation, "F(x,y) is reducible");
  if (base == OracleOutcome::Inconclusive) throw Error(ErrorCode::HypothesisViolation, "irreducibility of F(x,y) not established");

  CapelliVerdict v;
  v.primes = prime_set(spec);
  std::vector<std::int64_t> moduli{2, 4};
  for (auto p : v.primes.primes) moduli.push_back(static_cast<std::int64_t>(p));
  std::sort(moduli.begin(), moduli.end());
  bool inconclusive = false;
  for (auto m : moduli) {
    CapelliWitness w;
    w.modulus = m;
    if (m == 4) {
      auto c = case_ii_filter(F);
      if (c.status == CaseII::RuledOut) w.discharge = "case (ii) filter: " + c.reason;
    } else if (!pth_power_obstruction(F, static_cast<std::uint64_t>(m))) {
      w.discharge = "no " + std::to_string(m) + "-th power congruence";
    }
    if (w.discharge.empty()) {
      w.checked = F.compose_y_power(m);
      w.verdict = oracle(w.checked);
    }
    if (w.verdict == OracleOutcome::Reducible) {
      v.reducible_moduli.push_back(m);
      if (n % m == 0) v.reducible_at_n = true;
    }
    if (w.verdict == OracleOutcome::Inconclusive) inconclusive = true;
    v.witnesses.push_back(std::move(w));
  }
  if (!v.reducible_moduli.empty()) v.status = CapelliStatus::ReducibleForNDivisibleBy;
  else if (inconclusive) v.status = CapelliStatus::Inconclusive;
  return v;
}

// ---------------------------------------------------------------------------
// univariate Capelli via the norm of a root

struct UnivariateCapelliWitness {
  std::int64_t modulus = 0;  // prime p or 4
  bool irreducible = true;   // w(x^modulus)
};

struct UnivariateCapelliResult {
  bool irreducible = true;
  Rational norm;
  bool norm_is_unit = false;                        // +-1: a p-th power for every p
  std::vector<std::uint64_t> norm_power_primes;     // primes p with norm a p-th power in Q (when not a unit)
  std::vector<UnivariateCapelliWitness> witnesses;
};

namespace capelli_detail {

inline bool is_rational_pth_power(const Rational& q, std::uint64_t p) {
  Integer num = q.get_num();
  const Integer den = q.get_den();
  if (num < 0) {
    if (p == 2) return false;
    num = -num;
  }
  return exact_root(num, p).has_value() && exact_root(den, p).has_value();
}

inline std::vector<std::uint64_t> pth_power_primes(const Rational& q) {
  std::vector<std::uint64_t> out;
  const Integer a = abs_int(q.get_num()), b = q.get_den();
  const std::size_t bits = std::max(mpz_sizeinbase(a.get_mpz_t(), 2), mpz_sizeinbase(b.get_mpz_t(), 2));
  for (std::uint64_t p = 2; p <= bits; p = next_prime_u64(p + 1))
    if (is_rational_pth_power(q, p)) out.push_back(p);
  return out;
}

}  // namespace capelli_detail

inline Rational root_norm(const IntPoly& w) {
  Rational q = make_rational(w.constant_term(), w.leading_coeff());
  if (w.deg() % 2 == 1) q = -q;
  return q;
}

/// Irreducibility of w(x^n) for irreducible w; n = 0 asks for every positive n at once.
inline UnivariateCapelliResult univariate_capelli(const IntPoly& w, std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be non-negative");
  if (w.is_zero() || w.constant_term() == 0) throw Error(ErrorCode::HypothesisViolation, "w(0) = 0");
  if (!is_irreducible_z(w)) throw Error(ErrorCode::HypothesisViolation, "w is reducible");
  UnivariateCapelliResult out;
  out.norm = root_norm(w);
  out.norm_is_unit = abs(out.norm) == 1;
  if (!out.norm_is_unit) out.norm_power_primes = capelli_detail::pth_power_primes(out.norm);
  std::vector<std::int64_t> moduli;
  if (n == 0) {
    if (out.norm_is_unit) throw Error(ErrorCode::HypothesisViolation, "norm is a unit; every prime is a candidate");
    for (auto p : out.norm_power_primes)
      if (p != 2) moduli.push_back(static_cast<std::int64_t>(p));
    moduli.push_back(4);
  } else {
    std::int64_t m = n;
    for (std::int64_t p = 2; p <= m; ++p) {
      if (m % p != 0) continue;
      while (m % p == 0) m /= p;
      if (capelli_detail::is_rational_pth_power(out.norm, static_cast<std::uint64_t>(p))) moduli.push_back(p);
    }
    if (n % 4 == 0) {
      moduli.erase(std::remove(moduli.begin(), moduli.end(), 2), moduli.end());
      moduli.push_back(4);
    }
  }
  std::sort(moduli.begin(), moduli.end());
  for (auto m : moduli) {
    UnivariateCapelliWitness wt{m, is_irreducible_z(w.compose_power(m))};
    if (!wt.irreducible) out.irreducible = false;
    out.witnesses.push_back(wt);
  }
  return out;
}

}  // namespace lacunary

#endif  // LACUNARY_CAPELLI_HPP
