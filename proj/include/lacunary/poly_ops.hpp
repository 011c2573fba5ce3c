#ifndef LACUNARY_POLY_OPS_HPP
#define LACUNARY_POLY_OPS_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bigint.hpp"
#include "dense.hpp"
#include "error.hpp"
#include "int_poly.hpp"
#include "mod_poly.hpp"

namespace lacunary {

/// J-normalization: x^k f with k chosen so the result is a polynomial with non-zero constant term.
inline IntPoly j_normalize(const LaurentPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "J-normalization of zero");
  return to_int_poly(f.shifted(-f.ord()));
}

inline IntPoly j_normalize(const IntPoly& f) { return j_normalize(to_laurent(f)); }

/// x^deg(f) f(1/x).
inline IntPoly reciprocal(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "reciprocal of zero");
  const std::int64_t d = f.deg();
  std::vector<Term> out;
  out.reserve(f.term_count());
  for (const auto& t : f.terms()) out.push_back(Term{d - t.exp, t.coeff});
  return IntPoly::from_terms(std::move(out));
}

/// True iff f equals its reciprocal up to sign.
inline bool is_reciprocal(const IntPoly& f) {
  const IntPoly r = reciprocal(f);
  return r == f || r == -f;
}

inline Integer norm2_sq(const IntPoly& f) {
  Integer s = 0;
  for (const auto& t : f.terms()) mpz_addmul(s.get_mpz_t(), t.coeff.get_mpz_t(), t.coeff.get_mpz_t());
  return s;
}

inline Integer height(const IntPoly& f) {
  Integer h = 0;
  for (const auto& t : f.terms()) h = std::max(h, abs_int(t.coeff));
  return h;
}

/// Non-negative gcd of the coefficients (0 for the zero polynomial).
inline Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& t : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// f / content(f), sign chosen so the leading coefficient is positive.
inline IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  Integer c = content(f);
  if (f.leading_coeff() < 0) c = -c;
  return f.divided_by(c);
}

inline IntPoly normalize_sign(const IntPoly& f) { return f.leading_coeff() < 0 ? -f : f; }

namespace detail {

// Degree of gcd(a mod p, b mod p) for a large prime not dividing either leading coefficient.
inline std::optional<std::int64_t> modular_gcd_degree(const dense::Poly& a, const dense::Poly& b) {
  std::uint64_t p = 2147483629ULL;
  for (int attempt = 0; attempt < 4; ++attempt, p = next_prime_u64(p + 1000)) {
    const Integer P(static_cast<unsigned long>(p));
    if (divides(P, a.back()) || divides(P, b.back())) continue;
    auto reduce = [&](const dense::Poly& v) {
      std::vector<ModPoly::Coeff> c(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) c[i] = mod_pos(v[i], P).get_ui();
      return ModPoly(p, std::move(c));
    };
    return static_cast<std::int64_t>(gcd(reduce(a), reduce(b)).deg());
  }
  return std::nullopt;
}

// Primitive gcd of two primitive dense polynomials via the subresultant PRS.
inline dense::Poly subresultant_gcd(dense::Poly a, dense::Poly b) {
  if (dense::deg(a) < dense::deg(b)) std::swap(a, b);
  if (b.empty()) return dense::primitive_part(a);
  if (auto d = modular_gcd_degree(a, b); d && *d == 0) return dense::Poly{Integer(1)};
  Integer g = 1, h = 1;
  while (true) {
    const std::int64_t delta = dense::deg(a) - dense::deg(b);
    dense::Poly r = dense::prem(a, b);
    if (r.empty()) break;
    if (dense::deg(r) == 0) return dense::Poly{Integer(1)};
    a = std::move(b);
    const Integer divisor = g * pow_int(h, static_cast<unsigned long>(delta));
    b = dense::divexact_scalar(std::move(r), divisor);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else {
      // h = g^delta / h^(delta - 1)
      Integer num = pow_int(g, static_cast<unsigned long>(delta));
      Integer den = pow_int(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  return dense::primitive_part(b);
}

}  // namespace detail

/// gcd in Z[x], normalized to positive leading coefficient and positive content.
inline IntPoly gcd_zx(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::InvalidArgument, "gcd(0, 0) is undefined");
  if (f.is_zero()) return normalize_sign(g);
  if (g.is_zero()) return normalize_sign(f);
  const Integer c = gcd_int(content(f), content(g));
  const std::int64_t common_ord = std::min(f.ord(), g.ord());
  const IntPoly fs = primitive_part(f.shifted(-f.ord()));
  const IntPoly gs = primitive_part(g.shifted(-g.ord()));
  dense::Poly gd = detail::subresultant_gcd(fs.to_dense(), gs.to_dense());
  return c * IntPoly::from_dense(gd).shifted(common_ord);
}

inline IntPoly gcd_zx(const std::vector<IntPoly>& polys) {
  IntPoly g;
  bool any = false;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = any ? gcd_zx(g, p) : normalize_sign(p);
    any = true;
    if (g.is_constant() && g.constant_term() == 1) break;
  }
  if (!any) throw Error(ErrorCode::InvalidArgument, "gcd of zero polynomials is undefined");
  return g;
}

/// Exponent span deg - ord of a non-zero polynomial.
inline std::int64_t exponent_span(const IntPoly& f) { return f.deg() - f.ord(); }

}  // namespace lacunary

#endif  // LACUNARY_POLY_OPS_HPP
