#ifndef LACUNARY_BIGINT_HPP
#define LACUNARY_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace lacunary {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd_int(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Floor division, rounding towards minus infinity.
inline Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Non-negative remainder for a positive modulus.
inline Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Representative of a modulo m in (-m/2, m/2].
inline Integer symmetric_mod(const Integer& a, const Integer& m) {
  Integer r = mod_pos(a, m);
  if (2 * r > m) r -= m;
  return r;
}

inline Integer isqrt_ceil(const Integer& a) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  if (r * r < a) r += 1;
  return r;
}

/// Exact k-th root of a non-negative integer, if it exists.
inline std::optional<Integer> exact_root(const Integer& a, unsigned long k) {
  if (a < 0) return std::nullopt;
  Integer r;
  if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) != 0) return r;
  return std::nullopt;
}

inline bool divides(const Integer& d, const Integer& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer floor_rational(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_rational(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline std::int64_t to_i64(const Integer& a) {
  if (!a.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + a.get_str());
  return a.get_si();
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Accepts "p/q" or "p"; used for exact flags such as --eps 1/4.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t next_prime_u64(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime_u64(c)) ++c;
  return c;
}

}  // namespace lacunary

#endif  // LACUNARY_BIGINT_HPP
