#ifndef LACUNARY_DENSE_HPP
#define LACUNARY_DENSE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bigint.hpp"
#include "int_poly.hpp"

// Dense integer polynomial kernels (index = exponent) used where the sparse
// representation would only add overhead: gcd sequences and the modular
// factorization machinery.
namespace lacunary::dense {

using Poly = std::vector<Integer>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t deg(const Poly& a) { return static_cast<std::int64_t>(a.size()) - 1; }

inline Poly from_sparse(const IntPoly& f) { return f.to_dense(); }
inline IntPoly to_sparse(const Poly& a) { return IntPoly::from_dense(a); }

inline Integer content(const Poly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline Poly divexact_scalar(Poly a, const Integer& c) {
  for (auto& v : a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] = a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
inline Poly prem(Poly a, const Poly& b) {
  const std::int64_t db = deg(b);
  const Integer& lb = b.back();
  std::int64_t e = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    const Integer lead = a.back();
    const std::int64_t shift = deg(a) - db;
    for (auto& v : a) v *= lb;
    for (std::int64_t j = 0; j <= db; ++j)
      mpz_submul(a[static_cast<std::size_t>(j + shift)].get_mpz_t(), lead.get_mpz_t(), b[static_cast<std::size_t>(j)].get_mpz_t());
    trim(a);
    --e;
  }
  if (e > 0) {
    const Integer f = pow_int(lb, static_cast<unsigned long>(e));
    for (auto& v : a) v *= f;
  }
  return a;
}

/// Exact division over Z; nullopt if the quotient is not integral or the remainder is non-zero.
inline std::optional<Poly> divexact(const Poly& a, const Poly& b) {
  if (a.empty()) return Poly{};
  if (b.empty() || a.size() < b.size()) return std::nullopt;
  Poly r = a;
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db);
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    if (!divides(b.back(), r[i])) return std::nullopt;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), r[i].get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), qc.get_mpz_t(), b[j].get_mpz_t());
    q[i - db] = std::move(qc);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  trim(q);
  return q;
}

inline Poly primitive_part(Poly a) {
  trim(a);
  if (a.empty()) return a;
  Integer c = content(a);
  if (a.back() < 0) c = -c;
  return divexact_scalar(std::move(a), c);
}

inline Poly derivative(const Poly& a) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned long>(i));
  trim(r);
  return r;
}

}  // namespace lacunary::dense

#endif  // LACUNARY_DENSE_HPP
