#ifndef LACUNARY_MOD_POLY_HPP
#define LACUNARY_MOD_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "error.hpp"
#include "int_poly.hpp"

namespace lacunary {

/// Dense polynomial over the prime field F_p, p < 2^31.
/// Coefficients are residues in [0, p); the leading stored entry is non-zero.
class ModPoly {
 public:
  using Coeff = std::uint64_t;

  ModPoly() = default;
  explicit ModPoly(Coeff p) : p_(p) {}
  ModPoly(Coeff p, std::vector<Coeff> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_;
    trim();
  }

  static ModPoly constant(Coeff p, Coeff v) { return ModPoly(p, {v}); }
  static ModPoly x_power(Coeff p, std::size_t e) {
    std::vector<Coeff> c(e + 1, 0);
    c[e] = 1;
    return ModPoly(p, std::move(c));
  }

  Coeff modulus() const { return p_; }
  const std::vector<Coeff>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Degree degree() const { return c_.empty() ? Degree::minus_infinity() : Degree(static_cast<std::int64_t>(c_.size()) - 1); }
  std::size_t deg() const {
    if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "degree of the zero polynomial mod p");
    return c_.size() - 1;
  }
  Coeff lead() const { return c_.empty() ? 0 : c_.back(); }
  Coeff operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator!=(const ModPoly& a, const ModPoly& b) { return !(a == b); }
  friend bool operator<(const ModPoly& a, const ModPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
  }

  Coeff mul_mod(Coeff a, Coeff b) const { return (a * b) % p_; }

  Coeff inv(Coeff a) const {
    if (a % p_ == 0) throw Error(ErrorCode::NotDivisible, "inverse of zero mod p");
    return pow_mod(a, p_ - 2);
  }

  Coeff pow_mod(Coeff a, Coeff e) const {
    Coeff r = 1 % p_;
    a %= p_;
    while (e) {
      if (e & 1) r = mul_mod(r, a);
      a = mul_mod(a, a);
      e >>= 1;
    }
    return r;
  }

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    ModPoly r(a.p_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = (a[i] + b[i]) % a.p_;
    r.trim();
    return r;
  }

  friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    ModPoly r(a.p_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = (a[i] + a.p_ - b[i]) % a.p_;
    r.trim();
    return r;
  }

  friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    ModPoly r(a.p_);
    if (a.is_zero() || b.is_zero()) return r;
    // Accumulate in 128 bits and reduce once per output slot.
    std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
    }
    r.c_.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = static_cast<Coeff>(acc[i] % a.p_);
    r.trim();
    return r;
  }

  ModPoly scaled(Coeff s) const {
    ModPoly r = *this;
    for (auto& v : r.c_) v = mul_mod(v, s % p_);
    r.trim();
    return r;
  }

  ModPoly monic() const {
    if (is_zero()) return *this;
    return scaled(inv(lead()));
  }

  ModPoly derivative() const {
    ModPoly r(p_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = mul_mod(c_[i], i % p_);
    r.trim();
    return r;
  }

  /// Quotient and remainder; the divisor must be non-zero.
  friend std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::NotDivisible, "division by zero polynomial mod p");
    const Coeff p = a.p_;
    if (a.c_.size() < b.c_.size()) return {ModPoly(p), a};
    std::vector<Coeff> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<Coeff> q(a.c_.size() - db, 0);
    const Coeff il = b.inv(b.lead());
    for (std::size_t i = r.size(); i-- > db;) {
      Coeff c = r[i];
      if (c == 0) continue;
      Coeff f = (c * il) % p;
      q[i - db] = f;
      for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + p - (f * b.c_[j]) % p) % p;
    }
    r.resize(db);
    return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
  }

  friend ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divrem(a, b).second; }
  friend ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divrem(a, b).first; }

  /// Monic gcd (zero only if both inputs are zero).
  friend ModPoly gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
      ModPoly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// this^e mod m.
  ModPoly powmod(Integer e, const ModPoly& m) const {
    ModPoly result = constant(p_, 1) % m;
    ModPoly base = *this % m;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = (result * base) % m;
      e >>= 1;
      if (e > 0) base = (base * base) % m;
    }
    return result;
  }

  Coeff eval(Coeff x) const {
    Coeff acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = (mul_mod(acc, x) + c_[i]) % p_;
    return acc;
  }

  /// Lift to Z[x] with coefficients in [0, p).
  IntPoly lift() const {
    std::vector<Integer> d;
    d.reserve(c_.size());
    for (auto v : c_) d.emplace_back(static_cast<unsigned long>(v));
    return IntPoly::from_dense(d);
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  Coeff p_ = 2;
  std::vector<Coeff> c_;
};

/// Reduction of an integer polynomial modulo a prime.
inline ModPoly mod_reduce(const IntPoly& f, std::uint64_t p) {
  if (!is_prime_u64(p)) throw Error(ErrorCode::InvalidArgument, "modulus is not prime: " + std::to_string(p));
  if (f.is_zero()) return ModPoly(p);
  std::vector<ModPoly::Coeff> c(static_cast<std::size_t>(f.deg()) + 1, 0);
  const Integer P(static_cast<unsigned long>(p));
  for (const auto& t : f.terms()) c[static_cast<std::size_t>(t.exp)] = mod_pos(t.coeff, P).get_ui();
  return ModPoly(p, std::move(c));
}

}  // namespace lacunary

#endif  // LACUNARY_MOD_POLY_HPP
