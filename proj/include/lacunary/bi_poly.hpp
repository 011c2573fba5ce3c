#ifndef LACUNARY_BI_POLY_HPP
#define LACUNARY_BI_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "int_poly.hpp"
#include "poly_ops.hpp"

namespace lacunary {

/// Element of Z[x,y] stored as a y-degree-indexed vector of IntPoly.
/// The top entry is non-zero unless the polynomial is zero (empty vector).
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<IntPoly> ycoeffs) : c_(std::move(ycoeffs)) { trim(); }

  static BiPoly from_univariate_x(const IntPoly& f) { return BiPoly({f}); }

  /// c * x^i * y^j
  static BiPoly monomial(const Integer& c, std::int64_t i, std::int64_t j) {
    std::vector<IntPoly> v(static_cast<std::size_t>(j) + 1);
    v.back() = IntPoly::monomial(c, i);
    return BiPoly(std::move(v));
  }

  const std::vector<IntPoly>& ycoeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  const IntPoly& ycoeff(std::int64_t j) const {
    static const IntPoly zero;
    if (j < 0 || j >= static_cast<std::int64_t>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(j)];
  }

  std::int64_t deg_y() const {
    if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "y-degree of the zero polynomial");
    return static_cast<std::int64_t>(c_.size()) - 1;
  }

  std::int64_t deg_x() const {
    if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "x-degree of the zero polynomial");
    std::int64_t d = 0;
    for (const auto& p : c_)
      if (!p.is_zero()) d = std::max(d, p.deg());
    return d;
  }

  /// Smallest x-exponent over all terms.
  std::int64_t ord_x() const {
    if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "x-order of the zero polynomial");
    std::int64_t o = std::numeric_limits<std::int64_t>::max();
    for (const auto& p : c_)
      if (!p.is_zero()) o = std::min(o, p.ord());
    return o;
  }

  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& p : c_) n += p.term_count();
    return n;
  }

  const IntPoly& lc_y() const { return c_.back(); }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly operator-() const {
    BiPoly r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    std::vector<IntPoly> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = a.ycoeff(static_cast<std::int64_t>(j)) + b.ycoeff(static_cast<std::int64_t>(j));
    return BiPoly(std::move(v));
  }

  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<IntPoly> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (!b.c_[j].is_zero()) v[i + j] += a.c_[i] * b.c_[j];
    }
    return BiPoly(std::move(v));
  }

  friend BiPoly operator*(const IntPoly& f, const BiPoly& a) {
    std::vector<IntPoly> v = a.c_;
    for (auto& p : v) p = f * p;
    return BiPoly(std::move(v));
  }

  /// Multiplies by x^k.
  BiPoly shifted_x(std::int64_t k) const {
    BiPoly r = *this;
    for (auto& p : r.c_) p = p.shifted(k);
    return r;
  }

  /// F(x, y^m).
  BiPoly compose_y_power(std::int64_t m) const {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "compose_y_power needs m >= 1");
    if (c_.empty()) return {};
    std::vector<IntPoly> v(static_cast<std::size_t>(deg_y() * m) + 1);
    for (std::size_t j = 0; j < c_.size(); ++j) v[j * static_cast<std::size_t>(m)] = c_[j];
    return BiPoly(std::move(v));
  }

  /// F(x, x^k) for k >= 0.
  IntPoly eval_y_power(std::int64_t k) const {
    std::vector<Term> out;
    for (std::size_t j = 0; j < c_.size(); ++j)
      for (const auto& t : c_[j].terms()) out.push_back(Term{t.exp + k * static_cast<std::int64_t>(j), t.coeff});
    return IntPoly::from_terms(std::move(out));
  }

  /// F(x, c) for an integer c.
  IntPoly eval_y(const Integer& c) const {
    IntPoly acc;
    for (std::size_t j = c_.size(); j-- > 0;) acc = c * acc + c_[j];
    return acc;
  }

  /// F(c, y) as a polynomial in y (returned as IntPoly in the variable y).
  IntPoly eval_x(const Integer& c) const {
    std::vector<Integer> d(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) d[j] = c_[j].eval(c);
    return IntPoly::from_dense(d);
  }

  /// Swap the roles of x and y.
  BiPoly transpose() const {
    if (c_.empty()) return {};
    std::vector<std::vector<Term>> rows(static_cast<std::size_t>(deg_x()) + 1);
    for (std::size_t j = 0; j < c_.size(); ++j)
      for (const auto& t : c_[j].terms()) rows[static_cast<std::size_t>(t.exp)].push_back(Term{static_cast<std::int64_t>(j), t.coeff});
    std::vector<IntPoly> v;
    v.reserve(rows.size());
    for (auto& r : rows) v.push_back(IntPoly::from_terms(std::move(r)));
    return BiPoly(std::move(v));
  }

  /// Kronecker substitution y -> x^B with B > deg_x.
  IntPoly kronecker(std::int64_t B) const { return eval_y_power(B); }

  /// Inverse of kronecker for polynomials whose x-degree is below B.
  static BiPoly from_kronecker(const IntPoly& f, std::int64_t B) {
    std::vector<std::vector<Term>> rows;
    for (const auto& t : f.terms()) {
      const auto j = static_cast<std::size_t>(t.exp / B);
      if (rows.size() <= j) rows.resize(j + 1);
      rows[j].push_back(Term{t.exp % B, t.coeff});
    }
    std::vector<IntPoly> v;
    for (auto& r : rows) v.push_back(IntPoly::from_terms(std::move(r)));
    return BiPoly(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<IntPoly> c_;
};

/// Substitution y -> x^k (the evaluation written F(x, x^k)).
inline IntPoly bipoly_eval_y(const BiPoly& F, std::int64_t k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "bipoly_eval_y needs k >= 0");
  return F.eval_y_power(k);
}

enum class ShiftDirection { DivideY, MultiplyY };

/// DivideY: F(x, y / x^q), requiring x^(q j) to divide the y^j coefficient.
/// MultiplyY: F(x, x^q y).
inline BiPoly bipoly_shift(const BiPoly& F, std::int64_t q, ShiftDirection dir) {
  std::vector<IntPoly> v = F.ycoeffs();
  for (std::size_t j = 0; j < v.size(); ++j) {
    const std::int64_t s = (dir == ShiftDirection::MultiplyY ? q : -q) * static_cast<std::int64_t>(j);
    if (v[j].is_zero()) continue;
    if (v[j].ord() + s < 0)
      throw Error(ErrorCode::NotAPolynomial, "coefficient of y^" + std::to_string(j) + " is not divisible by x^" + std::to_string(-s));
    v[j] = v[j].shifted(s);
  }
  return BiPoly(std::move(v));
}

/// gcd of the y-coefficients in Z[x].
inline IntPoly content_y(const BiPoly& F) {
  if (F.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "content of the zero polynomial");
  return gcd_zx(F.ycoeffs());
}

/// Integer content of all coefficients.
inline Integer integer_content(const BiPoly& F) {
  Integer g = 0;
  for (const auto& p : F.ycoeffs()) g = gcd_int(g, content(p));
  return g;
}

struct StrippedBiPoly {
  std::int64_t M = 0;
  BiPoly core;
};

inline StrippedBiPoly strip_x(const BiPoly& F) {
  if (F.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "strip_x of the zero polynomial");
  const std::int64_t M = F.ord_x();
  return StrippedBiPoly{M, F.shifted_x(-M)};
}

/// Exact division in Z[x,y]; nullopt if B does not divide A.
inline std::optional<BiPoly> try_divide_bi(const BiPoly& A, const BiPoly& B) {
  if (B.is_zero()) throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
  if (A.is_zero()) return BiPoly{};
  if (A.deg_y() < B.deg_y()) return std::nullopt;
  std::vector<IntPoly> rem = A.ycoeffs();
  const std::int64_t db = B.deg_y();
  std::vector<IntPoly> q(static_cast<std::size_t>(A.deg_y() - db) + 1);
  for (std::int64_t i = A.deg_y(); i >= db; --i) {
    const IntPoly& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    auto d = try_divide(top, B.lc_y());
    if (!d || !d->remainder.is_zero()) return std::nullopt;
    const IntPoly qc = d->quotient;
    for (std::int64_t j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= qc * B.ycoeff(j);
    q[static_cast<std::size_t>(i - db)] = qc;
  }
  for (const auto& r : rem)
    if (!r.is_zero()) return std::nullopt;
  return BiPoly(std::move(q));
}

inline BiPoly divide_exact(const BiPoly& A, const BiPoly& B) {
  auto q = try_divide_bi(A, B);
  if (!q) throw Error(ErrorCode::NotDivisible, "bivariate division leaves a remainder");
  return *q;
}

}  // namespace lacunary

#endif  // LACUNARY_BI_POLY_HPP
