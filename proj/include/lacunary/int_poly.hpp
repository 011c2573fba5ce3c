#ifndef LACUNARY_INT_POLY_HPP
#define LACUNARY_INT_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"

namespace lacunary {

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which is a distinct state rather than a sentinel integer.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr explicit Degree(std::int64_t v) : finite_(true), value_(v) {}
  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_minus_infinity() const { return !finite_; }

  std::int64_t value() const {
    if (!finite_) throw Error(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
    return value_;
  }

  friend constexpr bool operator==(const Degree& a, const Degree& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator<(const Degree& a, const Degree& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator>(const Degree& a, const Degree& b) { return b < a; }
  friend constexpr bool operator<=(const Degree& a, const Degree& b) { return !(b < a); }
  friend constexpr bool operator>=(const Degree& a, const Degree& b) { return !(a < b); }
  friend constexpr Degree operator+(const Degree& a, const Degree& b) {
    if (!a.finite_ || !b.finite_) return Degree();
    return Degree(a.value_ + b.value_);
  }

 private:
  bool finite_ = false;
  std::int64_t value_ = 0;
};

struct Term {
  std::int64_t exp = 0;
  Integer coeff;

  friend bool operator==(const Term& a, const Term& b) { return a.exp == b.exp && a.coeff == b.coeff; }
};

namespace detail {

// Sorts by exponent, merges duplicates and drops zero coefficients.
inline void normalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::int64_t e = terms[i].exp;
    Integer c = terms[i].coeff;
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].exp == e; ++j) c += terms[j].coeff;
    if (c != 0) terms[out++] = Term{e, std::move(c)};
    i = j;
  }
  terms.resize(out);
}

}  // namespace detail

/// Sparse univariate polynomial with arbitrary-precision integer coefficients.
/// Terms are kept sorted by ascending exponent with no zero coefficients, so
/// the zero polynomial is the empty term list. With AllowNegative the type
/// represents Laurent polynomials.
template <bool AllowNegative>
class BasicSparsePoly {
 public:
  BasicSparsePoly() = default;

  static BasicSparsePoly from_terms(std::vector<Term> terms) {
    detail::normalize_terms(terms);
    BasicSparsePoly p;
    p.terms_ = std::move(terms);
    p.check_exponents();
    return p;
  }

  static BasicSparsePoly constant(const Integer& c) { return monomial(c, 0); }

  static BasicSparsePoly monomial(const Integer& c, std::int64_t e) {
    BasicSparsePoly p;
    if (c != 0) p.terms_.push_back(Term{e, c});
    p.check_exponents();
    return p;
  }

  static BasicSparsePoly x_power(std::int64_t e) { return monomial(Integer(1), e); }

  /// Builds sum of dense[i] x^(i + offset).
  static BasicSparsePoly from_dense(const std::vector<Integer>& dense, std::int64_t offset = 0) {
    BasicSparsePoly p;
    for (std::size_t i = 0; i < dense.size(); ++i)
      if (dense[i] != 0) p.terms_.push_back(Term{static_cast<std::int64_t>(i) + offset, dense[i]});
    p.check_exponents();
    return p;
  }

  /// Dense coefficient vector, index = exponent. Requires non-negative exponents.
  std::vector<Integer> to_dense() const {
    if (is_zero()) return {};
    if (ord() < 0) throw Error(ErrorCode::NotAPolynomial, "negative exponent in dense conversion");
    std::vector<Integer> d(static_cast<std::size_t>(deg()) + 1);
    for (const auto& t : terms_) d[static_cast<std::size_t>(t.exp)] = t.coeff;
    return d;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Degree degree() const { return terms_.empty() ? Degree::minus_infinity() : Degree(terms_.back().exp); }

  /// Degree as an integer; the zero polynomial raises ZeroPolynomial.
  std::int64_t deg() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
    return terms_.back().exp;
  }

  /// Lowest exponent present.
  std::int64_t ord() const {
    if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "order of the zero polynomial");
    return terms_.front().exp;
  }

  Integer coeff(std::int64_t e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, std::int64_t v) { return t.exp < v; });
    if (it != terms_.end() && it->exp == e) return it->coeff;
    return Integer(0);
  }

  Integer leading_coeff() const { return terms_.empty() ? Integer(0) : terms_.back().coeff; }
  Integer constant_term() const { return coeff(0); }

  BasicSparsePoly operator-() const {
    BasicSparsePoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend BasicSparsePoly operator+(const BasicSparsePoly& a, const BasicSparsePoly& b) { return merge(a, b, false); }
  friend BasicSparsePoly operator-(const BasicSparsePoly& a, const BasicSparsePoly& b) { return merge(a, b, true); }

  friend BasicSparsePoly operator*(const BasicSparsePoly& a, const BasicSparsePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::int64_t lo = a.ord() + b.ord();
    const std::int64_t span = a.deg() + b.deg() - lo;
    const std::size_t products = a.terms_.size() * b.terms_.size();
    BasicSparsePoly r;
    if (span >= 0 && static_cast<std::uint64_t>(span) <= 4 * products + 64) {
      std::vector<Integer> acc(static_cast<std::size_t>(span) + 1);
      for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) {
          auto& slot = acc[static_cast<std::size_t>(s.exp + t.exp - lo)];
          mpz_addmul(slot.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
        }
      for (std::size_t i = 0; i < acc.size(); ++i)
        if (acc[i] != 0) r.terms_.push_back(Term{static_cast<std::int64_t>(i) + lo, std::move(acc[i])});
    } else {
      std::vector<Term> out;
      out.reserve(products);
      for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) out.push_back(Term{s.exp + t.exp, s.coeff * t.coeff});
      detail::normalize_terms(out);
      r.terms_ = std::move(out);
    }
    return r;
  }

  friend BasicSparsePoly operator*(const Integer& c, const BasicSparsePoly& a) {
    if (c == 0) return {};
    BasicSparsePoly r = a;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  BasicSparsePoly& operator+=(const BasicSparsePoly& o) { return *this = *this + o; }
  BasicSparsePoly& operator-=(const BasicSparsePoly& o) { return *this = *this - o; }
  BasicSparsePoly& operator*=(const BasicSparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const BasicSparsePoly& a, const BasicSparsePoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BasicSparsePoly& a, const BasicSparsePoly& b) { return !(a == b); }

  /// Multiplies by x^k. For IntPoly a negative k must keep every exponent non-negative.
  BasicSparsePoly shifted(std::int64_t k) const {
    BasicSparsePoly r = *this;
    for (auto& t : r.terms_) t.exp += k;
    r.check_exponents();
    return r;
  }

  /// f(x^k) for k >= 1.
  BasicSparsePoly compose_power(std::int64_t k) const {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "compose_power needs k >= 1");
    BasicSparsePoly r = *this;
    for (auto& t : r.terms_) t.exp *= k;
    return r;
  }

  BasicSparsePoly pow(unsigned e) const {
    BasicSparsePoly result = constant(Integer(1));
    BasicSparsePoly base = *this;
    while (e > 0) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  /// Evaluation at an integer point (non-negative exponents only).
  Integer eval(const Integer& x) const {
    Integer acc = 0;
    std::int64_t prev = terms_.empty() ? 0 : terms_.back().exp;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      acc *= pow_int(x, static_cast<unsigned long>(prev - it->exp));
      acc += it->coeff;
      prev = it->exp;
    }
    if (!terms_.empty()) acc *= pow_int(x, static_cast<unsigned long>(prev));
    return acc;
  }

  BasicSparsePoly derivative() const {
    BasicSparsePoly r;
    for (const auto& t : terms_)
      if (t.exp != 0) r.terms_.push_back(Term{t.exp - 1, t.coeff * t.exp});
    return r;
  }

  /// Exact quotient by an integer; NotDivisible if any coefficient is not a multiple.
  BasicSparsePoly divided_by(const Integer& c) const {
    if (c == 0) throw Error(ErrorCode::NotDivisible, "division by zero");
    BasicSparsePoly r = *this;
    for (auto& t : r.terms_) {
      if (!divides(c, t.coeff)) throw Error(ErrorCode::NotDivisible, "coefficient not divisible by " + c.get_str());
      mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    }
    return r;
  }

  template <bool Other>
  BasicSparsePoly<Other> convert() const {
    return BasicSparsePoly<Other>::from_terms(terms_);
  }

 private:
  void check_exponents() const {
    if constexpr (!AllowNegative) {
      if (!terms_.empty() && terms_.front().exp < 0)
        throw Error(ErrorCode::NotAPolynomial, "negative exponent x^" + std::to_string(terms_.front().exp));
    }
  }

  static BasicSparsePoly merge(const BasicSparsePoly& a, const BasicSparsePoly& b, bool subtract) {
    BasicSparsePoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exp < b.terms_[j].exp)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].exp < a.terms_[i].exp) {
        r.terms_.push_back(Term{b.terms_[j].exp, subtract ? Integer(-b.terms_[j].coeff) : b.terms_[j].coeff});
        ++j;
      } else {
        Integer c = subtract ? Integer(a.terms_[i].coeff - b.terms_[j].coeff) : Integer(a.terms_[i].coeff + b.terms_[j].coeff);
        if (c != 0) r.terms_.push_back(Term{a.terms_[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

using IntPoly = BasicSparsePoly<false>;
using LaurentPoly = BasicSparsePoly<true>;

inline IntPoly to_int_poly(const LaurentPoly& f) { return f.convert<false>(); }
inline LaurentPoly to_laurent(const IntPoly& f) { return f.convert<true>(); }

struct DivisionResult {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division over Z when the divisor's leading coefficient divides every
/// leading coefficient met along the way. Returns nullopt otherwise.
inline std::optional<DivisionResult> try_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
  const std::int64_t db = b.deg();
  const Integer lb = b.leading_coeff();
  std::map<std::int64_t, Integer> rem;
  for (const auto& t : a.terms()) rem.emplace(t.exp, t.coeff);
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (top->first < db) break;
    if (!divides(lb, top->second)) return std::nullopt;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lb.get_mpz_t());
    const std::int64_t qe = top->first - db;
    for (const auto& t : b.terms()) {
      auto& slot = rem[t.exp + qe];
      mpz_submul(slot.get_mpz_t(), qc.get_mpz_t(), t.coeff.get_mpz_t());
      if (slot == 0) rem.erase(t.exp + qe);
    }
    quot.push_back(Term{qe, std::move(qc)});
  }
  std::vector<Term> r;
  for (auto& [e, c] : rem) r.push_back(Term{e, c});
  return DivisionResult{IntPoly::from_terms(std::move(quot)), IntPoly::from_terms(std::move(r))};
}

/// Exact division in Z[x]; NotDivisible when the quotient is not in Z[x].
inline IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  auto res = try_divide(a, b);
  if (!res || !res->remainder.is_zero()) throw Error(ErrorCode::NotDivisible, "polynomial division leaves a remainder");
  return res->quotient;
}

inline bool divides_poly(const IntPoly& d, const IntPoly& a) {
  if (d.is_zero()) return a.is_zero();
  auto res = try_divide(a, d);
  return res && res->remainder.is_zero();
}

}  // namespace lacunary

#endif  // LACUNARY_INT_POLY_HPP
