#ifndef LACUNARY_TEXT_HPP
#define LACUNARY_TEXT_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bi_poly.hpp"
#include "bigint.hpp"
#include "error.hpp"
#include "int_poly.hpp"

// Polynomial text grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (['*'] power)*
//   power  := atom ['^' ['-'] digits]
//   atom   := digits | 'x' | 'y' | '(' expr ')'
// Negative exponents are only accepted on monomials with coefficient +-1.
namespace lacunary {

namespace text_detail {

// (x exponent, y exponent) -> coefficient
using Key = std::pair<std::int64_t, std::int64_t>;
using Generic = std::map<Key, Integer>;

inline void add_to(Generic& g, const Key& k, const Integer& c) {
  auto& slot = g[k];
  slot += c;
  if (slot == 0) g.erase(k);
}

inline Generic mul(const Generic& a, const Generic& b) {
  Generic r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add_to(r, {ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

constexpr std::int64_t kMaxPower = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Generic parse() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "empty input");
    Generic g = expr();
    skip();
    if (pos_ < s_.size()) throw ParseError(pos_, std::string("unexpected character '") + s_[pos_] + "'");
    return g;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  Generic expr() {
    Generic acc;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Generic t = term();
      for (const auto& [k, c] : t) add_to(acc, k, sign * c);
      first = false;
      skip();
      if (!(peek('+') || peek('-'))) break;
    }
    return acc;
  }

  Generic term() {
    Generic acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = mul(acc, power());
      } else if (starts_atom()) {
        acc = mul(acc, power());
      } else {
        break;
      }
    }
    return acc;
  }

  Generic power() {
    const std::size_t at = (skip(), pos_);
    Generic base = atom();
    if (!peek('^')) return base;
    ++pos_;
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
    }
    const std::size_t epos = (skip(), pos_);
    const std::string ds = digits();
    if (ds.size() > 12) throw ParseError(epos, "exponent too large");
    const std::int64_t e = std::stoll(ds);
    if (negative) {
      if (base.size() != 1 || abs_int(base.begin()->second) != 1)
        throw ParseError(at, "negative exponent applied to a non-monomial");
      const auto [k, c] = *base.begin();
      Integer sign = (c < 0 && (e % 2 == 1)) ? Integer(-1) : Integer(1);
      return Generic{{{-k.first * e, -k.second * e}, sign}};
    }
    if (base.size() == 1) {
      const auto [k, c] = *base.begin();
      return Generic{{{k.first * e, k.second * e}, pow_int(c, static_cast<unsigned long>(e))}};
    }
    if (e > kMaxPower / 1000) throw ParseError(epos, "exponent too large for a non-monomial base");
    Generic r{{{0, 0}, Integer(1)}};
    for (std::int64_t i = 0; i < e; ++i) r = mul(r, base);
    return r;
  }

  Generic atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer v(digits());
      Generic g;
      if (v != 0) g[{0, 0}] = v;
      return g;
    }
    if (c == 'x') {
      ++pos_;
      return Generic{{{1, 0}, Integer(1)}};
    }
    if (c == 'y') {
      ++pos_;
      return Generic{{{0, 1}, Integer(1)}};
    }
    if (c == '(') {
      ++pos_;
      Generic g = expr();
      if (!peek(')')) throw ParseError(pos_, "expected ')'");
      ++pos_;
      return g;
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline std::string coeff_prefix(const Integer& c, bool first, bool has_monomial) {
  std::string out;
  const Integer a = abs_int(c);
  if (c < 0) out += "-";
  else if (!first) out += "+";
  if (!has_monomial) return out + a.get_str();
  if (a != 1) out += a.get_str() + "*";
  return out;
}

inline std::string var_power(char v, std::int64_t e) {
  if (e == 1) return std::string(1, v);
  return std::string(1, v) + "^" + std::to_string(e);
}

}  // namespace text_detail

inline LaurentPoly parse_laurent(std::string_view s) {
  const auto g = text_detail::Parser(s).parse();
  std::vector<Term> terms;
  for (const auto& [k, c] : g) {
    if (k.second != 0) throw ParseError(0, "unexpected variable y in a univariate polynomial");
    terms.push_back(Term{k.first, c});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

inline IntPoly parse_poly(std::string_view s) {
  const LaurentPoly f = parse_laurent(s);
  if (!f.is_zero() && f.ord() < 0) throw ParseError(0, "negative exponent in a polynomial");
  return to_int_poly(f);
}

inline BiPoly parse_bipoly(std::string_view s) {
  const auto g = text_detail::Parser(s).parse();
  std::map<std::int64_t, std::vector<Term>> rows;
  for (const auto& [k, c] : g) {
    if (k.first < 0 || k.second < 0) throw ParseError(0, "negative exponent in a bivariate polynomial");
    rows[k.second].push_back(Term{k.first, c});
  }
  std::vector<IntPoly> v;
  if (!rows.empty()) v.resize(static_cast<std::size_t>(rows.rbegin()->first) + 1);
  for (auto& [j, ts] : rows) v[static_cast<std::size_t>(j)] = IntPoly::from_terms(std::move(ts));
  return BiPoly(std::move(v));
}

/// Canonical form, descending exponents, e.g. -x^7+4*x^6-8*x^4+4*x^2-x.
template <bool N>
std::string to_text(const BasicSparsePoly<N>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& ts = f.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    const bool mono = it->exp != 0;
    out += text_detail::coeff_prefix(it->coeff, it == ts.rbegin(), mono);
    if (mono) out += text_detail::var_power('x', it->exp);
  }
  return out;
}

/// Terms ordered by y-degree then x-degree, both descending.
inline std::string to_text(const BiPoly& F) {
  if (F.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::int64_t j = F.deg_y(); j >= 0; --j) {
    const auto& ts = F.ycoeff(j).terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
      std::string mono;
      if (it->exp != 0) mono = text_detail::var_power('x', it->exp);
      if (j != 0) mono += (mono.empty() ? "" : "*") + text_detail::var_power('y', j);
      out += text_detail::coeff_prefix(it->coeff, first, !mono.empty());
      out += mono;
      first = false;
    }
  }
  return out;
}

}  // namespace lacunary

#endif  // LACUNARY_TEXT_HPP
