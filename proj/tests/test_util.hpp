#ifndef LACUNARY_TEST_UTIL_HPP
#define LACUNARY_TEST_UTIL_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "lacunary/bi_poly.hpp"
#include "lacunary/int_poly.hpp"
#include "lacunary/text.hpp"

namespace lacunary::testing {

inline IntPoly P(const char* s) { return parse_poly(s); }
inline BiPoly B(const char* s) { return parse_bipoly(s); }

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Dense random polynomial of exact degree deg with coefficients in [-h, h].
inline IntPoly random_poly(std::mt19937_64& rng, std::int64_t deg, std::int64_t h, bool nonzero_constant = false) {
  std::vector<Integer> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = uniform(rng, -h, h);
  while (c.back() == 0) c.back() = uniform(rng, -h, h);
  if (nonzero_constant)
    while (c.front() == 0) c.front() = uniform(rng, -h, h);
  return IntPoly::from_dense(c);
}

/// Sparse random polynomial with the given number of terms below max_exp.
inline IntPoly random_sparse(std::mt19937_64& rng, std::size_t terms, std::int64_t max_exp, std::int64_t h) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < terms; ++i) {
    std::int64_t c = 0;
    while (c == 0) c = uniform(rng, -h, h);
    ts.push_back(Term{uniform(rng, 0, max_exp), Integer(c)});
  }
  return IntPoly::from_terms(std::move(ts));
}

inline BiPoly random_bipoly(std::mt19937_64& rng, std::int64_t dx, std::int64_t dy, std::int64_t h) {
  std::vector<IntPoly> v;
  for (std::int64_t j = 0; j <= dy; ++j) v.push_back(random_poly(rng, uniform(rng, 0, dx), h));
  return BiPoly(std::move(v));
}

}  // namespace lacunary::testing

#endif  // LACUNARY_TEST_UTIL_HPP
