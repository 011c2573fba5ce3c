#ifndef LACUNARY_BIVAR_IRRED_HPP
#define LACUNARY_BIVAR_IRRED_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bi_poly.hpp"
#include "bigint.hpp"
#include "capelli.hpp"
#include "error.hpp"
#include "int_poly.hpp"
#include "poly_ops.hpp"
#include "unifactor.hpp"

namespace lacunary {

// ---------------------------------------------------------------------------
// evaluation certificate

struct PointVerdict {
  Integer k;
  bool counted = false;
  std::string note;  // irreducible, reducible, imprimitive, degree-drop
};

struct EvaluationCertificate {
  std::int64_t d = 0;
  std::int64_t required = 0;
  std::vector<PointVerdict> points;
  bool conclusive = false;

  std::int64_t counted() const {
    return std::count_if(points.begin(), points.end(), [](const PointVerdict& p) { return p.counted; });
  }
};

/// Counted points needed: 2d+1, which is 4*floor(d/2)+1 for even d.
inline std::int64_t vandermonde_required(std::int64_t d) { return 2 * d + 1; }

/// Irreducibility of W from irreducible primitive specializations W(x,k).
inline EvaluationCertificate vandermonde_irreducible(const BiPoly& W, const std::vector<Integer>& budget) {
  if (W.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "vandermonde_irreducible of zero");
  if (W.ord_x() != 0) throw Error(ErrorCode::HypothesisViolation, "W is divisible by x");
  const IntPoly c = content_y(W);
  if (c.deg() > 0 || abs_int(c.constant_term()) != 1) throw Error(ErrorCode::HypothesisViolation, "content_y(W) is not 1");
  EvaluationCertificate cert;
  cert.d = W.deg_y();
  if (cert.d < 2) throw Error(ErrorCode::HypothesisViolation, "deg_y W must be at least 2");
  cert.required = vandermonde_required(cert.d);
  for (const auto& k : budget) {
    if (cert.counted() >= cert.required) break;
    PointVerdict pv{k, false, ""};
    const IntPoly w = W.eval_y(k);
    if (w.is_zero() || w.deg() < 1) {
      pv.note = "constant";
    } else if (abs_int(content(w)) != 1) {
      pv.note = "imprimitive";
    } else if (is_irreducible_z(w)) {
      pv.counted = true;
      pv.note = "irreducible";
    } else {
      pv.note = "reducible";
    }
    cert.points.push_back(pv);
  }
  cert.conclusive = cert.counted() >= cert.required;
  return cert;
}

inline std::vector<Integer> integer_range(std::int64_t lo, std::int64_t hi) {
  std::vector<Integer> v;
  for (std::int64_t k = lo; k <= hi; ++k) v.emplace_back(static_cast<long>(k));
  return v;
}

// ---------------------------------------------------------------------------
// oracle: x-specialization proof with Kronecker fallback

struct OracleBudget {
  int specializations = 8;
  std::uint64_t seed = 0;
  std::size_t kronecker_subsets = 200000;
};

enum class OracleStatus { Irreducible, Factored, Inconclusive };

inline const char* to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::Irreducible: return "Irreducible";
    case OracleStatus::Factored: return "Factored";
    case OracleStatus::Inconclusive: return "Inconclusive";
  }
  return "unknown";
}

struct OracleResult {
  OracleStatus status = OracleStatus::Inconclusive;
  std::int64_t M = 0;                  // x-power removed first
  std::optional<BiPoly> U, V;          // core = U V when Factored
  std::string method;                  // specialization / degree-sets / kronecker / content
  std::vector<Integer> points;         // x-values tried
  std::optional<Integer> proof_point;  // x = a with F(a,y) irreducible
};

namespace bivar_detail {

// Order 2,-2,3,-3,...; a non-zero seed shuffles it.
inline std::vector<Integer> specialization_points(int count, std::uint64_t seed) {
  std::vector<Integer> pts;
  for (long a = 2; static_cast<int>(pts.size()) < 4 * count + 8; ++a) {
    pts.emplace_back(a);
    pts.emplace_back(-a);
  }
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(pts.begin(), pts.end(), rng);
  }
  return pts;
}

inline std::set<std::int64_t> subset_sums(const std::vector<std::int64_t>& degs) {
  std::set<std::int64_t> s{0};
  for (auto d : degs) {
    std::set<std::int64_t> t = s;
    for (auto v : s) t.insert(v + d);
    s = std::move(t);
  }
  return s;
}

}  // namespace bivar_detail

/// Kronecker substitution y = x^B, then recombination of univariate factors.
inline std::optional<std::pair<BiPoly, BiPoly>> kronecker_split(const BiPoly& G, const std::set<std::int64_t>& allowed,
                                                                std::size_t subset_cap, bool& exhausted) {
  exhausted = false;
  const std::int64_t B = G.deg_x() + 1;
  const Factorization fz = factor_z(G.kronecker(B));
  std::vector<IntPoly> items;
  for (const auto& [g, m] : fz.factors)
    for (int i = 0; i < m; ++i) items.push_back(g);
  const std::size_t n = items.size();
  if (n < 2) return std::nullopt;
  std::size_t tried = 0;
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> idx;
  for (std::size_t size = 1; size <= n / 2; ++size) {
    idx.resize(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      // skip repeated multisets coming from equal factors
      std::vector<std::size_t> key;
      for (auto i : idx) key.push_back(static_cast<std::size_t>(std::find(items.begin(), items.end(), items[i]) - items.begin()));
      if (seen.insert(key).second) {
        if (++tried > subset_cap) {
          exhausted = true;
          return std::nullopt;
        }
        IntPoly prod = IntPoly::constant(1);
        for (auto i : idx) prod *= items[i];
        const BiPoly U = BiPoly::from_kronecker(prod, B);
        if (U.deg_y() >= 1 && U.deg_y() < G.deg_y() && allowed.count(U.deg_y())) {
          if (auto V = try_divide_bi(G, U)) return std::make_pair(U, *V);
        }
      }
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

/// Is F a power of x times an irreducible element of Z[x,y]?
inline OracleResult reducibility_oracle(const BiPoly& F, const OracleBudget& budget = {}) {
  if (F.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "oracle on the zero polynomial");
  if (F.deg_y() < 1) throw Error(ErrorCode::InvalidArgument, "oracle needs deg_y >= 1");
  OracleResult out;
  const StrippedBiPoly s = strip_x(F);
  out.M = s.M;
  const BiPoly& G = s.core;
  const IntPoly c = content_y(G);
  if (c.deg() > 0 || abs_int(c.constant_term()) != 1) {
    out.status = OracleStatus::Factored;
    out.method = "content";
    out.U = BiPoly::from_univariate_x(c);
    out.V = divide_exact(G, *out.U);
    return out;
  }
  const std::int64_t d = G.deg_y();
  if (d == 1) {
    out.status = OracleStatus::Irreducible;
    out.method = "linear in y with trivial content";
    return out;
  }
  std::set<std::int64_t> allowed;
  for (std::int64_t e = 0; e <= d; ++e) allowed.insert(e);
  int used = 0;
  for (const auto& a : bivar_detail::specialization_points(budget.specializations, budget.seed)) {
    if (used >= budget.specializations) break;
    const IntPoly g = G.eval_x(a);
    if (g.is_zero() || g.deg() != d) continue;
    ++used;
    out.points.push_back(a);
    const Factorization fz = factor_z(g);
    std::vector<std::int64_t> degs;
    for (const auto& [h, m] : fz.factors)
      for (int i = 0; i < m; ++i) degs.push_back(h.deg());
    if (degs.size() == 1) {
      out.status = OracleStatus::Irreducible;
      out.method = "specialization";
      out.proof_point = a;
      return out;
    }
    std::set<std::int64_t> sums = bivar_detail::subset_sums(degs), keep;
    std::set_intersection(allowed.begin(), allowed.end(), sums.begin(), sums.end(), std::inserter(keep, keep.begin()));
    allowed = std::move(keep);
    if (allowed.size() == 2) {
      out.status = OracleStatus::Irreducible;
      out.method = "degree-sets";
      return out;
    }
  }
  bool exhausted = false;
  auto split = kronecker_split(G, allowed, budget.kronecker_subsets, exhausted);
  if (split) {
    out.status = OracleStatus::Factored;
    out.method = "kronecker";
    out.U = split->first;
    out.V = split->second;
    if (*out.U * *out.V != G) throw Error(ErrorCode::ConstructionFailed, "oracle factors do not multiply back");
    return out;
  }
  out.status = exhausted ? OracleStatus::Inconclusive : OracleStatus::Irreducible;
  out.method = exhausted ? "kronecker budget exhausted" : "kronecker";
  return out;
}

inline OracleOutcome to_outcome(const OracleResult& r) {
  switch (r.status) {
    case OracleStatus::Irreducible: return OracleOutcome::Irreducible;
    case OracleStatus::Factored: return OracleOutcome::Reducible;
    case OracleStatus::Inconclusive: return OracleOutcome::Inconclusive;
  }
  return OracleOutcome::Inconclusive;
}

inline BivarOracle default_oracle(const OracleBudget& budget = {}) {
  return [budget](const BiPoly& F) { return to_outcome(reducibility_oracle(F, budget)); };
}

// ---------------------------------------------------------------------------
// shift reduction of twisted instances

enum class Shape { F1, F2 };

inline const char* to_string(Shape s) { return s == Shape::F1 ? "F1" : "F2"; }

struct ShiftReduction {
  Shape shape = Shape::F1;
  std::int64_t t = 0, m = 1, q = 0, rho = 0;
  std::int64_t x_power = 0;  // F2: substitution multiplies by x^(r m q)
  BiPoly representative;     // F_{shape,rho}(x, y^m)
  std::string relation;
};

/// Maps G = F_{shape,t}(x,y^m) to its residue representative t mod m.
inline ShiftReduction shift_reduce(const BiPoly& G, Shape shape, std::int64_t t, std::int64_t m, std::int64_t r) {
  if (t < 0 || m < 1 || r < 1) throw Error(ErrorCode::InvalidArgument, "shift_reduce needs t >= 0, m >= 1, r >= 1");
  if (G.deg_y() != r * m) throw Error(ErrorCode::HypothesisViolation, "shape mismatch: deg_y is not r m");
  ShiftReduction out;
  out.shape = shape;
  out.t = t;
  out.m = m;
  out.q = t / m;
  out.rho = t % m;
  const std::string ym = m == 1 ? "y" : "y^" + std::to_string(m);
  try {
    if (shape == Shape::F1) {
      out.representative = bipoly_shift(G, out.q, ShiftDirection::DivideY);
      out.relation = "F1_t(x,(y/x^" + std::to_string(out.q) + ")^" + std::to_string(m) + ") = F1_" + std::to_string(out.rho) + "(x," + ym + ")";
    } else {
      out.x_power = r * m * out.q;
      const BiPoly moved = bipoly_shift(G, out.q, ShiftDirection::MultiplyY);
      if (moved.ord_x() < out.x_power) throw Error(ErrorCode::HypothesisViolation, "shape mismatch: missing x-power");
      out.representative = moved.shifted_x(-out.x_power);
      out.relation = "F2_t(x,(x^" + std::to_string(out.q) + " y)^" + std::to_string(m) + ") = x^" + std::to_string(out.x_power) +
                     " F2_" + std::to_string(out.rho) + "(x," + ym + ")";
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotAPolynomial) throw Error(ErrorCode::HypothesisViolation, std::string("shape mismatch: ") + e.what());
    throw;
  }
  // the representative must still carry y only through y^m
  for (std::int64_t j = 0; j <= out.representative.deg_y(); ++j)
    if (j % m != 0 && !out.representative.ycoeff(j).is_zero()) throw Error(ErrorCode::HypothesisViolation, "shape mismatch: y-exponent not a multiple of m");
  return out;
}

}  // namespace lacunary

#endif  // LACUNARY_BIVAR_IRRED_HPP
