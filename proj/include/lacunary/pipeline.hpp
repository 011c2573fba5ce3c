#ifndef LACUNARY_PIPELINE_HPP
#define LACUNARY_PIPELINE_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "bi_poly.hpp"
#include "bigint.hpp"
#include "bivar_irred.hpp"
#include "capelli.hpp"
#include "error.hpp"
#include "int_poly.hpp"
#include "lacunary_reduce.hpp"
#include "poly_ops.hpp"
#include "reciprocal.hpp"
#include "text.hpp"
#include "unifactor.hpp"

namespace lacunary {

// ---------------------------------------------------------------------------
// input

/// A condition every admissible exponent N (the N in F(x,x^N)) must meet.
struct SideCondition {
  enum class Kind { Coprime, ForbiddenResidue };
  Kind kind = Kind::Coprime;
  Integer value;        // gcd(N, value) = 1, or the forbidden residue
  Integer modulus = 0;  // ForbiddenResidue only

  std::string describe() const {
    if (kind == Kind::Coprime) return "gcd(N, " + value.get_str() + ") = 1";
    return "N != " + value.get_str() + " (mod " + modulus.get_str() + ")";
  }

  bool admits(const Integer& N) const {
    if (kind == Kind::Coprime) return gcd_int(N, value) == 1;
    return mod_pos(N - value, modulus) != 0;
  }

  /// Every N = s (mod m) violates the condition.
  bool excludes_class(const Integer& s, const Integer& m) const {
    if (kind == Kind::Coprime) return gcd_int(gcd_int(s, m), value) != 1;
    return divides(modulus, m) && mod_pos(s - value, modulus) == 0;
  }

  friend bool operator==(const SideCondition& a, const SideCondition& b) {
    return a.kind == b.kind && a.value == b.value && a.modulus == b.modulus;
  }
};

/// The family F(x, x^(n + n_shift)) with F = sum f_j(x) y^j.
struct FamilyInput {
  std::string name;
  FamilySpec spec;
  std::int64_t n_shift = 0;
  std::optional<Family> offsets;  // display form for the reciprocal analysis
  std::vector<SideCondition> side_conditions;

  /// The family in the shape used by the reciprocal module.
  Family family() const { return offsets ? *offsets : family_from_coefficients(spec.f, n_shift); }

  IntPoly member(std::int64_t n) const {
    const std::int64_t N = n + n_shift;
    if (N < 0) throw Error(ErrorCode::InvalidArgument, "exponent n + n_shift is negative");
    return spec.to_bipoly().eval_y_power(N);
  }

  bool admits(std::int64_t n) const {
    const Integer N(static_cast<long>(n + n_shift));
    return std::all_of(side_conditions.begin(), side_conditions.end(), [&](const SideCondition& c) { return c.admits(N); });
  }
};

/// The offsets form must describe the same polynomials as the coefficient list.
inline void check_offsets(const FamilyInput& in) {
  if (!in.offsets) return;
  const Family fam = *in.offsets;
  const std::int64_t lo = std::max({fam.min_valid_n(), -in.n_shift, std::int64_t{0}});
  for (std::int64_t n = lo; n < lo + 6; ++n)
    if (fam.eval(n) != in.member(n)) throw Error(ErrorCode::InvalidArgument, "offsets disagree with f at n = " + std::to_string(n));
}

struct AnalysisConfig {
  std::int64_t t_max = 64;          // collapse identities are spot-checked for t up to here
  int evaluation_points = 64;       // budget for evaluation certificates
  OracleBudget oracle;              // 8 specializations by default
  std::uint64_t prime_cap = 100000; // largest prime handled cell by cell
  unsigned threads = 1;

  friend bool operator==(const AnalysisConfig& a, const AnalysisConfig& b) {
    return a.t_max == b.t_max && a.evaluation_points == b.evaluation_points && a.oracle.specializations == b.oracle.specializations &&
           a.oracle.seed == b.oracle.seed && a.oracle.kronecker_subsets == b.oracle.kronecker_subsets && a.prime_cap == b.prime_cap;
  }
};

// ---------------------------------------------------------------------------
// hypotheses

struct HypothesisCheck {
  std::string name;
  bool pass = false;
  std::string witness;
};

inline std::vector<HypothesisCheck> check_hypotheses(const FamilySpec& spec) {
  std::vector<HypothesisCheck> out;
  const bool shaped = spec.f.size() >= 2;
  out.push_back({"r >= 1", shaped, shaped ? "r = " + std::to_string(spec.r()) : "fewer than two coefficients"});
  const bool top = shaped && !spec.f.back().is_zero();
  out.push_back({"f_r != 0", top, top ? to_text(spec.f.back()) : "f_r = 0"});
  const IntPoly g = spec.f.empty() ? IntPoly{} : gcd_zx(spec.f);
  const bool coprime = !g.is_zero() && g.deg() == 0 && abs_int(g.constant_term()) == 1;
  out.push_back({"gcd(f_0, ..., f_r) = 1", coprime, to_text(g)});
  const bool c0 = !spec.f.empty() && spec.f.front().constant_term() != 0;
  out.push_back({"f_0(0) != 0", c0, spec.f.empty() ? "no f_0" : "f_0(0) = " + spec.f.front().constant_term().get_str()});
  return out;
}

inline bool hypotheses_pass(const std::vector<HypothesisCheck>& h) {
  return std::all_of(h.begin(), h.end(), [](const HypothesisCheck& c) { return c.pass; });
}

// ---------------------------------------------------------------------------
// grid

enum class CellStatus { Discharged, Irreducible, Reducible, Inconclusive };

inline const char* to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Discharged: return "discharged";
    case CellStatus::Irreducible: return "irreducible";
    case CellStatus::Reducible: return "reducible";
    case CellStatus::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

/// One entry of the check grid. modulus 1 is the base cell; residue -1 covers every t.
struct GridCell {
  Shape shape = Shape::F1;
  std::int64_t modulus = 1;
  std::int64_t residue = 0;
  CellStatus status = CellStatus::Inconclusive;
  std::string rule;       // oracle, internal-span, obstruction, case-ii, side-condition
  std::string detail;
  std::string relation;   // shift reduction used
  std::optional<BiPoly> checked;
  std::string method;     // oracle method when checked
  std::int64_t collapse_checks = 0;
};

inline bool same_cell(const GridCell& a, const GridCell& b) {
  return a.shape == b.shape && a.modulus == b.modulus && a.residue == b.residue;
}

struct PrimeCover {
  Integer uniform_bound;                 // every prime above is ruled out for all t
  std::optional<std::int64_t> witness_j; // coefficient giving the bound
  std::vector<std::uint64_t> primes;     // odd primes handled cell by cell
};

/// B* = min over f_j with two or more terms of max(height, exponent span).
inline PrimeCover prime_cover(const FamilySpec& spec) {
  PrimeCover pc;
  for (std::int64_t j = 0; j <= spec.r(); ++j) {
    const IntPoly& fj = spec.coeff(j);
    if (fj.terms().size() < 2) continue;
    const Integer b = std::max(height(fj), Integer(static_cast<long>(exponent_span(fj))));
    if (!pc.witness_j || b < pc.uniform_bound) {
      pc.uniform_bound = b;
      pc.witness_j = j;
    }
  }
  return pc;
}

namespace pipeline_detail {

inline std::string residue_text(Shape s, std::int64_t rho, std::int64_t m) {
  const std::int64_t v = s == Shape::F1 ? rho : (m - rho) % m;
  return "N = " + std::to_string(v) + " (mod " + std::to_string(m) + ")";
}

/// The side condition contradicting every N the cell could affect, if any.
inline std::optional<std::string> side_condition_discharge(const FamilyInput& in, Shape s, std::int64_t rho, std::int64_t m) {
  // m | l and t = rho (mod m) give N = k l + t = rho or N = k l - t = -rho (mod m)
  const Integer M(static_cast<long>(m));
  const Integer sres = mod_pos(Integer(static_cast<long>(s == Shape::F1 ? rho : -rho)), M);
  for (const auto& c : in.side_conditions)
    if (c.excludes_class(sres, M))
      return "m | l forces " + residue_text(s, rho, m) + ", contradicting " + c.describe();
  return std::nullopt;
}

inline std::string span_detail(const FamilySpec& spec, std::int64_t j, std::uint64_t p) {
  std::vector<std::int64_t> es;
  for (const auto& t : spec.coeff(j).terms())
    if (!divides(Integer(static_cast<unsigned long>(p)), t.coeff)) es.push_back(t.exp);
  for (std::size_t i = 1; i < es.size(); ++i)
    if ((es[i] - es[0]) % static_cast<std::int64_t>(p) != 0)
      return "f_" + std::to_string(j) + " keeps exponents " + std::to_string(es[0]) + " and " + std::to_string(es[i]) +
             " mod " + std::to_string(p);
  return "f_" + std::to_string(j);
}

inline std::string relation_text(Shape s, std::int64_t m, std::int64_t rho, std::int64_t r) {
  const std::string ym = "y^" + std::to_string(m);
  const std::string t = "t = " + std::to_string(m) + "q + " + std::to_string(rho);
  if (s == Shape::F1) return t + ": F1_t(x,(y/x^q)^" + std::to_string(m) + ") = F1_" + std::to_string(rho) + "(x," + ym + ")";
  return t + ": F2_t(x,(x^q y)^" + std::to_string(m) + ") = x^(" + std::to_string(r * m) + "q) F2_" + std::to_string(rho) + "(x," + ym + ")";
}

/// Spot-checks the residue collapse for t = rho, rho + m, ... up to t_max.
inline std::int64_t collapse_spot_checks(const FamilySpec& spec, Shape s, std::int64_t m, std::int64_t rho, const BiPoly& rep, std::int64_t t_max) {
  std::int64_t count = 0;
  for (std::int64_t t = rho; t <= t_max; t += m) {
    const BiPoly G = twisted_instance(spec, s, t, 1).compose_y_power(m);
    const auto red = shift_reduce(G, s, t, m, spec.r());
    if (red.representative != rep) throw Error(ErrorCode::ConstructionFailed, "residue collapse failed at t = " + std::to_string(t));
    ++count;
  }
  return count;
}

inline CellStatus from_oracle(OracleStatus s) {
  switch (s) {
    case OracleStatus::Irreducible: return CellStatus::Irreducible;
    case OracleStatus::Factored: return CellStatus::Reducible;
    case OracleStatus::Inconclusive: return CellStatus::Inconclusive;
  }
  return CellStatus::Inconclusive;
}

}  // namespace pipeline_detail

/// Discharge reasoning for one (shape, modulus, residue) cell; the oracle is not consulted.
inline GridCell plan_cell(const FamilyInput& in, Shape s, std::int64_t m, std::int64_t rho) {
  using namespace pipeline_detail;
  const FamilySpec& spec = in.spec;
  GridCell c;
  c.shape = s;
  c.modulus = m;
  c.residue = rho;
  if (m == 1) {
    c.relation = "F1_t(x,y/x^t) = F(x,y), F2_t(x,x^t y) = x^(" + std::to_string(spec.r()) + "t) F(x,y)";
    c.checked = spec.to_bipoly();
    c.rule = "oracle";
    return c;
  }
  if (m != 4) {
    const auto p = static_cast<std::uint64_t>(m);
    if (rho < 0) {
      const auto j = internal_span_witness(spec, p);
      if (!j) throw Error(ErrorCode::InvalidArgument, "no internal span witness for p = " + std::to_string(m));
      c.status = CellStatus::Discharged;
      c.rule = "internal-span";
      c.detail = span_detail(spec, *j, p);
      return c;
    }
    const BiPoly R = twisted_instance(spec, s, rho, 1);
    if (!pth_power_obstruction_up_to_x(R, p)) {
      c.status = CellStatus::Discharged;
      c.rule = "obstruction";
      c.detail = "no " + std::to_string(m) + "-th power congruence for t = " + std::to_string(rho) + " (mod " + std::to_string(m) + ")";
      return c;
    }
    if (auto why = side_condition_discharge(in, s, rho, m)) {
      c.status = CellStatus::Discharged;
      c.rule = "side-condition";
      c.detail = "congruence holds; " + *why;
      return c;
    }
    c.rule = "oracle";
    c.relation = relation_text(s, m, rho, spec.r());
    c.checked = R.compose_y_power(m);
    return c;
  }
  const BiPoly R = twisted_instance(spec, s, rho, 1);
  const auto ci = case_ii_filter(R);
  if (ci.status == CaseII::RuledOut) {
    c.status = CellStatus::Discharged;
    c.rule = "case-ii";
    c.detail = ci.reason;
    return c;
  }
  if (auto why = side_condition_discharge(in, s, rho, m)) {
    c.status = CellStatus::Discharged;
    c.rule = "side-condition";
    c.detail = std::string(to_string(ci.status)) + " (" + ci.reason + "); " + *why;
    return c;
  }
  c.rule = "oracle";
  c.detail = std::string(to_string(ci.status)) + ": " + ci.reason;
  c.relation = relation_text(s, m, rho, spec.r());
  c.checked = R.compose_y_power(4);
  return c;
}

/// Cell keys in certificate order: base, then per shape by modulus and residue.
inline std::vector<GridCell> plan_grid(const FamilyInput& in, const PrimeCover& pc) {
  std::vector<GridCell> cells;
  cells.push_back(plan_cell(in, Shape::F1, 1, 0));
  std::vector<std::int64_t> moduli{2, 4};
  for (auto p : pc.primes) moduli.push_back(static_cast<std::int64_t>(p));
  std::sort(moduli.begin(), moduli.end());
  for (auto s : {Shape::F1, Shape::F2})
    for (auto m : moduli) {
      if (m != 4 && internal_span_witness(in.spec, static_cast<std::uint64_t>(m))) {
        cells.push_back(plan_cell(in, s, m, -1));
        continue;
      }
      for (std::int64_t rho = 0; rho < m; ++rho) cells.push_back(plan_cell(in, s, m, rho));
    }
  return cells;
}

/// Runs the oracle on every undischarged cell, spread over worker threads.
inline void run_oracles(std::vector<GridCell>& cells, const FamilyInput& in, const AnalysisConfig& cfg) {
  std::vector<std::size_t> jobs;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].rule == "oracle") jobs.push_back(i);
  std::atomic<std::size_t> next{0};
  std::vector<std::string> errors(jobs.size());
  auto work = [&]() {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      GridCell& c = cells[jobs[k]];
      try {
        const OracleResult r = reducibility_oracle(*c.checked, cfg.oracle);
        c.status = pipeline_detail::from_oracle(r.status);
        c.method = r.method;
        if (r.proof_point) c.method += " at x = " + r.proof_point->get_str();
        if (c.modulus > 1)
          c.collapse_checks = pipeline_detail::collapse_spot_checks(in.spec, c.shape, c.modulus, c.residue, *c.checked, cfg.t_max);
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (!e.empty()) throw Error(ErrorCode::ConstructionFailed, e);
}

// ---------------------------------------------------------------------------
// effective threshold

struct EffectiveBound {
  std::int64_t positions = 0;  // m + 1: exponents of F(x,x^N) including N, 2N, ..., rN
  Integer norm_sq;             // sum of ||f_j||^2
  std::int64_t rho = 0;        // N in the threshold, 2 ||F||^2 + 2m - 5
  Rational eps;
  Rational k0;
  Integer kappa;
  Integer degree_bound;        // ceil V(rho)
  Integer n_canonical;         // least N with r N + deg f_r >= V and blocks disjoint
  Integer n_display;           // n_canonical - n_shift
  std::string convention = "kappa = floor(1/eps) + 1";
  std::string note = "derived from the reduction constants; no closed form is asserted elsewhere";
};

inline EffectiveBound effective_bound(const FamilyInput& in) {
  const FamilySpec& spec = in.spec;
  const ConstraintData cd = constraint_data(spec);
  EffectiveBound b;
  b.norm_sq = 0;
  std::int64_t max_lower = 0;
  for (std::int64_t j = 0; j <= spec.r(); ++j) {
    const IntPoly& fj = spec.coeff(j);
    b.norm_sq += norm2_sq(fj);
    b.positions += static_cast<std::int64_t>(fj.terms().size());
    if (j > 0 && (fj.is_zero() || fj.constant_term() == 0)) b.positions += 1;
    if (j < spec.r() && !fj.is_zero()) max_lower = std::max(max_lower, fj.deg());
  }
  const std::int64_t m = b.positions - 1;
  b.rho = Integer(2 * b.norm_sq + 2 * m - 5).get_si();
  if (b.rho < 1) b.rho = 1;
  const ReductionConfig cfg = make_config(cd.eps, cd.k0);
  b.eps = cfg.eps;
  b.k0 = cfg.k0;
  b.kappa = cfg.kappa;
  b.degree_bound = ceil_rational(v_bound(b.rho, cfg));
  const Integer r(static_cast<long>(spec.r()));
  const Integer need = b.degree_bound - Integer(static_cast<long>(spec.f.back().deg()));
  Integer n = need <= 0 ? Integer(0) : Integer((need + r - 1) / r);
  n = std::max(n, Integer(static_cast<long>(max_lower + 1)));
  b.n_canonical = n;
  b.n_display = n - in.n_shift;
  return b;
}

// ---------------------------------------------------------------------------
// certificate

enum class Verdict { NonReciprocalPartNotReducibleForLargeN, IrreducibleForLargeN, ProductOfIrreducibleReciprocalsForLargeN, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NonReciprocalPartNotReducibleForLargeN: return "NonReciprocalPartNotReducibleForLargeN";
    case Verdict::IrreducibleForLargeN: return "IrreducibleForLargeN";
    case Verdict::ProductOfIrreducibleReciprocalsForLargeN: return "ProductOfIrreducibleReciprocalsForLargeN";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "unknown";
}

struct Certificate {
  std::string version = "v1";
  FamilyInput input;
  AnalysisConfig config;
  std::vector<HypothesisCheck> hypotheses;
  ConstraintData constraints;
  PrimeCover cover;
  std::vector<GridCell> grid;
  std::optional<ReciprocalAnalysis> reciprocal;
  std::string reciprocal_note;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> blockers;
  std::optional<EffectiveBound> effective;
};

/// Verdict implied by the grid alone, with the cells that block it.
inline std::pair<Verdict, std::vector<std::string>> grid_verdict(const Certificate& c) {
  std::vector<std::string> blockers;
  for (const auto& cell : c.grid) {
    if (cell.status == CellStatus::Discharged || cell.status == CellStatus::Irreducible) continue;
    std::string where = cell.modulus == 1 ? std::string("base F(x,y)")
                                          : std::string(to_string(cell.shape)) + "_" + std::to_string(cell.residue) + "(x,y^" +
                                                std::to_string(cell.modulus) + ")";
    blockers.push_back(where + " is " + to_string(cell.status));
  }
  return {blockers.empty() ? Verdict::NonReciprocalPartNotReducibleForLargeN : Verdict::Inconclusive, blockers};
}

/// Promotes the grid verdict using the reciprocal analysis of F - F~.
inline void reciprocal_upgrade(Certificate& c) {
  if (c.verdict != Verdict::NonReciprocalPartNotReducibleForLargeN) return;
  c.reciprocal = analyze_reciprocal(c.input.family());
  const auto& ra = *c.reciprocal;
  if (ra.status == ReciprocalStatus::ZeroDifference) {
    c.verdict = Verdict::ProductOfIrreducibleReciprocalsForLargeN;
    c.reciprocal_note = "F - F~ vanishes identically: every member is reciprocal, so a non-reducible non-reciprocal part is 1";
  } else if (ra.status == ReciprocalStatus::Collapsed && ra.all_excluded) {
    c.verdict = Verdict::IrreducibleForLargeN;
    c.reciprocal_note = "every reciprocal irreducible factor of u(x) in F - F~ = u(x) x^(a n + b) is excluded";
  } else if (ra.status == ReciprocalStatus::Collapsed) {
    c.reciprocal_note = "some reciprocal factor of u(x) divides infinitely many members; verdict left unchanged";
  } else {
    c.reciprocal_note = "F - F~ has several blocks; verdict left unchanged";
  }
}

inline Certificate analyze_family(const FamilyInput& in, const AnalysisConfig& cfg = {}) {
  Certificate c;
  c.input = in;
  c.config = cfg;
  c.hypotheses = check_hypotheses(in.spec);
  if (!hypotheses_pass(c.hypotheses)) {
    for (const auto& h : c.hypotheses)
      if (!h.pass) throw Error(ErrorCode::HypothesisViolation, h.name + " fails: " + h.witness);
  }
  check_offsets(in);
  c.constraints = constraint_data(in.spec);
  bool nonconstant = false;
  for (const auto& fj : in.spec.f) nonconstant = nonconstant || (!fj.is_zero() && fj.deg() > 0);
  if (!nonconstant) c.blockers.push_back("every f_j is constant, so the two-variable criterion does not apply at t = 0");
  c.cover = prime_cover(in.spec);
  if (!c.cover.witness_j) {
    c.blockers.push_back("no f_j has two or more terms, so no uniform bound covers the large primes");
  } else if (c.cover.uniform_bound > Integer(static_cast<unsigned long>(cfg.prime_cap))) {
    c.blockers.push_back("uniform prime bound " + c.cover.uniform_bound.get_str() + " exceeds the prime cap");
  } else {
    c.cover.primes = odd_primes_up_to(c.cover.uniform_bound);
  }
  if (!c.blockers.empty()) {
    c.verdict = Verdict::Inconclusive;
    return c;
  }
  c.grid = plan_grid(in, c.cover);
  run_oracles(c.grid, in, cfg);
  auto [v, b] = grid_verdict(c);
  c.verdict = v;
  c.blockers = b;
  reciprocal_upgrade(c);
  c.effective = effective_bound(in);
  return c;
}

// ---------------------------------------------------------------------------
// verification

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> mismatches;
  std::int64_t cells_checked = 0;

  void fail(const std::string& s) {
    ok = false;
    mismatches.push_back(s);
  }
};

/// Re-derives every recorded cell, the grid's coverage and the verdict.
inline VerifyReport verify(const Certificate& c) {
  VerifyReport rep;
  if (c.version != "v1") rep.fail("unknown certificate version " + c.version);
  const auto hyp = check_hypotheses(c.input.spec);
  if (!hypotheses_pass(hyp)) {
    rep.fail("hypotheses do not hold");
    return rep;
  }
  const PrimeCover pc = prime_cover(c.input.spec);
  if (pc.uniform_bound != c.cover.uniform_bound || pc.witness_j != c.cover.witness_j) rep.fail("uniform prime bound differs");
  if (c.verdict == Verdict::Inconclusive && c.grid.empty()) {
    // nothing was checked; only the blockers can be recomputed
    const Certificate again = analyze_family(c.input, c.config);
    if (again.blockers != c.blockers) rep.fail("blockers differ");
    return rep;
  }
  PrimeCover expect = pc;
  expect.primes = odd_primes_up_to(pc.uniform_bound);
  if (expect.primes != c.cover.primes) rep.fail("prime list differs");
  const auto planned = plan_grid(c.input, expect);
  if (planned.size() != c.grid.size()) rep.fail("grid has " + std::to_string(c.grid.size()) + " cells, expected " + std::to_string(planned.size()));
  std::vector<GridCell> rerun = planned;
  run_oracles(rerun, c.input, c.config);
  for (std::size_t i = 0; i < std::min(rerun.size(), c.grid.size()); ++i) {
    const GridCell& got = c.grid[i];
    const GridCell& want = rerun[i];
    const std::string tag = "cell " + std::to_string(i);
    ++rep.cells_checked;
    if (!same_cell(got, want)) {
      rep.fail(tag + ": key differs");
      continue;
    }
    if (got.rule != want.rule) rep.fail(tag + ": rule " + got.rule + " but recomputed " + want.rule);
    if (got.status != want.status) rep.fail(tag + ": status " + to_string(got.status) + " but recomputed " + to_string(want.status));
    if (got.checked.has_value() != want.checked.has_value() || (got.checked && *got.checked != *want.checked))
      rep.fail(tag + ": checked polynomial differs");
  }
  Certificate fresh = c;
  fresh.grid = rerun;
  auto [v, b] = grid_verdict(fresh);
  fresh.verdict = v;
  fresh.blockers = b;
  fresh.reciprocal.reset();
  reciprocal_upgrade(fresh);
  if (fresh.verdict != c.verdict) rep.fail(std::string("verdict ") + to_string(c.verdict) + " but recomputed " + to_string(fresh.verdict));
  if (fresh.blockers != c.blockers) rep.fail("blockers differ");
  if (fresh.verdict != Verdict::Inconclusive && c.effective) {
    const EffectiveBound e = effective_bound(c.input);
    if (e.n_canonical != c.effective->n_canonical || e.degree_bound != c.effective->degree_bound) rep.fail("effective bound differs");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// concrete members

struct ConcreteCheck {
  std::int64_t n = 0;
  IntPoly member;
  Factorization factorization;
  std::vector<bool> reciprocal;  // per factor
  bool admissible = true;        // side conditions hold at this n

  bool irreducible() const { return abs_int(factorization.content) == 1 && factorization.count() == 1; }
  bool all_reciprocal() const { return std::all_of(reciprocal.begin(), reciprocal.end(), [](bool b) { return b; }); }
};

inline ConcreteCheck concrete_check(const FamilyInput& in, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  ConcreteCheck c;
  c.n = n;
  c.member = in.member(n);
  c.factorization = factor_z(c.member);
  for (const auto& [f, m] : c.factorization.factors) c.reciprocal.push_back(is_reciprocal(f));
  c.admissible = in.admits(n);
  return c;
}

// ---------------------------------------------------------------------------
// evaluation certificate for a parametrised W(x^a, y)

struct ParametricPoint {
  Integer k;
  IntPoly w;  // W(x,k)
  bool counted = false;
  std::string note;
  std::optional<UnivariateCapelliResult> capelli;
};

struct ParametricCertificate {
  EvaluationCertificate base;
  std::vector<ParametricPoint> points;
  bool conclusive = false;  // W(x^a, y) irreducible for every a >= 1
};

/// Counts k with W(x,k) primitive and w_k(x^a) irreducible for every a, by univariate Capelli.
inline ParametricCertificate parametric_evaluation(const BiPoly& W, const std::vector<Integer>& ks) {
  ParametricCertificate out;
  out.base = vandermonde_irreducible(W, ks);
  std::int64_t counted = 0;
  for (const auto& pv : out.base.points) {
    ParametricPoint pt{pv.k, W.eval_y(pv.k), false, pv.note, std::nullopt};
    if (pv.counted) {
      const Rational norm = root_norm(pt.w);
      if (abs(norm) == 1) {
        pt.note = "norm of a root is a unit";
      } else {
        pt.capelli = univariate_capelli(pt.w, 0);
        pt.counted = pt.capelli->irreducible;
        if (!pt.counted) pt.note = "some w(x^a) is reducible";
      }
    }
    counted += pt.counted;
    out.points.push_back(std::move(pt));
  }
  out.conclusive = counted >= out.base.required;
  return out;
}

}  // namespace lacunary

#endif  // LACUNARY_PIPELINE_HPP
