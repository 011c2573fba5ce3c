#ifndef LACUNARY_IO_HPP
#define LACUNARY_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pipeline.hpp"

namespace lacunary {

using Json = nlohmann::ordered_json;

namespace io_detail {

inline Error schema(const std::string& where, const std::string& what) { return Error(ErrorCode::InvalidArgument, where + ": " + what); }

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw schema(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline Integer integer_of(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw schema(where, "not an integer: " + j.get<std::string>());
    return z;
  }
  throw schema(where, "expected an integer");
}

inline Rational rational_of(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw schema(where, "expected a rational");
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0) throw schema(where, "not a rational: " + j.get<std::string>());
  q.canonicalize();
  return q;
}

inline std::string str(const Rational& q) { return q.get_str(); }

/// Parse text, reporting the field on failure; the byte offset stays in the message.
template <class F>
auto parse_field(const Json& j, const std::string& where, F&& parse) {
  if (!j.is_string()) throw schema(where, "expected polynomial text");
  try {
    return parse(j.get<std::string>());
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    const auto at = msg.find(": ", msg.find("at position"));
    throw ParseError(e.position(), where + ": " + (at == std::string::npos ? msg : msg.substr(at + 2)));
  }
}

}  // namespace io_detail

// ---------------------------------------------------------------------------
// polynomials

inline Json poly_json(const IntPoly& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) terms.push_back(Json::array({t.exp, t.coeff.get_str()}));
  return Json{{"text", to_text(f)}, {"terms", terms}};
}

inline Json bipoly_json(const BiPoly& F) {
  Json terms = Json::array();
  for (std::int64_t j = 0; j <= F.deg_y(); ++j)
    for (const auto& t : F.ycoeff(j).terms()) terms.push_back(Json::array({t.exp, j, t.coeff.get_str()}));
  return Json{{"text", to_text(F)}, {"terms", terms}};
}

/// Reads {"text", "terms"}; the two encodings must agree.
inline IntPoly poly_from_json(const Json& j, const std::string& where) {
  using namespace io_detail;
  if (j.is_string()) return parse_field(j, where, [](const std::string& s) { return parse_poly(s); });
  const IntPoly a = parse_field(field(j, "text", where), where + ".text", [](const std::string& s) { return parse_poly(s); });
  std::vector<Term> ts;
  for (const auto& t : field(j, "terms", where)) {
    if (!t.is_array() || t.size() != 2) throw schema(where, "term must be [exp, coeff]");
    ts.push_back(Term{t[0].get<std::int64_t>(), integer_of(t[1], where)});
  }
  if (IntPoly::from_terms(std::move(ts)) != a) throw schema(where, "text and terms disagree");
  return a;
}

inline BiPoly bipoly_from_json(const Json& j, const std::string& where) {
  using namespace io_detail;
  const BiPoly a = parse_field(field(j, "text", where), where + ".text", [](const std::string& s) { return parse_bipoly(s); });
  std::map<std::int64_t, std::vector<Term>> rows;
  for (const auto& t : field(j, "terms", where)) {
    if (!t.is_array() || t.size() != 3) throw schema(where, "term must be [x_exp, y_exp, coeff]");
    rows[t[1].get<std::int64_t>()].push_back(Term{t[0].get<std::int64_t>(), integer_of(t[2], where)});
  }
  std::vector<IntPoly> v;
  if (!rows.empty()) v.resize(static_cast<std::size_t>(rows.rbegin()->first) + 1);
  for (auto& [k, ts] : rows) v.at(static_cast<std::size_t>(k)) = IntPoly::from_terms(std::move(ts));
  if (BiPoly(std::move(v)) != a) throw schema(where, "text and terms disagree");
  return a;
}

// ---------------------------------------------------------------------------
// family input

inline Json side_condition_json(const SideCondition& c) {
  if (c.kind == SideCondition::Kind::Coprime) return Json{{"coprime", c.value.get_str()}};
  return Json{{"forbidden_residue", c.value.get_str()}, {"modulus", c.modulus.get_str()}};
}

inline SideCondition side_condition_from_json(const Json& j, const std::string& where) {
  using namespace io_detail;
  SideCondition c;
  if (j.contains("coprime")) {
    c.value = integer_of(j.at("coprime"), where);
    if (c.value <= 1) throw schema(where, "coprime value must exceed 1");
    return c;
  }
  c.kind = SideCondition::Kind::ForbiddenResidue;
  c.value = integer_of(field(j, "forbidden_residue", where), where);
  c.modulus = integer_of(field(j, "modulus", where), where);
  if (c.modulus <= 1) throw schema(where, "modulus must exceed 1");
  return c;
}

inline Json family_json(const FamilyInput& in) {
  Json f = Json::array();
  for (const auto& fj : in.spec.f) f.push_back(to_text(fj));
  Json j{{"name", in.name}, {"r", in.spec.r()}, {"f", f}, {"n_shift", in.n_shift}};
  Json sc = Json::array();
  for (const auto& c : in.side_conditions) sc.push_back(side_condition_json(c));
  j["side_conditions"] = sc;
  if (in.offsets) {
    Json off = Json::array();
    for (const auto& t : in.offsets->terms) off.push_back(Json{{"coeff", to_text(t.coeff)}, {"a", t.a}, {"b", t.b}});
    j["offsets"] = off;
  }
  return j;
}

inline FamilyInput family_from_json(const Json& j) {
  using namespace io_detail;
  FamilyInput in;
  if (!j.is_object()) throw schema("family", "expected an object");
  in.name = j.value("name", std::string{});
  const Json& f = field(j, "f", "family");
  if (!f.is_array() || f.size() < 2) throw schema("family.f", "need at least two coefficients");
  for (std::size_t i = 0; i < f.size(); ++i) in.spec.f.push_back(poly_from_json(f[i], "family.f[" + std::to_string(i) + "]"));
  if (j.contains("r") && j.at("r").get<std::int64_t>() != in.spec.r())
    throw schema("family.r", "r = " + std::to_string(j.at("r").get<std::int64_t>()) + " but f has " + std::to_string(f.size()) + " entries");
  in.n_shift = j.value("n_shift", std::int64_t{0});
  if (j.contains("side_conditions"))
    for (std::size_t i = 0; i < j.at("side_conditions").size(); ++i)
      in.side_conditions.push_back(side_condition_from_json(j.at("side_conditions")[i], "family.side_conditions[" + std::to_string(i) + "]"));
  if (j.contains("offsets")) {
    Family fam;
    const Json& off = j.at("offsets");
    for (std::size_t i = 0; i < off.size(); ++i) {
      const std::string w = "family.offsets[" + std::to_string(i) + "]";
      fam.terms.push_back(FamilyTerm{poly_from_json(field(off[i], "coeff", w), w + ".coeff"), field(off[i], "a", w).get<std::int64_t>(),
                                     field(off[i], "b", w).get<std::int64_t>()});
    }
    in.offsets = fam;
  }
  return in;
}

/// Reads JSON text; syntax errors keep nlohmann's byte offset.
inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FamilyInput load_family(const std::string& path) { return family_from_json(parse_json(read_file(path))); }

// ---------------------------------------------------------------------------
// certificate

inline Json config_json(const AnalysisConfig& c) {
  return Json{{"t_max", c.t_max},
              {"evaluation_points", c.evaluation_points},
              {"oracle_specializations", c.oracle.specializations},
              {"oracle_seed", c.oracle.seed},
              {"kronecker_subsets", c.oracle.kronecker_subsets},
              {"prime_cap", c.prime_cap}};
}

inline AnalysisConfig config_from_json(const Json& j) {
  AnalysisConfig c;
  c.t_max = j.value("t_max", c.t_max);
  c.evaluation_points = j.value("evaluation_points", c.evaluation_points);
  c.oracle.specializations = j.value("oracle_specializations", c.oracle.specializations);
  c.oracle.seed = j.value("oracle_seed", c.oracle.seed);
  c.oracle.kronecker_subsets = j.value("kronecker_subsets", c.oracle.kronecker_subsets);
  c.prime_cap = j.value("prime_cap", c.prime_cap);
  return c;
}

inline Json factorization_json(const Factorization& fz) {
  Json fs = Json::array();
  for (const auto& [f, m] : fz.factors) fs.push_back(Json{{"factor", poly_json(f)}, {"multiplicity", m}, {"reciprocal", is_reciprocal(f)}});
  return Json{{"unit", fz.unit.get_str()}, {"content", fz.content.get_str()}, {"factors", fs}};
}

inline Json reciprocal_json(const ReciprocalAnalysis& ra, const std::string& note) {
  Json j{{"status", to_string(ra.status)}};
  Json diff = Json::array();
  for (const auto& t : ra.tilde.difference.terms) diff.push_back(Json{{"coeff", poly_json(t.coeff)}, {"a", t.a}, {"b", t.b}});
  j["difference"] = diff;
  j["threshold"] = ra.tilde.threshold;
  if (ra.block) j["block"] = Json{{"u", poly_json(ra.block->coeff)}, {"a", ra.block->a}, {"b", ra.block->b}};
  if (ra.block_factorization) j["u_factorization"] = factorization_json(*ra.block_factorization);
  Json cands = Json::array();
  for (const auto& c : ra.candidates) {
    Json cj{{"factor", poly_json(c.factor)}, {"reason", to_string(c.reason)}};
    if (c.divisibility)
      cj["divisibility"] = Json{{"period", c.divisibility->period},
                                {"preperiod", c.divisibility->preperiod},
                                {"residues", c.divisibility->residues},
                                {"exact", c.divisibility->exact}};
    cands.push_back(cj);
  }
  j["candidates"] = cands;
  j["all_excluded"] = ra.all_excluded;
  j["note"] = note;
  return j;
}

inline Json cell_json(const GridCell& c) {
  Json j{{"shape", to_string(c.shape)}, {"modulus", c.modulus}, {"residue", c.residue}, {"status", to_string(c.status)}, {"rule", c.rule}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (!c.relation.empty()) j["relation"] = c.relation;
  if (c.checked) j["checked"] = bipoly_json(*c.checked);
  if (!c.method.empty()) j["method"] = c.method;
  if (c.collapse_checks) j["collapse_checks"] = c.collapse_checks;
  return j;
}

inline CellStatus cell_status_from(const std::string& s) {
  for (auto v : {CellStatus::Discharged, CellStatus::Irreducible, CellStatus::Reducible, CellStatus::Inconclusive})
    if (s == to_string(v)) return v;
  throw Error(ErrorCode::InvalidArgument, "unknown cell status " + s);
}

inline GridCell cell_from_json(const Json& j, const std::string& where) {
  using namespace io_detail;
  GridCell c;
  const std::string shape = field(j, "shape", where).get<std::string>();
  if (shape != "F1" && shape != "F2") throw schema(where, "unknown shape " + shape);
  c.shape = shape == "F1" ? Shape::F1 : Shape::F2;
  c.modulus = field(j, "modulus", where).get<std::int64_t>();
  c.residue = field(j, "residue", where).get<std::int64_t>();
  c.status = cell_status_from(field(j, "status", where).get<std::string>());
  c.rule = field(j, "rule", where).get<std::string>();
  c.detail = j.value("detail", std::string{});
  c.relation = j.value("relation", std::string{});
  if (j.contains("checked")) c.checked = bipoly_from_json(j.at("checked"), where + ".checked");
  c.method = j.value("method", std::string{});
  c.collapse_checks = j.value("collapse_checks", std::int64_t{0});
  return c;
}

inline Json effective_json(const EffectiveBound& b) {
  return Json{{"positions", b.positions},
              {"norm_sq", b.norm_sq.get_str()},
              {"rho", b.rho},
              {"eps", io_detail::str(b.eps)},
              {"k0", io_detail::str(b.k0)},
              {"kappa", b.kappa.get_str()},
              {"degree_bound", b.degree_bound.get_str()},
              {"n_canonical", b.n_canonical.get_str()},
              {"n_display", b.n_display.get_str()},
              {"convention", b.convention},
              {"note", b.note}};
}

inline EffectiveBound effective_from_json(const Json& j) {
  using namespace io_detail;
  EffectiveBound b;
  b.positions = field(j, "positions", "effective").get<std::int64_t>();
  b.norm_sq = integer_of(field(j, "norm_sq", "effective"), "effective.norm_sq");
  b.rho = field(j, "rho", "effective").get<std::int64_t>();
  b.eps = rational_of(field(j, "eps", "effective"), "effective.eps");
  b.k0 = rational_of(field(j, "k0", "effective"), "effective.k0");
  b.kappa = integer_of(field(j, "kappa", "effective"), "effective.kappa");
  b.degree_bound = integer_of(field(j, "degree_bound", "effective"), "effective.degree_bound");
  b.n_canonical = integer_of(field(j, "n_canonical", "effective"), "effective.n_canonical");
  b.n_display = integer_of(field(j, "n_display", "effective"), "effective.n_display");
  b.convention = j.value("convention", b.convention);
  b.note = j.value("note", b.note);
  return b;
}

inline Json certificate_json(const Certificate& c) {
  Json j{{"format", "lacunary-certificate"}, {"version", c.version}, {"input", family_json(c.input)}, {"config", config_json(c.config)}};
  Json hyp = Json::array();
  for (const auto& h : c.hypotheses) hyp.push_back(Json{{"name", h.name}, {"pass", h.pass}, {"witness", h.witness}});
  j["hypotheses"] = hyp;
  j["constraints"] = Json{{"eps", io_detail::str(c.constraints.eps)},
                          {"k0", io_detail::str(c.constraints.k0)},
                          {"t_bound", c.constraints.t_bound},
                          {"t_bound_factor", io_detail::str(c.constraints.t_bound_factor)}};
  Json pc{{"uniform_bound", c.cover.uniform_bound.get_str()}, {"checked", c.cover.primes}};
  if (c.cover.witness_j) pc["witness_j"] = *c.cover.witness_j;
  j["primes"] = pc;
  Json grid = Json::array();
  for (const auto& cell : c.grid) grid.push_back(cell_json(cell));
  j["grid"] = grid;
  if (c.reciprocal) j["reciprocal"] = reciprocal_json(*c.reciprocal, c.reciprocal_note);
  j["verdict"] = to_string(c.verdict);
  j["blockers"] = c.blockers;
  if (c.effective) j["effective"] = effective_json(*c.effective);
  return j;
}

inline Verdict verdict_from(const std::string& s) {
  for (auto v : {Verdict::NonReciprocalPartNotReducibleForLargeN, Verdict::IrreducibleForLargeN, Verdict::ProductOfIrreducibleReciprocalsForLargeN,
                 Verdict::Inconclusive})
    if (s == to_string(v)) return v;
  throw Error(ErrorCode::InvalidArgument, "unknown verdict " + s);
}

/// The reciprocal record is recomputed from the input; verify re-derives everything else.
inline Certificate certificate_from_json(const Json& j) {
  using namespace io_detail;
  Certificate c;
  if (j.value("format", std::string{}) != "lacunary-certificate") throw schema("certificate", "not a lacunary certificate");
  c.version = field(j, "version", "certificate").get<std::string>();
  c.input = family_from_json(field(j, "input", "certificate"));
  c.config = config_from_json(field(j, "config", "certificate"));
  for (const auto& h : field(j, "hypotheses", "certificate"))
    c.hypotheses.push_back(HypothesisCheck{h.at("name").get<std::string>(), h.at("pass").get<bool>(), h.at("witness").get<std::string>()});
  const Json& cons = field(j, "constraints", "certificate");
  c.constraints = constraint_data(c.input.spec);
  if (rational_of(field(cons, "eps", "constraints"), "constraints.eps") != c.constraints.eps ||
      rational_of(field(cons, "k0", "constraints"), "constraints.k0") != c.constraints.k0)
    throw schema("constraints", "eps or k0 disagree with the input");
  const Json& pc = field(j, "primes", "certificate");
  c.cover.uniform_bound = integer_of(field(pc, "uniform_bound", "primes"), "primes.uniform_bound");
  c.cover.primes = field(pc, "checked", "primes").get<std::vector<std::uint64_t>>();
  if (pc.contains("witness_j")) c.cover.witness_j = pc.at("witness_j").get<std::int64_t>();
  const Json& grid = field(j, "grid", "certificate");
  for (std::size_t i = 0; i < grid.size(); ++i) c.grid.push_back(cell_from_json(grid[i], "grid[" + std::to_string(i) + "]"));
  if (j.contains("reciprocal")) {
    c.reciprocal = analyze_reciprocal(c.input.family());
    c.reciprocal_note = j.at("reciprocal").value("note", std::string{});
    if (j.at("reciprocal").value("status", std::string{}) != to_string(c.reciprocal->status))
      throw schema("reciprocal", "status disagrees with the input");
  }
  c.verdict = verdict_from(field(j, "verdict", "certificate").get<std::string>());
  c.blockers = field(j, "blockers", "certificate").get<std::vector<std::string>>();
  if (j.contains("effective")) c.effective = effective_from_json(j.at("effective"));
  return c;
}

inline Json concrete_json(const ConcreteCheck& c) {
  return Json{{"n", c.n}, {"member", poly_json(c.member)}, {"factorization", factorization_json(c.factorization)},
              {"irreducible", c.irreducible()}, {"all_reciprocal", c.all_reciprocal()}, {"admissible", c.admissible}};
}

}  // namespace lacunary

#endif  // LACUNARY_IO_HPP
