#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lacunary/lacunary.hpp"

using namespace lacunary;

namespace {

struct Globals {
  bool json = false;
  unsigned threads = 1;
  std::int64_t t_max = 64;
  int points = 64;
  std::uint64_t seed = 0;
  bool timings = false;
};

AnalysisConfig config_of(const Globals& g) {
  AnalysisConfig c;
  c.threads = std::max(1u, g.threads);
  c.t_max = g.t_max;
  c.evaluation_points = g.points;
  c.oracle.seed = g.seed;
  return c;
}

std::string factor_list(const Factorization& fz) {
  std::string out;
  if (fz.unit * fz.content != 1) out += Integer(fz.unit * fz.content).get_str();
  for (const auto& [f, m] : fz.factors) {
    out += "(" + to_text(f) + ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out.empty() ? "1" : out;
}

/// A FamilySpec JSON file, or a single F(x,y) in text form.
FamilyInput read_input(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] != '{') {
    FamilyInput in;
    in.name = path;
    in.spec = spec_from_bipoly(parse_bipoly(text.substr(first)));
    return in;
  }
  return family_from_json(parse_json(text));
}

std::string shorten(const Integer& z) {
  const std::string s = z.get_str();
  if (s.size() <= 40) return s;
  return s.substr(0, 12) + "... (" + std::to_string(s.size()) + " digits)";
}

std::string cell_label(const GridCell& c) {
  if (c.modulus == 1) return "base F(x,y)";
  std::string t = c.residue < 0 ? "every t" : "t = " + std::to_string(c.residue) + " mod " + std::to_string(c.modulus);
  return std::string(to_string(c.shape)) + "(x,y^" + std::to_string(c.modulus) + "), " + t;
}

void print_summary(const Certificate& c) {
  std::cout << "family: " << (c.input.name.empty() ? "(unnamed)" : c.input.name) << "\n";
  std::cout << "F(x,y) = " << to_text(c.input.spec.to_bipoly()) << "\n";
  std::cout << "member: F(x, x^(n" << (c.input.n_shift < 0 ? " - " : " + ") << std::abs(c.input.n_shift) << "))\n";
  for (const auto& s : c.input.side_conditions) std::cout << "side condition: " << s.describe() << "\n";
  for (const auto& h : c.hypotheses) std::cout << "hypothesis " << h.name << ": " << (h.pass ? "ok" : "FAIL") << " (" << h.witness << ")\n";
  std::cout << "eps = " << c.constraints.eps.get_str() << ", k0 = " << c.constraints.k0.get_str() << ", " << c.constraints.t_bound << "\n";
  if (c.cover.witness_j) {
    std::cout << "primes above " << c.cover.uniform_bound.get_str() << " are ruled out by f_" << *c.cover.witness_j << "; odd primes checked:";
    if (c.cover.primes.empty()) std::cout << " none";
    for (auto p : c.cover.primes) std::cout << " " << p;
    std::cout << "\n";
  }
  if (!c.grid.empty()) std::cout << "grid (" << c.grid.size() << " cells):\n";
  for (const auto& g : c.grid) {
    std::cout << "  " << cell_label(g) << ": " << to_string(g.status) << " [" << g.rule;
    if (!g.method.empty()) std::cout << ", " << g.method;
    std::cout << "]";
    if (!g.detail.empty()) std::cout << " " << g.detail;
    std::cout << "\n";
  }
  if (c.reciprocal) {
    const auto& ra = *c.reciprocal;
    std::cout << "reciprocal analysis: " << to_string(ra.status) << "\n";
    if (ra.block) {
      std::cout << "  F - F~ = (" << to_text(ra.block->coeff) << ") x^(" << ra.block->a << "n" << (ra.block->b < 0 ? "" : "+") << ra.block->b << ")";
      if (ra.block_factorization) std::cout << ", u = " << factor_list(*ra.block_factorization);
      std::cout << "\n";
    }
    for (const auto& cand : ra.candidates) std::cout << "  candidate " << to_text(cand.factor) << ": " << to_string(cand.reason) << "\n";
    std::cout << "  " << c.reciprocal_note << "\n";
  }
  if (c.effective)
    std::cout << "effective bound (derived): n >= " << shorten(c.effective->n_display) << " with " << c.effective->convention << "\n";
  for (const auto& b : c.blockers) std::cout << "blocker: " << b << "\n";
  std::cout << "verdict: " << to_string(c.verdict) << "\n";
}

int cmd_analyze(const Globals& g, const std::string& path, const std::string& out) {
  const FamilyInput in = read_input(path);
  const auto t0 = std::chrono::steady_clock::now();
  const Certificate c = analyze_family(in, config_of(g));
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  Json j = certificate_json(c);
  if (g.timings) j["timings"] = Json{{"analyze_ms", ms}, {"threads", g.threads}};
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + out);
    f << j.dump(2) << "\n";
  }
  if (g.json)
    std::cout << j.dump(2) << "\n";
  else
    print_summary(c);
  return c.verdict == Verdict::Inconclusive ? 2 : 0;
}

int cmd_factor(const Globals& g, const std::string& text, const std::string& family, std::optional<std::int64_t> n) {
  IntPoly f;
  std::optional<ConcreteCheck> cc;
  if (!family.empty()) {
    if (!n) throw Error(ErrorCode::InvalidArgument, "--family needs --n");
    cc = concrete_check(read_input(family), *n);
    f = cc->member;
  } else {
    if (text.empty()) throw Error(ErrorCode::InvalidArgument, "give a polynomial or --family with --n");
    f = parse_poly(text);
  }
  const Factorization fz = cc ? cc->factorization : factor_z(f);
  auto sorted = fz.factors;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.first.deg() != b.first.deg() ? a.first.deg() < b.first.deg() : to_text(a.first) < to_text(b.first);
  });
  if (g.json) {
    Json j{{"polynomial", poly_json(f)}, {"factorization", factorization_json(fz)}};
    if (cc) j["n"] = *n, j["side_conditions_hold"] = cc->admissible;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "polynomial: " << to_text(f) << "\n";
  if (fz.unit * fz.content != 1) std::cout << "constant: " << Integer(fz.unit * fz.content).get_str() << "\n";
  int count = 0;
  for (const auto& [h, m] : sorted) {
    count += m;
    std::cout << "  " << to_text(h) << (m > 1 ? "  ^" + std::to_string(m) : "") << "  degree " << h.deg() << ", "
              << (is_reciprocal(h) ? "reciprocal" : "non-reciprocal") << "\n";
  }
  std::cout << count << (count == 1 ? " irreducible factor" : " irreducible factors") << "\n";
  if (cc && !cc->admissible) std::cout << "note: this n violates a side condition of the family\n";
  return 0;
}

int cmd_find_k(const Globals& g, const std::vector<std::string>& raw, const std::string& eps, const std::string& k0, std::size_t cap) {
  std::vector<Integer> v;
  for (const auto& s : raw) {
    Integer z;
    if (z.set_str(s, 10) != 0) throw ParseError(0, "not an integer: " + s);
    v.push_back(z);
  }
  Rational e, k;
  if (e.set_str(eps, 10) != 0) throw ParseError(0, "--eps must be a rational such as 1/4");
  if (k.set_str(k0, 10) != 0) throw ParseError(0, "--k0 must be a rational");
  e.canonicalize();
  k.canonicalize();
  const ReductionConfig cfg = make_config(e, k);
  check_exponent_vector(v);
  const auto rho = static_cast<std::int64_t>(v.size());
  const Rational V = v_bound(rho, cfg);
  std::optional<ConstructiveK> ck;
  std::string below;
  try {
    ck = find_k_constructive(v, cfg);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::BelowThreshold) throw;
    below = err.what();
  }
  ScanWindow win;
  win.max_results = cap;
  bool windowed = false;
  if (v.back() > kBruteForceScanLimit) {
    if (!ck) throw Error(ErrorCode::InvalidArgument, "v_rho too large for a full scan and no constructive k to centre a window on");
    win.lo = std::max(Integer(2), Integer(ck->k - 100000));
    win.hi = ck->k + 100000;
    windowed = true;
  }
  const auto ks = find_k_bruteforce(v, cfg, win);
  const bool found = ck && std::find(ks.begin(), ks.end(), ck->k) != ks.end();
  if (g.json) {
    Json j{{"v", raw}, {"eps", e.get_str()}, {"k0", k.get_str()}, {"kappa", cfg.kappa.get_str()}, {"rho", rho}, {"V", V.get_str()}};
    if (ck) j["constructive"] = Json{{"k", ck->k.get_str()}, {"d", ck->d.get_str()}};
    else j["constructive"] = below;
    Json list = Json::array();
    for (const auto& x : ks) list.push_back(x.get_str());
    j["bruteforce"] = list;
    j["windowed"] = windowed;
    j["agreement"] = ck ? Json(found) : Json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "rho = " << rho << ", eps = " << e.get_str() << ", k0 = " << k.get_str() << ", kappa = " << cfg.kappa.get_str() << "\n";
    std::cout << "V(rho) = " << V.get_str() << (Rational(v.back()) >= V ? " (v_rho is above it)" : " (v_rho is below it)") << "\n";
    if (ck)
      std::cout << "constructive k = " << ck->k.get_str() << " (d = " << ck->d.get_str() << ")\n";
    else
      std::cout << "constructive k: none, " << below << "\n";
    std::cout << (windowed ? "windowed " : "") << "brute-force k (" << ks.size() << (ks.size() == cap ? ", capped" : "") << "):";
    for (const auto& x : ks) std::cout << " " << x.get_str();
    std::cout << "\n";
    if (ck) std::cout << "agreement: " << (found ? "constructive k is in the brute-force list" : "MISMATCH") << "\n";
  }
  if (ck && !found && ks.size() < cap) return 2;
  return 0;
}

int cmd_capelli(const Globals& g, const std::string& path, std::int64_t n) {
  const FamilyInput in = read_input(path);
  OracleBudget b;
  b.seed = g.seed;
  const CapelliVerdict v = classify_capelli(in.spec, n, default_oracle(b));
  if (g.json) {
    Json w = Json::array();
    for (const auto& c : v.witnesses) {
      Json cj{{"modulus", c.modulus}, {"outcome", to_string(c.verdict)}};
      if (!c.discharge.empty()) cj["discharge"] = c.discharge;
      else cj["checked"] = bipoly_json(c.checked);
      w.push_back(cj);
    }
    std::cout << Json{{"n", n}, {"status", to_string(v.status)}, {"prime_bound", v.primes.bound.get_str()}, {"primes", v.primes.primes},
                      {"witnesses", w}, {"reducible_moduli", v.reducible_moduli}, {"reducible_at_n", v.reducible_at_n}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "F(x,y) = " << to_text(in.spec.to_bipoly()) << ", n = " << n << "\n";
    std::cout << "odd primes up to " << v.primes.bound.get_str() << ":";
    for (auto p : v.primes.primes) std::cout << " " << p;
    std::cout << "\n";
    for (const auto& c : v.witnesses)
      std::cout << "  m = " << c.modulus << ": " << to_string(c.verdict) << (c.discharge.empty() ? " [oracle]" : " [" + c.discharge + "]") << "\n";
    std::cout << "status: " << to_string(v.status) << (v.reducible_at_n ? ", F(x,y^n) is reducible" : "") << "\n";
  }
  return v.status == CapelliStatus::Inconclusive ? 2 : 0;
}

int cmd_verify(const Globals& g, const std::string& path) {
  const Certificate c = certificate_from_json(parse_json(read_file(path)));
  AnalysisConfig cfg = c.config;
  cfg.threads = std::max(1u, g.threads);
  Certificate run = c;
  run.config = cfg;
  const VerifyReport rep = verify(run);
  if (g.json) {
    std::cout << Json{{"ok", rep.ok}, {"cells_checked", rep.cells_checked}, {"mismatches", rep.mismatches}}.dump(2) << "\n";
  } else {
    for (const auto& m : rep.mismatches) std::cout << "mismatch: " << m << "\n";
    std::cout << (rep.ok ? "PASS" : "FAIL") << ": " << rep.cells_checked << " cells re-checked, verdict " << to_string(c.verdict) << "\n";
  }
  return rep.ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates for irreducibility of F(x, x^n) for large n"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--threads", g.threads, "worker threads for the grid")->check(CLI::Range(1u, 256u));
  app.add_option("--t-max", g.t_max, "collapse identities are spot-checked up to this t");
  app.add_option("--points", g.points, "evaluation budget recorded in the configuration");
  app.add_option("--seed", g.seed, "non-zero shuffles the oracle's specialization order");
  app.add_flag("--timings", g.timings, "add wall-clock timings to the certificate");

  std::string path, out, text, family, eps = "1/4", k0 = "2";
  std::optional<std::int64_t> n;
  std::int64_t cap_n = 1;
  std::size_t cap = 200;
  std::vector<std::string> vs;

  auto* analyze = app.add_subcommand("analyze", "check the hypotheses for a family and emit a certificate");
  analyze->add_option("family", path, "FamilySpec JSON, or F(x,y) as text")->required();
  analyze->add_option("--out,-o", out, "write the certificate to this file");

  auto* factor = app.add_subcommand("factor", "factor a polynomial over the integers");
  factor->add_option("poly", text, "polynomial in x");
  factor->add_option("--family", family, "FamilySpec JSON");
  factor->add_option("--n", n, "member index for --family");

  auto* findk = app.add_subcommand("find-k", "find k with every v_j within eps k of a multiple of k");
  findk->add_option("v", vs, "strictly increasing non-negative integers")->required();
  findk->add_option("--eps", eps, "rational in (0, 1/4]");
  findk->add_option("--k0", k0, "lower bound for k");
  findk->add_option("--max", cap, "cap on the brute-force list");

  auto* capelli = app.add_subcommand("capelli", "classify F(x, y^n) for one n");
  capelli->add_option("family", path, "FamilySpec JSON, or F(x,y) as text")->required();
  capelli->add_option("--n", cap_n, "exponent n >= 1");

  auto* ver = app.add_subcommand("verify", "re-run every check recorded in a certificate");
  ver->add_option("certificate", path, "certificate JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    if (*analyze) return cmd_analyze(g, path, out);
    if (*factor) return cmd_factor(g, text, family, n);
    if (*findk) return cmd_find_k(g, vs, eps, k0, cap);
    if (*capelli) return cmd_capelli(g, path, cap_n);
    if (*ver) return cmd_verify(g, path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
