#include "orbitsep/commands.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

#include "orbitsep/expr.hpp"
#include "orbitsep/fixtures.hpp"
#include "orbitsep/invariants.hpp"
#include "orbitsep/separator.hpp"

namespace orbitsep {

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
  std::vector<std::string> skipped_words;
  bool unstable = false;
  bool outside_domain = false;

  void absorb_skipped(const std::vector<Word>& words) {
    for (const Word& w : words) skipped_words.push_back(w.str());
    outside_domain |= !words.empty();
  }
  Json to_json() const {
    return Json{{"skipped_words", skipped_words},
                {"unstable", unstable},
                {"outside_domain", outside_domain}};
  }
  int exit_code() const { return (unstable || outside_domain) ? 1 : 0; }
};

Point resolve_point(const SystemFile& sys, const std::string& arg) {
  auto it = sys.named_points.find(arg);
  if (it != sys.named_points.end()) return it->second;
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= arg.size(); ++i)
    if (i == arg.size() || arg[i] == ',') {
      parts.push_back(arg.substr(start, i - start));
      start = i + 1;
    }
  if (parts.size() != sys.vars.size())
    throw UsageError("point '" + arg + "' needs " +
                     std::to_string(sys.vars.size()) + " coordinates");
  Point pt;
  for (const std::string& part : parts)
    pt.push_back(parse_coordinate(part, sys.field, 0));
  return pt;
}

std::vector<Point> resolve_points(const SystemFile& sys,
                                  const std::vector<std::string>& args) {
  std::vector<Point> pts;
  pts.reserve(args.size());
  for (const std::string& a : args) pts.push_back(resolve_point(sys, a));
  return pts;
}

Json point_json(const Point& p) {
  Json a = Json::array();
  for (const FieldElem& c : p) a.push_back(c.str());
  return a;
}

std::string point_str(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += p[i].str();
  }
  return s + ")";
}

Json ideal_json(const TruncatedIdeal& ideal,
                std::span<const std::string> vars) {
  Json basis = Json::array();
  for (const Poly& f : ideal.basis) basis.push_back(poly_str(f, vars));
  return Json{{"degree", ideal.d}, {"hd", ideal.hd()}, {"basis", basis}};
}

Json words_json(const std::vector<Word>& words) {
  Json a = Json::array();
  for (const Word& w : words) a.push_back(w.str());
  return a;
}

std::string field_str(Field f) {
  return f.rational() ? "QQ" : "Fp " + std::to_string(f.modulus);
}

Json input_json(const SystemFile& sys, const std::string& name) {
  Json gens = Json::array();
  for (const SelfMap& g : sys.generator_maps) {
    Json comps = Json::array();
    for (const RatFunc& c : g.components())
      comps.push_back(ratfunc_str(c, sys.vars));
    gens.push_back(comps);
  }
  Json pts = Json::object();
  for (const auto& [n, p] : sys.named_points) pts[n] = point_json(p);
  return Json{{"file", name},
              {"field", field_str(sys.field)},
              {"vars", sys.vars},
              {"monoid", sys.monoid},
              {"generators", gens},
              {"points", pts}};
}

struct Ctx {
  const SystemFile& sys;
  const Params& params;
  SemigroupSpec spec;
  Flags flags;
  Json result;
  std::ostringstream human;

  Ctx(const SystemFile& s, const Params& p)
      : sys(s), params(p), spec(s.spec()) {}

  Point single_point(const char* cmd) const {
    if (params.points.size() != 1)
      throw UsageError(std::string(cmd) + " needs exactly one --point");
    return resolve_point(sys, params.points[0]);
  }
};

void cmd_orbit(Ctx& c) {
  Point base = c.single_point("orbit");
  OrbitSample s = orbit_sample(c.spec, base, c.params.max_len, c.params.cap);
  c.flags.absorb_skipped(s.skipped);

  Json pts = Json::array(), words = Json::array();
  for (const auto& [w, p] : s.entries) {
    words.push_back(w.str());
    pts.push_back(point_json(p));
  }
  c.result = Json{{"base", point_json(base)},
                  {"max_len", c.params.max_len},
                  {"count", s.entries.size()},
                  {"points", pts},
                  {"words", words},
                  {"skipped", words_json(s.skipped)}};
  c.human << "orbit of " << point_str(base) << " up to length "
          << c.params.max_len << ": " << s.entries.size() << " points\n";
  for (const auto& [w, p] : s.entries)
    c.human << "  [" << (w.indices.empty() ? "e" : w.str()) << "] "
            << point_str(p) << "\n";
  if (!s.skipped.empty())
    c.human << "skipped " << s.skipped.size()
            << " indeterminate word(s); base point is outside the domain\n";
}

void cmd_ideal(Ctx& c) {
  Point base = c.single_point("ideal");
  StabilizedIdeal st =
      stabilized_ideal(c.spec, base, c.params.degree, c.params.window,
                       c.params.len_limit, c.params.cap);
  c.flags.absorb_skipped(st.skipped);
  c.flags.unstable |= !st.stabilized;

  c.result = ideal_json(st.ideal, c.sys.vars);
  c.result["stabilized"] = st.stabilized;
  c.result["used_len"] = st.used_len;
  c.result["sample_size"] = st.sample_size;

  c.human << "truncated orbit ideal of " << point_str(base) << " at degree "
          << c.params.degree << ": hd = " << st.ideal.hd()
          << (st.stabilized ? " (stabilized" : " (NOT stabilized")
          << " at word length " << st.used_len << ")\n";
  for (const Poly& f : st.ideal.basis)
    c.human << "  " << poly_str(f, c.sys.vars) << "\n";
}

void cmd_hilbert(Ctx& c) {
  Point base = c.single_point("hilbert");
  OrbitSample s = orbit_sample(c.spec, base, c.params.max_len, c.params.cap);
  c.flags.absorb_skipped(s.skipped);
  auto pts = s.points();
  HilbertProfile profile =
      hilbert_profile(pts, c.spec.nvars(), c.params.degree, c.spec.field());

  Json values = Json::object();
  for (const auto& [d, hd] : profile.values) values[std::to_string(d)] = hd;
  c.result = Json{{"max_degree", c.params.degree},
                  {"sample_size", pts.size()},
                  {"values", values}};
  c.human << "Hilbert profile of " << point_str(base) << " (" << pts.size()
          << " sampled points)\n";
  for (const auto& [d, hd] : profile.values)
    c.human << "  h(" << d << ") = " << hd << "\n";
}

void cmd_generic_rank(Ctx& c) {
  Rng rng(c.params.seed);
  GenericRankCert cert = generic_rank(c.spec, c.params.degree,
                                      c.params.max_len, c.params.mode, rng);
  Json pivot_words = Json::array();
  for (const Word& w : cert.pivot_words)
    pivot_words.push_back(w.indices.empty() ? "e" : w.str());
  c.result =
      Json{{"degree", cert.d},
           {"max_len", cert.max_len},
           {"r", cert.r},
           {"hd", cert.hd},
           {"method",
            cert.method == RankMethod::exact ? "exact" : "specialized"},
           {"rank_stable", cert.rank_stable},
           {"pivot_words", pivot_words},
           {"pivot_cols", cert.pivot_cols}};
  c.human << "generic rank at degree " << cert.d << ", max_len "
          << cert.max_len << ": r = " << cert.r << ", h(d) = " << cert.hd
          << (cert.rank_stable ? " (stable under one more length)"
                               : " (rank still moving with length)")
          << "\n";
}

void cmd_exceptional(Ctx& c) {
  Rng rng(c.params.seed);
  GenericRankCert cert = generic_rank(c.spec, c.params.degree,
                                      c.params.max_len, c.params.mode, rng);
  ExceptionalIdealGens gens = exceptional_generators(
      c.spec, c.params.degree, c.params.max_len, cert, c.params.minor_budget);

  Json gtexts = Json::array();
  for (const Poly& g : gens.gens) gtexts.push_back(poly_str(g, c.sys.vars));

  Json verdicts = Json::array();
  std::ostringstream point_lines;
  for (const Point& p : resolve_points(c.sys, c.params.points)) {
    ExceptionalVerdict v =
        is_exceptional(c.spec, p, c.params.degree, c.params.max_len, &cert);
    const char* kind =
        v.kind == ExceptionalVerdict::Kind::exceptional ? "exceptional"
        : v.kind == ExceptionalVerdict::Kind::typical   ? "typical"
                                                        : "outside-domain";
    c.flags.outside_domain |=
        v.kind == ExceptionalVerdict::Kind::outside_domain;
    verdicts.push_back(Json{{"point", point_json(p)},
                            {"verdict", kind},
                            {"rank_at_point", v.rank_at_point}});
    point_lines << point_str(p) << ": " << kind << " (rank "
                << v.rank_at_point << " vs r = " << cert.r << ")\n";
  }

  c.result = Json{{"r", cert.r},
                  {"generators", gtexts},
                  {"examined", gens.examined},
                  {"exhausted_budget", gens.exhausted_budget},
                  {"points", verdicts}};
  c.human << gens.gens.size() << " minor generator(s) from " << gens.examined
          << " submatrices (r = " << cert.r << ")\n";
  for (const Poly& g : gens.gens)
    c.human << "  " << poly_str(g, c.sys.vars) << "\n";
  c.human << point_lines.str();
}

void cmd_separate(Ctx& c) {
  if (c.params.points.size() != 2)
    throw UsageError("separate needs exactly two --point arguments");
  Point x = resolve_point(c.sys, c.params.points[0]);
  Point y = resolve_point(c.sys, c.params.points[1]);
  SeparationVerdict v =
      separate(c.spec, x, y, c.params.degree, c.params.window,
               c.params.len_limit, c.params.cap);
  c.flags.unstable |= v.outcome == Outcome::unstable;
  c.flags.outside_domain |= v.outcome == Outcome::outside_domain;
  c.flags.absorb_skipped(v.detail.x_skipped);
  c.flags.absorb_skipped(v.detail.y_skipped);

  c.result = Json{{"outcome", outcome_str(v.outcome)},
                  {"degree", v.d},
                  {"x", point_json(x)},
                  {"y", point_json(y)}};
  if (v.witness) {
    c.result["witness"] = poly_str(*v.witness, c.sys.vars);
    c.result["witness_side"] = v.witness_side;
  }
  c.result["detail"] = Json{{"x_stabilized", v.detail.x_stabilized},
                            {"y_stabilized", v.detail.y_stabilized},
                            {"x_len", v.detail.x_len},
                            {"y_len", v.detail.y_len}};

  c.human << point_str(x) << " vs " << point_str(y) << " at degree " << v.d
          << ": " << outcome_str(v.outcome) << "\n";
  if (v.witness)
    c.human << "witness: " << poly_str(*v.witness, c.sys.vars)
            << " (vanishes on the orbit of "
            << point_str(v.witness_side == 0 ? x : y) << ")\n";
}

void cmd_phi_check(Ctx& c) {
  Point base = c.single_point("phi-check");
  PhiInvarianceReport inv =
      check_phi_invariance(c.spec, base, c.params.degree, c.params.window,
                           c.params.len_limit, c.params.cap);
  c.flags.unstable |= !inv.base_stabilized;

  Json entries = Json::array();
  for (const auto& e : inv.entries) {
    entries.push_back(Json{{"generator", e.gen_index},
                           {"defined", e.defined},
                           {"equal", e.equal}});
    c.flags.unstable |= e.defined && !e.image_stabilized;
  }
  Json inv_json{{"passed", inv.passed()}, {"entries", entries}};

  Json fiber_json;
  bool fiber_passed = true;
  if (c.spec.monoid()) {
    std::vector<Point> probes = resolve_points(c.sys, c.params.probes);
    if (probes.empty())
      for (const auto& [n, p] : c.sys.named_points) probes.push_back(p);
    FiberReport fr =
        fiber_check(c.spec, base, probes, c.params.degree, c.params.window,
                    c.params.len_limit, c.params.cap);
    fiber_passed = fr.passed();
    Json probes_json = Json::array();
    for (const auto& pr : fr.probes)
      probes_json.push_back(Json{{"probe", point_json(pr.probe)},
                                 {"equal", pr.equal},
                                 {"member", pr.member},
                                 {"violation", pr.violation}});
    fiber_json = Json{{"passed", fr.passed()}, {"probes", probes_json}};
  }

  c.result = Json{{"invariance", inv_json},
                  {"fiber", fiber_json},
                  {"passed", inv.passed() && fiber_passed}};
  c.human << "ideal invariance along generators: "
          << (inv.passed() ? "pass" : "FAIL") << "\n";
  if (c.spec.monoid())
    c.human << "fiber membership check: " << (fiber_passed ? "pass" : "FAIL")
            << "\n";
  else
    c.human << "fiber membership check skipped (not a monoid)\n";
}

void cmd_invariants(Ctx& c) {
  InvariantBasis basis = poly_invariants(c.spec, c.params.degree);
  Json btexts = Json::array();
  for (const Poly& f : basis.basis) btexts.push_back(poly_str(f, c.sys.vars));

  Json verify = Json::array();
  std::ostringstream verify_lines;
  for (const std::string& expr : c.params.verify) {
    RatFunc f = parse_expression(expr, c.sys.vars, c.sys.field);
    InvariantCheck check = verify_rational_invariant(c.spec, f.num(), f.den());
    Json residues = Json::array();
    for (const auto& [gi, res] : check.residues)
      residues.push_back(
          Json{{"generator", gi}, {"residue", poly_str(res, c.sys.vars)}});
    verify.push_back(
        Json{{"expr", expr}, {"ok", check.ok}, {"residues", residues}});
    verify_lines << "verify " << expr << ": "
                 << (check.ok ? "invariant" : "NOT invariant") << "\n";
  }

  c.result = Json{{"degree", basis.d},
                  {"dim", basis.dim()},
                  {"basis", btexts},
                  {"verify", verify}};
  c.human << "invariant polynomials up to degree " << basis.d << ": dim "
          << basis.dim() << "\n";
  for (const Poly& f : basis.basis)
    c.human << "  " << poly_str(f, c.sys.vars) << "\n";
  c.human << verify_lines.str();
}

void cmd_density(Ctx& c) {
  Point base = c.single_point("density");
  DensityReport r =
      density_evidence(c.spec, base, c.params.degree, c.params.inv_degree,
                       c.params.window, c.params.len_limit, c.params.cap);
  c.flags.unstable |= !r.stabilized;
  c.flags.outside_domain |= r.skipped > 0;

  const char* verdict =
      r.verdict == DensityReport::Verdict::evidence_for_dense
          ? "evidence-for-dense"
          : "inconclusive";
  c.result = Json{{"point", point_json(base)},
                  {"d_orbit", r.d_orbit},
                  {"d_inv", r.d_inv},
                  {"orbit_ideal_zero", r.orbit_ideal_zero},
                  {"invariants_trivial", r.invariants_trivial},
                  {"exceptional", r.exceptional_flag},
                  {"verdict", verdict}};
  c.human << "density evidence at " << point_str(base) << ": " << verdict
          << "\n  orbit ideal zero: " << (r.orbit_ideal_zero ? "yes" : "no")
          << "\n  invariants trivial: "
          << (r.invariants_trivial ? "yes" : "no")
          << "\n  exceptional point: " << (r.exceptional_flag ? "yes" : "no")
          << "\n";
}

Json params_json(const Params& params) {
  return Json{{"degree", params.degree},
              {"max_len", params.max_len},
              {"window", params.window},
              {"seed", params.seed},
              {"mode",
               params.mode == RankMethod::exact ? "exact" : "specialized"}};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "orbit",    "ideal",     "hilbert",    "generic-rank", "exceptional",
      "separate", "phi-check", "invariants", "density",      "selftest"};
  return names;
}

CommandResult run_command(const std::string& command, const SystemFile& sys,
                          const Params& params,
                          const std::string& input_name) {
  auto started = std::chrono::steady_clock::now();
  Ctx ctx(sys, params);

  if (command == "orbit")
    cmd_orbit(ctx);
  else if (command == "ideal")
    cmd_ideal(ctx);
  else if (command == "hilbert")
    cmd_hilbert(ctx);
  else if (command == "generic-rank")
    cmd_generic_rank(ctx);
  else if (command == "exceptional")
    cmd_exceptional(ctx);
  else if (command == "separate")
    cmd_separate(ctx);
  else if (command == "phi-check")
    cmd_phi_check(ctx);
  else if (command == "invariants")
    cmd_invariants(ctx);
  else if (command == "density")
    cmd_density(ctx);
  else
    throw UsageError("unknown command '" + command + "'");

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();

  Json doc{{"command", command},
           {"input", input_json(sys, input_name)},
           {"params", params_json(params)},
           {"result", ctx.result},
           {"flags", ctx.flags.to_json()},
           {"timing_ms", elapsed}};

  CommandResult out;
  out.exit_code = ctx.flags.exit_code();
  out.json = doc.dump(2) + "\n";
  out.human = ctx.human.str();
  return out;
}

CommandResult run_selftest(const Params& params) {
  auto started = std::chrono::steady_clock::now();
  std::ostringstream human;
  Json checks = Json::array();
  bool all_pass = true;

  auto check = [&](const std::string& name, bool pass) {
    checks.push_back(Json{{"name", name}, {"pass", pass}});
    human << (pass ? "PASS " : "FAIL ") << name << "\n";
    all_pass &= pass;
  };

  SystemFile additive = parse_system(fixtures::kAdditive);
  SystemFile squaring = parse_system(fixtures::kSquaring);
  SystemFile scaling = parse_system(fixtures::kScaling);
  SemigroupSpec add = additive.spec();
  SemigroupSpec sq = squaring.spec();
  SemigroupSpec scale = scaling.spec();
  Rng rng(params.seed);

  {
    GenericRankCert cert = generic_rank(add, 1, 2, RankMethod::exact, rng);
    check("additive: generic rank r=2, h(1)=1", cert.r == 2 && cert.hd == 1);

    ExceptionalIdealGens gens = exceptional_generators(add, 1, 2, cert, 256);
    bool has_x_multiple = false;
    for (const Poly& g : gens.gens) {
      bool div = !g.is_zero();
      for (const auto& [m, coef] : g.terms()) div &= m[0] > 0;
      has_x_multiple |= div;
    }
    check("additive: a minor generator is divisible by x", has_x_multiple);

    auto eq = separate(add, additive.named_points.at("p0"),
                       additive.named_points.at("p1"), 1, params.window,
                       params.len_limit);
    auto dist = separate(add, additive.named_points.at("p0"),
                         additive.named_points.at("q0"), 1, params.window,
                         params.len_limit);
    check("additive: (2,0) ~ (2,7) equal", eq.outcome == Outcome::equal);
    check("additive: (2,0) vs (3,0) distinct with witness x - 2",
          dist.outcome == Outcome::distinct && dist.witness &&
              poly_str(*dist.witness, additive.vars) == "x - 2");

    check("additive: invariant basis {1, x, x^2, x^3}",
          poly_invariants(add, 3).dim() == 4);
  }

  {
    GenericRankCert cert = generic_rank(sq, 2, 3, RankMethod::exact, rng);
    bool fixed_flagged = true;
    for (long v : {0L, 1L, -1L}) {
      ExceptionalVerdict verdict =
          is_exceptional(sq, {FieldElem::rational(v)}, 2, 3, &cert);
      fixed_flagged &= verdict.is_exceptional();
    }
    check("squaring: 0, 1, -1 exceptional at degree 2", fixed_flagged);

    StabilizedIdeal st = stabilized_ideal(sq, {FieldElem::rational(3)}, 3,
                                          params.window, params.len_limit);
    check("squaring: orbit ideal of 3 is zero",
          st.stabilized && st.ideal.hd() == 0);
    check("squaring: only constant invariants up to degree 8",
          poly_invariants(sq, 8).dim() == 1);

    DensityReport density = density_evidence(
        sq, {FieldElem::rational(3)}, 3, 6, params.window, params.len_limit);
    check("squaring: density evidence at 3",
          density.verdict == DensityReport::Verdict::evidence_for_dense);
  }

  {
    Poly x = Poly::variable(2, 0, kRationals);
    Poly y = Poly::variable(2, 1, kRationals);
    check("scaling: (x, y) verifies as a rational invariant",
          verify_rational_invariant(scale, x, y).ok);

    StabilizedIdeal a = phi_proxy(scale, scaling.named_points.at("a"), 1,
                                  params.window, params.len_limit);
    StabilizedIdeal b = phi_proxy(scale, scaling.named_points.at("b"), 1,
                                  params.window, params.len_limit);
    check("scaling: ideals of (1,1) and (2,2) both {x - y}",
          a.ideal == b.ideal && a.ideal.hd() == 1 &&
              poly_str(a.ideal.basis[0], scaling.vars) == "x - y");

    auto v = separate(scale, scaling.named_points.at("a"),
                      scaling.named_points.at("c"), 1, params.window,
                      params.len_limit);
    check("scaling: (1,1) vs (1,2) distinct", v.outcome == Outcome::distinct);
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  Json doc{{"command", "selftest"},
           {"input", Json{{"file", "<builtin fixtures>"}}},
           {"params", params_json(params)},
           {"result", Json{{"checks", checks}, {"all_pass", all_pass}}},
           {"flags",
            Json{{"skipped_words", Json::array()},
                 {"unstable", false},
                 {"outside_domain", false}}},
           {"timing_ms", elapsed}};

  CommandResult out;
  out.exit_code = all_pass ? 0 : 1;
  out.json = doc.dump(2) + "\n";
  out.human =
      human.str() + (all_pass ? "all checks passed\n" : "some checks FAILED\n");
  return out;
}

}  // namespace orbitsep
