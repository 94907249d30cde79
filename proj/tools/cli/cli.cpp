#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "pwb/errors.hpp"
#include "pwb/formats.hpp"
#include "pwb/parser.hpp"

namespace pwb::cli {

bool is_negative_kind(const std::string& kind) {
  static const char* const negative[] = {"NotAutomorphism",         "NotReflection", "JacobiFailure",  "NotSplittable",
                                         "InducedBracketNotClosed", "LieJacobiFails", "NotQuadratic"};
  for (const char* k : negative)
    if (kind == k) return true;
  return false;
}

std::string file_sha256(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed for " + path);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return hex.str();
}

namespace {

struct Options {
  std::string algebra, element, map, matrix, lie, out, potential, p = "1", q = "0", names, extend, trace;
  std::string family_kind;
  std::vector<std::string> group;
  std::optional<int> degree;
  int budget = 24, probe = 3, dims = -1, cap = 4, n = 2;
  bool defer_jacobi = false, json = false, aliases_paper = false, homogenized = false;
};

// Output of one command before it is wrapped in the report envelope.
struct Outcome {
  Json result = Json::object();
  std::vector<std::string> diagnostics;
  std::string summary;
  std::string text;  // plain output for family/envelope without --json
  int code = kOk;
};

class Context {
 public:
  explicit Context(const Options& o) : opts(o) { gb.degree_budget = o.budget; }
  const Options& opts;
  GroebnerOptions gb;
  Json inputs = Json::array();

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    inputs.push_back(Json{{"path", path}, {"sha256", file_sha256(path)}});
    return text;
  }
  PoissonAlgebra algebra(bool defer = false) {
    if (opts.algebra.empty()) throw InvalidArgument("--algebra is required");
    return parse_pois(read(opts.algebra), defer || opts.defer_jacobi);
  }
  std::vector<GradedMap> group(const PoissonAlgebra& a) {
    if (opts.group.empty()) throw InvalidArgument("--group is required");
    std::vector<GradedMap> gens;
    for (const auto& path : opts.group) gens.push_back(parse_map(read(path), a));
    return gens;
  }
};

std::string pair_name(const PolyRing& r, std::pair<int, int> p) {
  return "{" + r.var(p.first) + "," + r.var(p.second) + "}";
}

// Every group generator must be a Poisson automorphism; NotAutomorphism otherwise.
void require_automorphisms(const PoissonAlgebra& a, const std::vector<GradedMap>& gens) {
  for (const auto& g : gens) {
    auto chk = is_poisson_automorphism(a, g.matrix());
    if (!chk.ok)
      throw NotAutomorphism("map " + g.name() + " does not preserve " + pair_name(a.ring(), chk.failing));
  }
}

Outcome cmd_check(Context& ctx) {
  Outcome o;
  PoissonAlgebra a = ctx.algebra(true);
  Json& r = o.result;
  r["name"] = a.name();
  r["vars"] = a.ring().vars();
  r["brackets"] = bracket_table(a.ring(), a.entries());
  JacobiResult jr = jacobi_check(a);
  if (jr.ok) {
    r["jacobi"] = Json{{"ok", true}};
  } else {
    r["jacobi"] = Json{{"ok", false},
                       {"triple", {a.ring().var(jr.triple[0]), a.ring().var(jr.triple[1]), a.ring().var(jr.triple[2])}},
                       {"cyclic_sum", jr.cyclic_sum.str()}};
    o.code = kNegative;
  }
  r["quadratic"] = a.quadratic();
  r["degree_shift"] = a.degree_shift() ? Json(*a.degree_shift()) : Json(nullptr);
  r["modular_derivation"] = to_json(modular_derivation(a), a.ring());
  r["unimodular"] = is_unimodular(a);
  o.summary = jr.ok ? "Jacobi identity holds" : "Jacobi identity fails on (" + r["jacobi"]["triple"][0].get<std::string>() +
                                                    "," + r["jacobi"]["triple"][1].get<std::string>() + "," +
                                                    r["jacobi"]["triple"][2].get<std::string>() + ")";
  if (jr.ok && !ctx.opts.map.empty()) {
    GradedMap g = parse_map(ctx.read(ctx.opts.map), a);
    Classification c = classify(a, g);
    Json m{{"kind", kind_name(c.kind)}};
    if (c.kind == Classification::Kind::NotAutomorphism) {
      m["failing"] = pair_name(a.ring(), c.failing);
      o.code = kNegative;
    } else if (c.kind != Classification::Kind::InfiniteOrder) {
      m["order"] = c.order;
    }
    if (c.kind == Classification::Kind::Reflection) m["xi"] = to_json(c.xi);
    r["map"] = m;
    o.summary += "; map " + g.name() + " is " + kind_name(c.kind);
  }
  return o;
}

Outcome cmd_normal(Context& ctx) {
  Outcome o;
  PoissonAlgebra a = ctx.algebra();
  if (!ctx.opts.element.empty()) {
    Poly u = parse_poly(a.ring(), ctx.opts.element);
    auto d = normal_check(a, u);
    o.result["element"] = u.str();
    o.result["normal"] = d.has_value();
    if (d) o.result["derivation"] = to_json(*d, a.ring());
    o.code = d ? kOk : kNegative;
    o.summary = u.str() + (d ? " is" : " is not") + " Poisson normal";
    return o;
  }
  SolutionSet s = normal_find_deg1(a, ctx.gb);
  o.result["normal"] = to_json(s, a.ring());
  o.summary = std::string("degree-one normal elements: ") + kind_name(s.kind);
  if (s.kind == SolutionSet::Kind::IdealOnly) o.diagnostics.push_back("solution set left as an ideal");
  return o;
}

Outcome cmd_reflections(Context& ctx) {
  Outcome o;
  PoissonAlgebra a = ctx.algebra();
  ReflectionReport rep = find_reflections(a, ctx.gb);
  o.result["normal"] = to_json(rep.normal, a.ring());
  switch (rep.kind) {
    case ReflectionReport::Kind::NoReflections:
      o.result["reflections"] = "none";
      break;
    case ReflectionReport::Kind::Inconclusive:
      o.result["reflections"] = "inconclusive";
      o.diagnostics.push_back("normal-element solution set unresolved; reflections not enumerated");
      break;
    case ReflectionReport::Kind::Families: {
      o.result["reflections"] = "families";
      Json fams = Json::array();
      for (const auto& f : rep.families) {
        Json jf;
        if (f.direction_basis.empty()) {
          jf["direction"] = linear_form(a.ring(), f.direction);
        } else {
          Json span = Json::array();
          for (const auto& b : f.direction_basis) span.push_back(linear_form(a.ring(), b));
          jf["direction_span"] = span;
          jf["chart"] = f.chart;
        }
        jf["xi_unconstrained"] = f.xi_unconstrained;
        Json xs = Json::array();
        for (const auto& x : f.xi_values) xs.push_back(to_json(x));
        jf["xi_values"] = xs;
        jf["order_two"] = f.order_two;
        jf["params"] = f.params.vars();
        jf["ideal"] = to_json(f.ideal);
        Cyclo xi = f.xi_values.empty() ? Cyclo(-1) : f.xi_values[0];
        if (auto s = sample_reflection(a, f, xi, ctx.gb)) {
          jf["sample"] = Json{{"xi", to_json(xi)}, {"matrix", to_json(*s)}, {"map", emit_map(GradedMap(*s, "r"), a)}};
        }
        fams.push_back(jf);
      }
      o.result["families"] = fams;
      break;
    }
  }
  o.summary = std::string("reflections: ") + kind_name(rep.kind);
  return o;
}

Outcome cmd_fixed(Context& ctx) {
  Outcome o;
  PoissonAlgebra a = ctx.algebra();
  auto gens = ctx.group(a);
  require_automorphisms(a, gens);
  PoissonGroup g = group_closure(gens);
  PresentedPoisson p = fixed_group(a, g, ctx.opts.degree);
  o.result["group"] = Json{{"size", g.size()}, {"exponent", g.exponent}};
  o.result["fixed"] = to_json(p);
  if (auto ag = as_algebra(p); ag && p.polynomial()) {
    o.result["pois"] = emit_pois(PoissonAlgebra(ag->ring(), ag->entries(), false, a.name() + "_G"));
    o.result["modular_derivation"] = to_json(modular_derivation(*ag), ag->ring());
    o.result["unimodular"] = is_unimodular(*ag);
  }
  o.diagnostics = p.diagnostics;
  o.summary = std::to_string(p.names.size()) + " generators, " + std::to_string(p.relations.size()) + " relations" +
              (p.polynomial() ? " (polynomial)" : "");
  return o;
}

Outcome cmd_report(Context& ctx) {
  Outcome o;
  PoissonAlgebra a = ctx.algebra();
  auto gens = ctx.group(a);
  require_automorphisms(a, gens);
  PoissonGroup g = group_closure(gens);
  RigidityReport r = rigidity_report(a, g, ctx.opts.degree, ctx.opts.probe, ctx.gb);
  o.result = to_json(r);
  o.diagnostics = r.diagnostics;
  o.summary = r.distinguished ? "A and A^G distinguished by " + r.witness : "A and A^G not distinguished";
  return o;
}

Outcome cmd_trace(Context& ctx) {
  Outcome o;
  Matrix m;
  if (!ctx.opts.matrix.empty()) {
    m = parse_mat(ctx.read(ctx.opts.matrix));
  } else {
    if (ctx.opts.map.empty()) throw InvalidArgument("--map (with --algebra) or --matrix is required");
    PoissonAlgebra a = ctx.algebra();
    m = parse_map(ctx.read(ctx.opts.map), a).matrix();
  }
  GradedMap g(m);
  const LinearClass& lc = g.linear_class();
  RationalSeries s = trace_series(m);
  o.result["trace"] = to_json(s, ctx.opts.degree.value_or(8));
  o.result["order"] = lc.order ? Json(*lc.order) : Json(nullptr);
  o.result["reflection"] = lc.reflection;
  if (lc.reflection) o.result["xi"] = to_json(lc.xi);
  o.result["reflection_shape"] = is_quasi_reflection_series(s, m.rows());
  o.summary = "trace series " + s.str();
  return o;
}

Outcome cmd_molien(Context& ctx) {
  Outcome o;
  PoissonAlgebra a = ctx.algebra();
  auto gens = ctx.group(a);
  PoissonGroup g = group_closure(gens);
  RationalSeries s = molien_series(g);
  o.result["group"] = Json{{"size", g.size()}, {"exponent", g.exponent}};
  o.result["molien"] = to_json(s, ctx.opts.degree.value_or(8));
  o.summary = "Molien series " + s.str();
  return o;
}

Outcome cmd_family(Context& ctx) {
  const Options& op = ctx.opts;
  Outcome o;
  PoissonAlgebra a;
  const std::string& kind = op.family_kind;
  if (kind == "skew") {
    if (op.matrix.empty()) throw InvalidArgument("family skew needs --matrix");
    std::vector<std::string> names;
    std::istringstream in(op.names);
    for (std::string s; std::getline(in, s, ',');)
      if (!s.empty()) names.push_back(s);
    a = skew_symmetric(parse_mat(ctx.read(op.matrix)), names);
  } else if (kind == "jacobian") {
    if (!op.potential.empty()) {
      a = jacobian(parse_poly(PolyRing({"x", "y", "z"}, 1), op.potential));
      // Re-parse so the ring conductor covers the coefficients.
      a = parse_pois(emit_pois(a));
    } else {
      a = jacobian_fpq(parse_scalar(op.p), parse_scalar(op.q));
    }
  } else if (kind == "qmatrix") {
    a = quantum_matrices(op.n);
  } else if (kind == "weyl") {
    a = op.homogenized ? homogenized_weyl(op.n) : weyl(op.n);
  } else if (kind == "ph-lie") {
    if (op.lie.empty()) throw InvalidArgument("family ph-lie needs --lie");
    a = ph_lie(parse_lie(ctx.read(op.lie)));
  } else {
    throw InvalidArgument("unknown family '" + kind + "'");
  }
  std::string name = a.name();
  for (char& c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') c = '_';
  while (!name.empty() && name.back() == '_') name.pop_back();
  a = PoissonAlgebra(a.ring(), a.entries(), true, name.empty() ? "A" : name);
  o.text = emit_pois(a);
  o.result["pois"] = o.text;
  o.result["quadratic"] = a.quadratic();
  o.result["unimodular"] = is_unimodular(a);
  if (!op.out.empty()) {
    std::ofstream f(op.out);
    if (!f) throw FormatError("cannot write '" + op.out + "'");
    f << o.text;
    o.result["written"] = op.out;
  }
  o.summary = "family " + kind + ": " + std::to_string(a.nvars()) + " variables";
  return o;
}

Outcome cmd_envelope(Context& ctx) {
  Outcome o;
  PoissonAlgebra a = ctx.algebra();
  NCPresentation p = envelope_presentation(a, ctx.opts.aliases_paper);
  Json rels = Json::array();
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    rels.push_back(p.relation_str(i));
    o.text += p.relation_str(i) + "\n";
  }
  o.result["generators"] = p.generators;
  o.result["relations"] = rels;
  o.summary = std::to_string(p.relations.size()) + " relations on " + std::to_string(p.generators.size()) + " generators";
  if (ctx.opts.dims >= 0) {
    auto dims = envelope_dims(a, ctx.opts.dims, ctx.opts.cap);
    std::vector<int> ones(2 * a.nvars(), 1);
    auto expected = series_taylor(free_hilbert_series(ones), ctx.opts.dims);
    Json exp = Json::array();
    bool match = true;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      exp.push_back(expected[k].str());
      match = match && expected[k] == Cyclo(dims[k]);
    }
    o.result["dims"] = Json{{"computed", dims}, {"expected", exp}, {"match", match}};
    std::string line = "# dims:";
    for (long d : dims) line += " " + std::to_string(d);
    o.text += line + (match ? " (matches (1-t)^-" : " (differs from (1-t)^-") + std::to_string(2 * a.nvars()) + ")\n";
    if (!match) o.code = kNegative;
  }
  if (!ctx.opts.extend.empty()) {
    GradedMap g = parse_map(ctx.read(ctx.opts.extend), a);
    GradedMap big = envelope_extend(a, g);
    o.result["extend"] = to_json(big.matrix());
    o.text += "# extension preserves the relations\n";
  }
  if (!ctx.opts.trace.empty()) {
    GradedMap g = parse_map(ctx.read(ctx.opts.trace), a);
    EnvelopeTrace t = envelope_trace(a, g);
    bool equal = t.series == t.extended;
    o.result["trace"] = Json{{"squared", to_json(t.series, -1)},
                             {"extended", to_json(t.extended, -1)},
                             {"equal", equal},
                             {"quasi_reflection", t.quasi_reflection}};
    o.text += "# trace " + t.extended.str() + (equal ? " = " : " != ") + "square of the trace on A; " +
              (t.quasi_reflection ? "quasi-reflection\n" : "not a quasi-reflection\n");
    if (!equal) o.code = kNegative;
  }
  return o;
}

Outcome cmd_suite(Context&) {
  Outcome o;
  auto vectors = paper_suite();
  Json rows = Json::array();
  int passed = 0;
  std::ostringstream table;
  for (const auto& v : vectors) {
    rows.push_back(Json{{"key", v.key}, {"description", v.description}, {"pass", v.pass}, {"detail", v.detail}});
    passed += v.pass;
    table << (v.pass ? "PASS " : "FAIL ") << v.key << "  " << v.description << (v.pass ? "" : "  [" + v.detail + "]")
          << "\n";
  }
  o.result["vectors"] = rows;
  o.result["passed"] = passed;
  o.result["total"] = vectors.size();
  o.summary = table.str() + std::to_string(passed) + "/" + std::to_string(vectors.size()) + " vectors pass";
  if (passed != static_cast<int>(vectors.size())) o.code = kNegative;
  return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options op;
  CLI::App app{"Exact computations with polynomial Poisson algebras, their reflections and fixed rings"};
  app.name("pwb");
  app.require_subcommand(1, 1);

  auto common = [&](CLI::App* s) {
    s->add_option("--budget", op.budget, "Groebner degree cap")->capture_default_str();
    s->add_flag("--defer-jacobi", op.defer_jacobi, "Skip the Jacobi check when loading the algebra");
    s->add_flag("--json", op.json, "Emit the JSON report (default for all but family/envelope)");
  };
  auto with_algebra = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--algebra", op.algebra, ".pois file");
    if (required) opt->required();
    common(s);
  };

  std::map<CLI::App*, std::function<Outcome(Context&)>> handlers;
  auto* check = app.add_subcommand("check", "Validate an algebra file (and optionally classify a map)");
  with_algebra(check, true);
  check->add_option("--map", op.map, ".map file to classify");
  handlers[check] = cmd_check;

  auto* normal = app.add_subcommand("normal", "Degree-one Poisson normal elements");
  with_algebra(normal, true);
  normal->add_option("--element", op.element, "Test a single element instead");
  handlers[normal] = cmd_normal;

  auto* refl = app.add_subcommand("reflections", "Poisson reflections as parameterized families");
  with_algebra(refl, true);
  handlers[refl] = cmd_reflections;

  auto* fixed = app.add_subcommand("fixed", "Fixed subring with induced bracket");
  with_algebra(fixed, true);
  fixed->add_option("--group", op.group, "Comma-separated .map generators")->delimiter(',')->required();
  fixed->add_option("--degree", op.degree, "Degree bound (default max(4, 2*exponent))");
  handlers[fixed] = cmd_fixed;

  auto* rep = app.add_subcommand("report", "Rigidity report comparing A and its fixed ring");
  with_algebra(rep, true);
  rep->add_option("--group", op.group, "Comma-separated .map generators")->delimiter(',')->required();
  rep->add_option("--degree", op.degree, "Degree bound for the fixed ring");
  rep->add_option("--probe", op.probe, "Degree through which invariants are compared")->capture_default_str();
  handlers[rep] = cmd_report;

  auto* trace = app.add_subcommand("trace", "Trace series 1/det(I - t g)");
  with_algebra(trace, false);
  trace->add_option("--map", op.map, ".map file (needs --algebra)");
  trace->add_option("--matrix", op.matrix, ".mat file");
  trace->add_option("--degree", op.degree, "Taylor order (default 8)");
  handlers[trace] = cmd_trace;

  auto* molien = app.add_subcommand("molien", "Molien series of a finite group");
  with_algebra(molien, true);
  molien->add_option("--group", op.group, "Comma-separated .map generators")->delimiter(',')->required();
  molien->add_option("--degree", op.degree, "Taylor order (default 8)");
  handlers[molien] = cmd_molien;

  auto* family = app.add_subcommand("family", "Emit a .pois file for a named family");
  common(family);
  family->add_option("kind", op.family_kind, "skew | jacobian | qmatrix | weyl | ph-lie")
      ->required()
      ->check(CLI::IsMember({"skew", "jacobian", "qmatrix", "weyl", "ph-lie"}));
  family->add_option("--matrix", op.matrix, "skew: .mat file with q");
  family->add_option("--names", op.names, "skew: comma-separated variable names");
  family->add_option("--p", op.p, "jacobian: coefficient p")->capture_default_str();
  family->add_option("--q", op.q, "jacobian: coefficient q")->capture_default_str();
  family->add_option("--potential", op.potential, "jacobian: potential in x, y, z");
  family->add_option("--n", op.n, "qmatrix/weyl: size")->capture_default_str();
  family->add_flag("--homogenized", op.homogenized, "weyl: homogenized variant");
  family->add_option("--lie", op.lie, "ph-lie: .lie file");
  family->add_option("--out", op.out, "Also write the .pois text to this file");
  handlers[family] = cmd_family;

  auto* env = app.add_subcommand("envelope", "Poisson enveloping algebra presentation");
  with_algebra(env, true);
  env->add_option("--dims", op.dims, "Verify graded dimensions through this degree");
  env->add_option("--cap", op.cap, "Largest allowed --dims")->capture_default_str();
  env->add_option("--extend", op.extend, ".map file to extend to the enveloping algebra");
  env->add_option("--trace", op.trace, ".map file of a reflection whose trace is squared");
  env->add_flag("--aliases-paper", op.aliases_paper, "Name generators <var>1 (m) and <var>2 (h)");
  handlers[env] = cmd_envelope;

  auto* suite = app.add_subcommand("paper-suite", "Run every bundled reference vector");
  common(suite);
  handlers[suite] = cmd_suite;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, err, err) == 0 ? kOk : kError;
  }

  CLI::App* sub = app.get_subcommands().front();
  Context ctx(op);
  Json report{{"schema", "pwb/1"}, {"command", sub->get_name()}};
  Outcome o;
  try {
    o = handlers.at(sub)(ctx);
  } catch (const Error& e) {
    o = Outcome{};
    o.code = is_negative_kind(e.kind()) ? kNegative : kError;
    o.result = Json{{"error", Json{{"kind", e.kind()}, {"message", e.what()}}}};
    o.summary = std::string(e.kind()) + ": " + e.what();
  } catch (const std::exception& e) {
    o = Outcome{};
    o.code = kError;
    o.result = Json{{"error", Json{{"kind", "Failure"}, {"message", e.what()}}}};
    o.summary = std::string("error: ") + e.what();
  }
  report["inputs"] = ctx.inputs;
  report["result"] = o.result;
  report["diagnostics"] = o.diagnostics;
  report["exit_code"] = o.code;

  bool text_mode = !op.json && !o.text.empty() && !o.result.contains("error");
  if (text_mode)
    out << o.text;
  else
    out << report.dump(2) << "\n";
  err << "pwb " << sub->get_name() << ": " << o.summary << "\n";
  for (const auto& d : o.diagnostics) err << "  note: " << d << "\n";
  return o.code;
}

}  // namespace pwb::cli
