#include "hh/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hh/errors.hpp"
#include "hh/json_io.hpp"

namespace hh::cli {

namespace {

const char* kExitCodes =
    "Exit codes: 0 success, 1 internal error, 2 configuration error, "
    "3 obstruction of the expansion, 4 verification failure.";

struct Config {
  long precision = 256;
  std::string format = "json";
  std::string out;

  std::string lambda, C, branch;
  int order = 6;
  std::string a2, b4, D1, D2;
  std::vector<std::string> binds;

  std::string solution, family, target;
  std::string against, reduction;

  int horizon = 200;
  std::string epsilon = "1/100";
  int tm_degree = 4;
  long tm_precision = 128;

  std::string which = "minus";

  std::vector<std::string> taus;
  std::string radius;
  int points = 0;

  std::string bindings_file;

  std::string batch_file;
  int jobs = 1;
};

Rat parse_rat_flag(const std::string& name, const std::string& v) {
  if (v.empty()) throw PreconditionError("--" + name + " is required");
  try {
    return parse_rat(v);
  } catch (const std::exception& e) {
    throw PreconditionError("--" + name + ": " + e.what());
  }
}

QI parse_qi_flag(const std::string& name, const std::string& v) {
  try {
    return parse_qi(v);
  } catch (const std::exception& e) {
    throw PreconditionError("--" + name + ": " + e.what());
  }
}

std::map<std::string, AlgScalar> collect_bindings(const Config& c) {
  std::map<std::string, AlgScalar> b;
  auto put = [&](const std::string& name, const std::string& v) {
    if (!v.empty()) b[name] = AlgScalar(parse_qi_flag(name, v));
  };
  put("a2", c.a2);
  put("b4", c.b4);
  put("D1", c.D1);
  put("D2", c.D2);
  for (const auto& kv : c.binds) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw PreconditionError("--bind expects name=value, got " + kv);
    put(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return b;
}

int digits_for(long prec) { return std::max(6, static_cast<int>(std::floor(static_cast<double>(prec) * 0.30103))); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char ch : s) o += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return o + "\"";
}

std::string report_csv(const Report& r) {
  std::string s = "name,pass,detail,location\n";
  for (const auto& c : r.checks)
    s += csv_escape(c.name) + "," + (c.pass ? "true" : "false") + "," + csv_escape(c.detail) + "," +
         csv_escape(c.location) + "\n";
  return s;
}

std::string solution_csv(const SeriesSolution& s) {
  std::string o = "component,exponent,coefficient\n";
  for (const auto& [name, ps] : {std::pair<const char*, const PSeries*>{"x", &s.x}, {"y", &s.y}})
    for (size_t k = 0; k < ps->coeffs().size(); ++k)
      if (!ps->coeffs()[k].is_zero())
        o += std::string(name) + "," + to_string(ps->exponent(k)) + "," + csv_escape(ps->coeffs()[k].to_string()) +
             "\n";
  return o;
}

void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
  } else {
    write_file_atomic(c.out, text);
  }
}

void emit_report(const Config& c, const Report& r, std::ostream& out) {
  emit(c, c.format == "csv" ? report_csv(r) : dump(to_json(r)), out);
}

SeriesSolution load_solution(const std::string& path) {
  if (path.empty()) throw PreconditionError("--solution is required");
  return solution_from_json(parse_json(read_file(path)));
}

// ---------------------------------------------------------------- test

Json balance_json(const Balance& b, const ResonanceReport& r) {
  Json a = Json::array();
  for (const auto& v : b.a_values) a.push_back(v.to_string());
  Json vals = Json::array(), rat = Json::array(), mult = Json::array();
  for (size_t k = 0; k < r.values.size(); ++k) {
    vals.push_back(r.values[k].to_string());
    rat.push_back(static_cast<bool>(r.rational[k]));
    mult.push_back(r.multiplicity[k]);
  }
  return {{"label", to_string(b.label)},
          {"alpha", b.alpha.to_string()},
          {"beta", to_string(b.beta)},
          {"a_values", a},
          {"a_arbitrary", b.a_arbitrary},
          {"b", to_string(b.b)},
          {"logarithmic", b.logarithmic},
          {"note", b.note},
          {"resonances", {{"values", vals}, {"rational", rat}, {"multiplicity", mult}, {"notes", r.notes}}}};
}

int cmd_test(const Config& c, std::ostream& out) {
  SystemParams p{parse_rat_flag("lambda", c.lambda), parse_rat_flag("C", c.C)};
  check_params(p);
  Classification cl = classify(p);
  Report r;
  r.kind = "painleve_test";
  r.subject = "lambda=" + to_string(p.lambda) + " C=" + to_string(p.C);
  Json bal = Json::array();
  for (const auto& b : dominant_balances(p)) bal.push_back(balance_json(b, resonances(b, p)));
  Json verdicts = Json::array();
  for (const auto& v : cl.balances) {
    Json j = {{"label", to_string(v.label)}, {"rational", v.rational}, {"obstruction", v.obstruction}};
    j["q"] = v.q ? Json(*v.q) : Json(nullptr);
    j["compatible"] = v.compatible ? Json(*v.compatible) : Json(nullptr);
    verdicts.push_back(j);
  }
  r.data = {{"lambda", to_string(p.lambda)},
            {"C", to_string(p.C)},
            {"balances", bal},
            {"classification",
             {{"kind", to_string(cl.kind)},
              {"integrable_case", cl.integrable_case},
              {"puiseux_eligible", cl.puiseux_eligible},
              {"summary", cl.summary()},
              {"balances", verdicts}}}};
  r.checks.push_back({"classification", true, cl.summary(), ""});
  emit_report(c, r, out);
  return kOk;
}

int cmd_resonance(const Config& c, std::ostream& out) {
  Rat lambda = parse_rat_flag("lambda", c.lambda);
  auto pairs = resonance_solve(lambda);
  emit(c, dump(to_json(pairs, lambda)), out);
  for (const auto& p : pairs)
    if (!p.eq1_zero || !p.eq2_zero) return kVerification;
  return kOk;
}

// ---------------------------------------------------------------- series

int cmd_series(const Config& c, std::ostream& out, std::ostream& err) {
  SystemParams p{parse_rat_flag("lambda", c.lambda), parse_rat_flag("C", c.C)};
  check_params(p);
  auto bindings = collect_bindings(c);
  const std::string& br = c.branch;
  SeriesSolution s;
  if (br == "real-plus" || br == "real-i" || br == "c2-plus" || br == "c2-i") {
    if (p.C != Rat(-16, 5)) throw PreconditionError("branch " + br + " requires C = -16/5");
    s = generate_case2_series(p.lambda, br, bindings, c.order);
  } else if (br == "puiseux-plus" || br == "puiseux-minus") {
    if (p.C != Rat(-9, 8)) throw PreconditionError("branch " + br + " requires C = -9/8");
    s = generate_puiseux_series(p.lambda, br == "puiseux-plus" ? 1 : -1, bindings, c.order);
  } else if (br == "case1-plus" || br == "case1-minus" || br == "case2") {
    if (!bindings.empty()) throw PreconditionError("generic branches take no parameter bindings");
    GenericResult g = generate_generic(p, br == "case2" ? CaseLabel::Case2 : CaseLabel::Case1, br, c.order);
    if (!g.solution) {
      Report r;
      r.kind = "obstruction";
      r.subject = "lambda=" + to_string(p.lambda) + " C=" + to_string(p.C) + " branch=" + br;
      const Obstruction& o = *g.obstruction;
      r.checks.push_back({"compatibility", false, o.message, "resonance " + to_string(o.resonance)});
      r.data = {{"label", o.label}, {"resonance", to_string(o.resonance)}, {"condition", o.condition.to_string()}};
      emit_report(c, r, out);
      err << "obstruction: " << o.message << "\n";
      return kObstruction;
    }
    s = *g.solution;
  } else {
    throw PreconditionError("unknown branch '" + br +
                            "' (expected real-plus, real-i, c2-plus, c2-i, puiseux-plus, puiseux-minus, "
                            "case1-plus, case1-minus, case2)");
  }
  emit(c, c.format == "csv" ? solution_csv(s) : dump(to_json(s)), out);
  return kOk;
}

int cmd_closed_form(const Config& c, std::ostream& out) {
  SeriesSolution s = closed_form_series(parse_closed_form(c.which), c.order);
  emit(c, c.format == "csv" ? solution_csv(s) : dump(to_json(s)), out);
  return kOk;
}

// ---------------------------------------------------------------- verify

Check residual_check(const std::string& name, const SeriesSolution& s) {
  ResidualCheck rc = check_system(s);
  Check ch{name, rc.ok, rc.message(), ""};
  if (!rc.ok && rc.exponent) ch.location = rc.component + " at t^" + to_string(*rc.exponent);
  return ch;
}

int cmd_verify(const Config& c, std::ostream& out) {
  SeriesSolution s = load_solution(c.solution);
  Report r;
  r.kind = "verification";
  r.subject = s.family + "/" + s.branch;
  r.checks.push_back(residual_check("residual_system", s));
  r.checks.push_back(residual_check("x_negation", negate_x(s)));

  std::optional<EnergyValue> energy;
  try {
    energy = energy_series(s);
    r.checks.push_back({"energy_constant", true, "H = " + energy->H.to_string(), ""});
    r.data["energy"] = energy->H.to_string();
  } catch (const VerificationFailure& e) {
    r.checks.push_back({"energy_constant", false, e.what(), ""});
  } catch (const PreconditionError& e) {
    r.data["energy_skipped"] = e.what();
  }
  if (energy) {
    auto first = first_nonzero(residual_fourth_order(s, *energy));
    r.checks.push_back({"fourth_order", !first, first ? "nonzero residual" : "zero residual",
                        first ? "t^" + to_string(*first) : ""});
  }

  if (!c.reduction.empty()) {
    Reduction v = parse_reduction(c.reduction);
    std::optional<Rat> H;
    if (energy)
      if (auto k = energy->H.as_constant())
        if (auto q = k->as_rat()) H = *q;
    FirstOrderCoeffs co = first_order_coeffs(s.params, H.value_or(Rat(0)), v);
    FirstOrderResidual fr = residual_first_order(s.y, co, std::nullopt, !H.has_value());
    std::string detail = fr.ok ? "residual vanishes" : "nonzero residual";
    if (fr.fitted_D) detail = "residual is the constant " + fr.fitted_D->to_string();
    r.checks.push_back({"reduction_" + to_string(v), fr.ok, detail, fr.first_bad ? "t^" + to_string(*fr.first_bad) : ""});
  }

  if (!c.against.empty()) {
    ClosedForm w = parse_closed_form(c.against);
    int N = std::max(4, static_cast<int>(std::ceil(s.y.order().get_d())));
    SeriesSolution target = closed_form_series(w, N);
    try {
      MatchResult m = match_parameters(s, target);
      std::string detail = "agree below t^" + to_string(m.checked_below);
      Json b = Json::object();
      for (const auto& [k, v] : m.bindings) {
        detail += ", " + k + " = " + v.to_string();
        b[k] = v.to_string();
      }
      r.checks.push_back({"closed_form_" + to_string(w), m.agree, detail,
                          m.first_disagreement ? m.component + " at t^" + to_string(*m.first_disagreement) : ""});
      r.data["bindings"] = b;
    } catch (const VerificationFailure& e) {
      r.checks.push_back({"closed_form_" + to_string(w), false, e.what(), ""});
    }
  }
  emit_report(c, r, out);
  return r.pass() ? kOk : kVerification;
}

int cmd_converge(const Config& c, std::ostream& out) {
  SeriesSolution s = load_solution(c.solution);
  ConvergenceOptions o;
  o.horizon = c.horizon;
  o.epsilon = parse_rat_flag("epsilon", c.epsilon);
  if (sgn(o.epsilon) <= 0 || o.epsilon >= 1) throw PreconditionError("--epsilon must lie in (0, 1)");
  o.tm_degree = c.tm_degree;
  o.prec = c.tm_precision;
  ConvergenceCert cert = convergence_certificate(s, o);
  emit(c, dump(to_json(cert)), out);
  return cert.granted ? kOk : kVerification;
}

int cmd_match(const Config& c, std::ostream& out) {
  if (c.family.empty() || c.target.empty()) throw PreconditionError("--family and --target are required");
  SeriesSolution f = load_solution(c.family);
  SeriesSolution t = load_solution(c.target);
  MatchResult m = match_parameters(f, t);
  emit(c, dump(to_json(m)), out);
  return m.agree ? kOk : kVerification;
}

// ---------------------------------------------------------------- eval

std::vector<CBig> tau_grid(const Config& c, mpfr_prec_t prec) {
  std::vector<CBig> g;
  for (const auto& t : c.taus) {
    auto comma = t.find(',');
    QI z = comma == std::string::npos
               ? QI(parse_rat_flag("tau", t))
               : QI(parse_rat_flag("tau", t.substr(0, comma)), parse_rat_flag("tau", t.substr(comma + 1)));
    g.push_back(CBig::from_qi(z, prec));
  }
  if (c.points > 0) {
    Rat R = parse_rat_flag("radius", c.radius);
    Real pi(prec);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    CBig rad = CBig::from_rat(R, prec);
    for (int k = 0; k < c.points; ++k) {
      // Angles offset by half a step so the real axis is avoided.
      Real ang = pi * Real::from_rat(rat(2 * k + 1, c.points), prec);
      CBig a(ang, Real(0, prec));
      g.push_back(rad * CBig(cos(a).re(), sin(a).re()));
    }
  }
  if (g.empty()) throw PreconditionError("no evaluation points (use --tau or --radius/--points)");
  return g;
}

int cmd_eval(const Config& c, std::ostream& out) {
  SeriesSolution s = load_solution(c.solution);
  const mpfr_prec_t prec = c.precision;
  auto grid = tau_grid(c, prec);
  std::map<std::string, CBig> bind;
  if (!c.bindings_file.empty())
    for (const auto& [k, v] : match_from_json(parse_json(read_file(c.bindings_file))).bindings)
      bind.insert_or_assign(k, v.embed(prec));
  for (const auto& [k, v] : collect_bindings(c)) bind.insert_or_assign(k, v.embed(prec));
  for (const auto& name : s.parameters)
    if (!bind.count(name)) throw PreconditionError("parameter " + name + " is unbound (use --bind " + name + "=v)");
  CBig t0(prec);
  if (s.y.t0()) t0 = s.y.t0()->embed(prec);

  const int dg = digits_for(c.precision);
  const std::vector<std::string> cols = {"t_re", "t_im", "x_re", "x_im", "y_re", "y_im", "tail_estimate", "status"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& tau : grid) {
    CBig t = t0 + tau;
    std::vector<std::string> row = {t.re().to_string(dg), t.im().to_string(dg)};
    try {
      if (tau.is_zero()) throw ArithmeticError("tau = 0 is the singular point");
      SeriesValue x = ps_eval(s.x, tau, bind, prec);
      SeriesValue y = ps_eval(s.y, tau, bind, prec);
      Real tail = x.tail_estimate > y.tail_estimate ? x.tail_estimate : y.tail_estimate;
      for (const auto* v : {&x.value, &y.value}) {
        row.push_back(v->re().to_string(dg));
        row.push_back(v->im().to_string(dg));
      }
      row.push_back(tail.to_string(6));
      row.push_back("ok");
    } catch (const Error& e) {
      row.resize(2);
      for (int k = 0; k < 5; ++k) row.push_back("nan");
      row.push_back(std::string("error: ") + e.what());
    }
    rows.push_back(row);
  }
  if (c.format == "csv") {
    std::string o;
    for (size_t k = 0; k < cols.size(); ++k) o += (k ? "," : "") + cols[k];
    o += "\n";
    for (const auto& row : rows) {
      for (size_t k = 0; k < row.size(); ++k) o += (k ? "," : "") + csv_escape(row[k]);
      o += "\n";
    }
    emit(c, o, out);
  } else {
    Report r;
    r.kind = "eval_table";
    r.subject = s.family + "/" + s.branch;
    r.data = {{"columns", cols}, {"rows", rows}, {"precision", c.precision}};
    emit(c, dump(to_json(r)), out);
  }
  return kOk;
}

// ---------------------------------------------------------------- batch

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> w;
  for (std::string s; ss >> s;) w.push_back(s);
  return w;
}

int cmd_batch(const Config& c, std::ostream& out, std::ostream& err) {
  std::string text = c.batch_file == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                         : read_file(c.batch_file);
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    auto w = split_words(l);
    if (w.empty() || w[0][0] == '#') continue;
    if (w[0] == "batch") throw PreconditionError("nested batch commands are not allowed");
    lines.push_back(std::move(w));
  }
  const size_t n = lines.size();
  std::vector<std::string> outs(n), errs(n);
  std::vector<int> codes(n, kOk);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k; (k = next++) < n;) {
      std::ostringstream o, e;
      codes[k] = run(lines[k], o, e);
      outs[k] = o.str();
      errs[k] = e.str();
    }
  };
  const int jobs = std::max(1, std::min<int>(c.jobs, static_cast<int>(n)));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  int code = kOk;
  for (size_t k = 0; k < n; ++k) {
    out << outs[k];
    if (!errs[k].empty()) err << "[" << k + 1 << "] " << errs[k];
    if (code == kOk) code = codes[k];
  }
  return code;
}

}  // namespace

long default_precision() {
  const char* env = std::getenv("HH_PRECISION");
  if (!env || !*env) return 256;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 64) throw PreconditionError("HH_PRECISION must be an integer >= 64");
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  try {
    c.precision = default_precision();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kConfig;
  }

  CLI::App app{"Painleve analysis and series solutions of the generalized Henon-Heiles system", "hh"};
  app.footer(kExitCodes);
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--precision", c.precision, "Working precision in bits (default: $HH_PRECISION or 256)")
      ->check(CLI::Range(64L, 1L << 20));
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto params = [&](CLI::App* s) {
    s->add_option("--lambda", c.lambda, "lambda as an exact rational (p/q or decimal)")->required();
    s->add_option("--C", c.C, "C as an exact rational (p/q or decimal)")->required();
  };
  auto output = [&](CLI::App* s) { s->add_option("-o,--out", c.out, "Write the artifact here (atomically)"); };
  auto solution = [&](CLI::App* s) {
    s->add_option("--solution", c.solution, "Series solution JSON")->required()->check(CLI::ExistingFile);
  };

  auto* test = app.add_subcommand("test", "Dominant balances, resonances and classification");
  params(test);
  output(test);

  auto* reso = app.add_subcommand("resonance", "Solve the label-2 resonance system of the C = -16/5 family");
  reso->add_option("--lambda", c.lambda, "lambda as an exact rational")->required();
  output(reso);

  auto* series = app.add_subcommand("series", "Generate a series solution by coefficient recursion");
  params(series);
  series
      ->add_option("--branch", c.branch,
                   "real-plus | real-i | c2-plus | c2-i (C = -16/5), puiseux-plus | puiseux-minus (C = -9/8), "
                   "case1-plus | case1-minus | case2 (any C)")
      ->required();
  series->add_option("--order", c.order, "Highest y exponent kept");
  series->add_option("--a2", c.a2, "Bind the x resonance parameter a2");
  series->add_option("--b4", c.b4, "Bind the y resonance parameter b4");
  series->add_option("--D1", c.D1, "Bind the Puiseux parameter D1");
  series->add_option("--D2", c.D2, "Bind the Puiseux parameter D2");
  series->add_option("--bind", c.binds, "Bind any parameter: name=value (repeatable)");
  output(series);

  auto* closed = app.add_subcommand("closed-form", "Laurent expansion of a closed-form solution (C = -16/5, lambda = 1/9)");
  closed->add_option("--which", c.which, "minus (1 - 3 sin) or plus (1 + 3 sin)")
      ->check(CLI::IsMember({"minus", "plus"}));
  closed->add_option("--order", c.order, "Highest y exponent kept");
  output(closed);

  auto* verify = app.add_subcommand("verify", "Run the oracle checks on a series solution");
  solution(verify);
  verify->add_option("--against", c.against, "Also match against a closed form: minus | plus")
      ->check(CLI::IsMember({"minus", "plus"}));
  verify->add_option("--reduction", c.reduction, "Also check a first-order reduction: 4a | 4b | 4b'");
  output(verify);

  auto* conv = app.add_subcommand("converge", "Certify coefficient bounds and the ring of convergence");
  solution(conv);
  conv->add_option("--horizon", c.horizon, "Last index checked")->check(CLI::Range(1, 100000));
  conv->add_option("--epsilon", c.epsilon, "Ring 0 < |tau| <= 1 - epsilon (exact rational)");
  conv->add_option("--tm-degree", c.tm_degree, "Taylor-model degree in the free parameters")
      ->check(CLI::Range(0, 64));
  conv->add_option("--tm-precision", c.tm_precision, "Ball precision in bits")->check(CLI::Range(64L, 1L << 16));
  output(conv);

  auto* match = app.add_subcommand("match", "Solve a family's free parameters from a target series");
  match->add_option("--family", c.family, "Family series JSON")->required()->check(CLI::ExistingFile);
  match->add_option("--target", c.target, "Target series JSON")->required()->check(CLI::ExistingFile);
  output(match);

  auto* eval = app.add_subcommand("eval", "Evaluate a series on a grid of tau = t - t0 values");
  solution(eval);
  eval->add_option("--tau", c.taus, "Point re[,im] (exact rationals, repeatable)");
  eval->add_option("--radius", c.radius, "Circle radius for --points");
  eval->add_option("--points", c.points, "Number of points on the circle |tau| = radius")->check(CLI::Range(0, 100000));
  eval->add_option("--bind", c.binds, "Bind a parameter: name=value (repeatable)");
  eval->add_option("--bindings", c.bindings_file, "Take parameter values from a match result JSON")
      ->check(CLI::ExistingFile);
  output(eval);

  auto* batch = app.add_subcommand("batch", "Run one command per line of a file, optionally in parallel");
  batch->add_option("--file", c.batch_file, "Command file ('-' for stdin)")->required();
  batch->add_option("--jobs", c.jobs, "Parallel jobs")->check(CLI::Range(1, 1024));

  for (auto* s : app.get_subcommands({})) s->footer(kExitCodes);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*test) return cmd_test(c, out);
    if (*reso) return cmd_resonance(c, out);
    if (*series) return cmd_series(c, out, err);
    if (*closed) return cmd_closed_form(c, out);
    if (*verify) return cmd_verify(c, out);
    if (*conv) return cmd_converge(c, out);
    if (*match) return cmd_match(c, out);
    if (*eval) return cmd_eval(c, out);
    if (*batch) return cmd_batch(c, out, err);
    return kConfig;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const ObstructionError& e) {
    err << "obstruction: " << e.what() << "\n";
    return kObstruction;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerification;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace hh::cli
