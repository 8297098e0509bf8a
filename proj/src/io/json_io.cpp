#include "hh/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "hh/errors.hpp"

namespace hh {

namespace {

void expect_kind(const Json& j, const char* kind) {
  if (!j.is_object()) throw PreconditionError(std::string("expected a JSON object for ") + kind);
  if (j.value("kind", std::string()) != kind)
    throw PreconditionError(std::string("expected an artifact of kind ") + kind + ", got " +
                            j.value("kind", std::string("<none>")));
  int v = j.value("schema_version", -1);
  if (v != kSchemaVersion) throw PreconditionError("unsupported schema_version " + std::to_string(v));
}

Json header(const char* kind) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

Json params_json(const SystemParams& p) { return {{"lambda", to_json(p.lambda)}, {"C", to_json(p.C)}}; }
SystemParams params_from(const Json& j) { return {rat_from_json(j.at("lambda")), rat_from_json(j.at("C"))}; }

}  // namespace

// ---------------------------------------------------------------- scalars

Json to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw PreconditionError("rational numbers are encoded as \"p/q\" strings");
  return parse_rat(j.get<std::string>());
}

Json to_json(const QI& z) { return to_string(z); }

QI qi_from_json(const Json& j) {
  if (!j.is_string()) throw PreconditionError("Gaussian rationals are encoded as strings");
  return parse_qi(j.get<std::string>());
}

Json real_to_json(const Real& r) { return to_string(r.to_rat()); }

Real real_from_json(const Json& j) {
  Rat q = rat_from_json(j);
  return Real::from_rat(q, 64, MPFR_RNDU);
}

Json field_to_json(const FieldPtr& f) {
  if (f->is_base()) return f->has_i() ? "Q(i)" : "Q";
  Json mp = Json::array();
  for (const auto& c : f->minpoly()) mp.push_back(to_json(c));
  return {{"base", f->has_i() ? "Q(i)" : "Q"},
          {"minpoly", mp},
          {"center", to_json(f->center())},
          {"radius", to_json(f->radius())},
          {"description", f->describe()}};
}

FieldPtr field_from_json(const Json& j) {
  if (j.is_string()) {
    if (j == "Q") return NumberField::rationals();
    if (j == "Q(i)") return NumberField::gaussian();
    throw PreconditionError("unknown base field " + j.get<std::string>());
  }
  const std::string base = j.at("base").get<std::string>();
  FieldPtr b = base == "Q(i)" ? NumberField::gaussian() : NumberField::rationals();
  QIPoly mp;
  for (const auto& c : j.at("minpoly")) mp.push_back(qi_from_json(c));
  return field_adjoin(b, mp, qi_from_json(j.at("center")), rat_from_json(j.at("radius")));
}

FieldTable::FieldTable(const Json& j) {
  for (const auto& f : j) fields_.push_back(field_from_json(f));
}

int FieldTable::index_of(const FieldPtr& f) {
  for (size_t k = 0; k < fields_.size(); ++k)
    if (fields_[k] == f) return static_cast<int>(k);
  fields_.push_back(f);
  return static_cast<int>(fields_.size() - 1);
}

const FieldPtr& FieldTable::at(int k) const {
  if (k < 0 || k >= static_cast<int>(fields_.size())) throw PreconditionError("field index out of range");
  return fields_[static_cast<size_t>(k)];
}

Json FieldTable::to_json() const {
  Json a = Json::array();
  for (const auto& f : fields_) a.push_back(field_to_json(f));
  return a;
}

Json to_json(const AlgScalar& s, FieldTable& t) {
  Json c = Json::array();
  for (const auto& v : s.coords()) c.push_back(to_json(v));
  return {{"field", t.index_of(s.field())}, {"coords", c}};
}

AlgScalar scalar_from_json(const Json& j, const FieldTable& t) {
  std::vector<QI> c;
  for (const auto& v : j.at("coords")) c.push_back(qi_from_json(v));
  return AlgScalar(t.at(j.at("field").get<int>()), c);
}

Json to_json(const ParamPoly& p, FieldTable& t) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", to_json(c, t)}});
  return {{"names", p.names()}, {"terms", terms}};
}

ParamPoly param_poly_from_json(const Json& j, const FieldTable& t) {
  auto names = j.at("names").get<std::vector<std::string>>();
  ParamPoly p(names);
  for (const auto& term : j.at("terms")) {
    auto e = term.at("exponents").get<std::vector<int>>();
    if (e.size() != names.size()) throw PreconditionError("exponent vector does not match the parameter names");
    ParamPoly m = ParamPoly::constant(names, scalar_from_json(term.at("coeff"), t));
    for (size_t k = 0; k < e.size(); ++k)
      for (int r = 0; r < e[k]; ++r) m *= ParamPoly::variable(names, names[k]);
    p += m;
  }
  return p;
}

Json to_json(const PSeries& s, FieldTable& t) {
  Json c = Json::array();
  for (const auto& v : s.coeffs()) c.push_back(to_json(v, t));
  Json j = {{"base", to_json(s.base())}, {"q", s.q()}, {"order", to_json(s.order())}, {"coeffs", c}};
  j["t0"] = s.t0() ? to_json(*s.t0(), t) : Json(nullptr);
  return j;
}

PSeries series_from_json(const Json& j, const FieldTable& t) {
  std::vector<ParamPoly> c;
  for (const auto& v : j.at("coeffs")) c.push_back(param_poly_from_json(v, t));
  PSeries s(rat_from_json(j.at("base")), j.at("q").get<int>(), c, rat_from_json(j.at("order")));
  if (j.contains("t0") && !j.at("t0").is_null()) s.set_t0(scalar_from_json(j.at("t0"), t));
  return s;
}

// ---------------------------------------------------------------- artifacts

Json to_json(const SeriesSolution& s) {
  FieldTable t;
  Json j = header("series_solution");
  j["params"] = params_json(s.params);
  j["family"] = s.family;
  j["branch"] = s.branch;
  j["q"] = s.q;
  j["shift"] = to_json(s.shift);
  j["parameters"] = s.parameters;
  Json reg = Json::array();
  for (const auto& fp : s.registry) {
    Json r = {{"name", fp.name},
              {"label", fp.label},
              {"component", std::string(1, fp.component)},
              {"resonance", to_json(fp.resonance)}};
    r["bound"] = fp.bound ? to_json(*fp.bound, t) : Json(nullptr);
    reg.push_back(r);
  }
  j["registry"] = reg;
  j["notes"] = s.notes;
  j["x"] = to_json(s.x, t);
  j["y"] = to_json(s.y, t);
  j["fields"] = t.to_json();
  return j;
}

SeriesSolution solution_from_json(const Json& j) {
  expect_kind(j, "series_solution");
  FieldTable t(j.at("fields"));
  SeriesSolution s;
  s.params = params_from(j.at("params"));
  s.family = j.at("family").get<std::string>();
  s.branch = j.at("branch").get<std::string>();
  s.q = j.at("q").get<int>();
  s.shift = rat_from_json(j.at("shift"));
  s.parameters = j.at("parameters").get<std::vector<std::string>>();
  for (const auto& r : j.at("registry")) {
    FreeParam fp;
    fp.name = r.at("name").get<std::string>();
    fp.label = r.at("label").get<int>();
    fp.component = r.at("component").get<std::string>().at(0);
    fp.resonance = rat_from_json(r.at("resonance"));
    if (!r.at("bound").is_null()) fp.bound = scalar_from_json(r.at("bound"), t);
    s.registry.push_back(fp);
  }
  s.notes = j.at("notes").get<std::vector<std::string>>();
  s.x = series_from_json(j.at("x"), t);
  s.y = series_from_json(j.at("y"), t);
  return s;
}

Json to_json(const ConvergenceCert& c) {
  Json j = header("convergence_certificate");
  j["family"] = c.family;
  j["lambda"] = to_json(c.lambda);
  j["c1_bound"] = to_json(c.c1_bound);
  j["N"] = c.N;
  j["horizon"] = c.horizon;
  j["first_index"] = c.first_index;
  Json b = Json::array();
  for (const auto& ib : c.bounds)
    b.push_back({{"index", ib.index}, {"a", real_to_json(ib.a_bound)}, {"b", real_to_json(ib.b_bound)},
                 {"a_approx", ib.a_bound.to_string(6)}, {"b_approx", ib.b_bound.to_string(6)}});
  j["bounds"] = b;
  Json ex = Json::array();
  for (const auto& e : c.exceptions)
    ex.push_back({{"index", e.index},
                  {"component", std::string(1, e.component)},
                  {"bound", real_to_json(e.bound)},
                  {"bound_approx", e.bound.to_string(6)},
                  {"coefficient", e.coefficient}});
  j["exceptions"] = ex;
  j["tail_ok"] = c.tail_ok;
  j["granted"] = c.granted;
  j["epsilon"] = to_json(c.epsilon);
  j["comparison_constant"] = to_json(c.comparison_constant);
  j["ring"] = {{"inner", "0"}, {"outer", to_json(Rat(1 - c.epsilon))}};
  j["message"] = c.message;
  return j;
}

ConvergenceCert cert_from_json(const Json& j) {
  expect_kind(j, "convergence_certificate");
  ConvergenceCert c;
  c.family = j.at("family").get<std::string>();
  c.lambda = rat_from_json(j.at("lambda"));
  c.c1_bound = rat_from_json(j.at("c1_bound"));
  c.N = j.at("N").get<int>();
  c.horizon = j.at("horizon").get<int>();
  c.first_index = j.at("first_index").get<int>();
  for (const auto& b : j.at("bounds"))
    c.bounds.push_back({b.at("index").get<int>(), real_from_json(b.at("a")), real_from_json(b.at("b"))});
  for (const auto& e : j.at("exceptions"))
    c.exceptions.push_back({e.at("index").get<int>(), e.at("component").get<std::string>().at(0),
                            real_from_json(e.at("bound")), e.at("coefficient").get<std::string>()});
  c.tail_ok = j.at("tail_ok").get<bool>();
  c.granted = j.at("granted").get<bool>();
  c.epsilon = rat_from_json(j.at("epsilon"));
  c.comparison_constant = rat_from_json(j.at("comparison_constant"));
  c.message = j.at("message").get<std::string>();
  return c;
}

Json to_json(const MatchResult& m) {
  FieldTable t;
  Json j = header("match_result");
  Json b = Json::object();
  for (const auto& [k, v] : m.bindings) b[k] = to_json(v, t);
  j["bindings"] = b;
  Json approx = Json::object();
  for (const auto& [k, v] : m.bindings) approx[k] = v.embed(64).to_string(12);
  j["bindings_approx"] = approx;
  j["agree"] = m.agree;
  j["checked_below"] = to_json(m.checked_below);
  j["first_disagreement"] = m.first_disagreement ? to_json(*m.first_disagreement) : Json(nullptr);
  j["component"] = m.component;
  j["fields"] = t.to_json();
  return j;
}

MatchResult match_from_json(const Json& j) {
  expect_kind(j, "match_result");
  FieldTable t(j.at("fields"));
  MatchResult m;
  for (const auto& [k, v] : j.at("bindings").items()) m.bindings[k] = scalar_from_json(v, t);
  m.agree = j.at("agree").get<bool>();
  m.checked_below = rat_from_json(j.at("checked_below"));
  if (!j.at("first_disagreement").is_null()) m.first_disagreement = rat_from_json(j.at("first_disagreement"));
  m.component = j.at("component").get<std::string>();
  return m;
}

Json to_json(const std::vector<ResonancePair>& pairs, const Rat& lambda) {
  FieldTable t;
  Json j = header("resonance_solutions");
  j["lambda"] = to_json(lambda);
  Json a = Json::array();
  for (const auto& p : pairs)
    a.push_back({{"c_tilde", to_json(p.c_tilde, t)},
                 {"b2", to_json(p.b2, t)},
                 {"eq1_zero", p.eq1_zero},
                 {"eq2_zero", p.eq2_zero},
                 {"c_tilde_text", p.c_tilde.to_string()},
                 {"b2_text", p.b2.to_string()}});
  j["solutions"] = a;
  j["fields"] = t.to_json();
  return j;
}

std::vector<ResonancePair> resonance_pairs_from_json(const Json& j) {
  expect_kind(j, "resonance_solutions");
  FieldTable t(j.at("fields"));
  std::vector<ResonancePair> out;
  for (const auto& p : j.at("solutions"))
    out.push_back({scalar_from_json(p.at("c_tilde"), t), scalar_from_json(p.at("b2"), t), p.at("eq1_zero").get<bool>(),
                   p.at("eq2_zero").get<bool>()});
  return out;
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json to_json(const Report& r) {
  Json j = header("report");
  j["report"] = r.kind;
  j["subject"] = r.subject;
  Json cs = Json::array();
  for (const auto& c : r.checks)
    cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"location", c.location}});
  j["checks"] = cs;
  j["pass"] = r.pass();
  j["data"] = r.data;
  return j;
}

Report report_from_json(const Json& j) {
  expect_kind(j, "report");
  Report r;
  r.kind = j.at("report").get<std::string>();
  r.subject = j.at("subject").get<std::string>();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("detail").get<std::string>(),
                        c.at("location").get<std::string>()});
  r.data = j.at("data");
  return r;
}

// ---------------------------------------------------------------- files

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw PreconditionError(std::string("invalid JSON: ") + e.what());
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw PreconditionError("cannot write " + tmp);
    out << content;
    out.flush();
    if (!out) throw PreconditionError("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw PreconditionError("cannot move " + tmp + " to " + path);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace hh
