#include <algorithm>

#include "hh/alg_root.hpp"
#include "hh/errors.hpp"
#include "hh/recursion.hpp"

namespace hh {

namespace {

const Balance& find_balance(const std::vector<Balance>& bs, CaseLabel which) {
  for (const auto& b : bs)
    if (b.label == which) return b;
  throw PreconditionError(to_string(which) + " balance does not exist for these parameters");
}

// Coefficients (by power of c1) of a polynomial in the single name c1.
std::map<int, Rat> c1_coefficients(const ParamPoly& p) {
  std::map<int, Rat> out;
  for (const auto& [e, c] : p.terms()) {
    int k = e.empty() ? 0 : e[0];
    auto r = c.as_rat();
    if (!r) throw PreconditionError("resonance system coefficient is not rational");
    out[k] += *r;
  }
  return out;
}

void check_binding_names(const std::map<std::string, AlgScalar>& b, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : b) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw ParameterError("unknown parameter binding " + k);
  }
}

}  // namespace

std::array<AlgScalar, 2> resonance_equations(const Rat& lambda, const AlgScalar& ct, const AlgScalar& b2) {
  const Rat l = lambda;
  AlgScalar ct2 = ct * ct;
  AlgScalar eq1 = ct2 * AlgScalar(557056) + ct * AlgScalar(15552000 * l - 4860000) + b2 * AlgScalar(864000000) +
                  AlgScalar(108000000 * l * l - 67500000 * l + 10546875);
  AlgScalar eq2 = ct2 * AlgScalar(818176) + ct * AlgScalar(15660000 * l - 4893750) - b2 * AlgScalar(810000000) -
                  AlgScalar(6328125);
  return {eq1, eq2};
}

std::vector<ResonancePair> resonance_solve(const Rat& lambda) {
  SystemParams p{lambda, Rat(-16, 5)};
  auto bs = dominant_balances(p);
  FamilySpec f = family_for(p, find_balance(bs, CaseLabel::Case2), "case2");
  RecursionRun run = run_recursion(f, 1);
  if (run.obstruction) throw ObstructionError(run.obstruction->message);
  Mat2 m = recursion_matrix(f, 2);
  auto rhs = rhs_convolution(f, run.a, run.b, 2);
  if (!det(m).is_zero() || !m[1][0].is_zero() || !m[0][0].is_zero())
    throw PreconditionError("unexpected structure of the label-2 resonance system");
  auto m11 = m[1][1].as_constant();
  if (!m11) throw PreconditionError("unexpected structure of the label-2 resonance system");
  ParamPoly b2 = rhs[1] * m11->inverse();
  ParamPoly cond = m[0][1] * b2 - rhs[0];

  // cond = c1 · Q(c1^4); b2 = B(c1^4).
  auto cc = c1_coefficients(cond);
  std::map<int, Rat> quad;
  for (const auto& [k, v] : cc) {
    if (sgn(v) == 0) continue;
    if (k == 0 || (k - 1) % 4 != 0) throw PreconditionError("compatibility condition is not c1 times a polynomial in c1^4");
    quad[(k - 1) / 4] += v;
  }
  auto bc = c1_coefficients(b2);
  for (const auto& [k, v] : bc)
    if (sgn(v) != 0 && k % 4 != 0) throw PreconditionError("b2 is not a polynomial in c1^4");
  for (const auto& [k, v] : quad)
    if (k > 2) throw PreconditionError("compatibility condition has degree above 2 in c1^4");
  const Rat A = quad.count(2) ? quad[2] : Rat(0);
  const Rat B = quad.count(1) ? quad[1] : Rat(0);
  const Rat C0 = quad.count(0) ? quad[0] : Rat(0);

  std::vector<AlgScalar> roots;
  if (sgn(A) == 0) {
    if (sgn(B) == 0) throw ObstructionError("resonance system has no nonzero solution");
    roots.push_back(AlgScalar(-C0 / B));
  } else {
    Rat disc = B * B - 4 * A * C0;
    RootResult sq = alg_root(AlgScalar(disc), 2);
    roots.push_back((AlgScalar(-B) + sq.root) / AlgScalar(2 * A));
    roots.push_back((AlgScalar(-B) - sq.root) / AlgScalar(2 * A));
  }
  std::vector<ResonancePair> out;
  for (const auto& ct : roots) {
    if (ct.is_zero()) continue;
    AlgScalar b2v;
    for (const auto& [k, v] : bc) b2v += AlgScalar(v) * ct.pow(k / 4);
    ResonancePair rp{ct, b2v};
    auto eqs = resonance_equations(lambda, ct, b2v);
    rp.eq1_zero = eqs[0].is_zero();
    rp.eq2_zero = eqs[1].is_zero();
    if (!rp.eq1_zero || !rp.eq2_zero) throw VerificationFailure("resonance pair fails the printed system");
    out.push_back(rp);
  }
  if (out.empty()) throw ObstructionError("resonance system has no nonzero solution");
  std::sort(out.begin(), out.end(), [](const ResonancePair& x, const ResonancePair& y) {
    return y.c_tilde.embed(64).re() < x.c_tilde.embed(64).re();
  });
  return out;
}

SeriesSolution generate_case2_series(const Rat& lambda, const std::string& branch,
                                     const std::map<std::string, AlgScalar>& bindings, int order) {
  check_binding_names(bindings, {"a2", "b4"});
  if (order < -2) throw PreconditionError("order below the leading exponent");
  size_t idx;
  bool times_i;
  if (branch == "real-plus") idx = 0, times_i = false;
  else if (branch == "real-i") idx = 0, times_i = true;
  else if (branch == "c2-plus") idx = 1, times_i = false;
  else if (branch == "c2-i") idx = 1, times_i = true;
  else throw PreconditionError("unknown branch " + branch + " (expected real-plus, real-i, c2-plus, c2-i)");
  auto pairs = resonance_solve(lambda);
  if (idx >= pairs.size()) throw PreconditionError("resonance system has a single root; branch " + branch + " absent");
  const ResonancePair& rp = pairs[idx];
  RootResult r = alg_root(rp.c_tilde, 4);
  FieldPtr field = with_i(r.field);
  AlgScalar c1 = r.root.lifted(field);
  if (times_i) c1 = c1 * AlgScalar::imag_unit();

  SystemParams p{lambda, Rat(-16, 5)};
  auto bs = dominant_balances(p);
  FamilySpec f = family_for(p, find_balance(bs, CaseLabel::Case2), "case2", c1);
  f.bindings = bindings;
  RecursionRun run = run_recursion(f, order);
  if (run.obstruction) throw ObstructionError(run.obstruction->message);
  SeriesSolution s = to_solution(f, run, "case2", branch);
  s.notes.push_back("c1^4 = " + rp.c_tilde.to_string() + ", b2 = " + rp.b2.to_string());
  s.notes.push_back("c1 = " + c1.to_string() + " in " + field->describe());
  return s;
}

SeriesSolution generate_puiseux_series(const Rat& lambda, int sign, const std::map<std::string, AlgScalar>& bindings,
                                       int order) {
  check_binding_names(bindings, {"D1", "D2"});
  if (sign != 1 && sign != -1) throw PreconditionError("sign must be +1 or -1");
  if (order < -2) throw PreconditionError("order below the leading exponent");
  SystemParams p{lambda, Rat(-9, 8)};
  auto bs = dominant_balances(p);
  FamilySpec f = family_for(p, find_balance(bs, CaseLabel::Case1), sign > 0 ? "case1-plus" : "case1-minus");
  if (f.q != 2) throw PreconditionError("expected a half-integer grid for C = -9/8");
  f.rename = {{"b-1", "D0"}, {"b3", "D1"}, {"b8", "D2"}};
  f.bindings = bindings;
  const int l_max = 2 * order;

  // Probe with the r = 3/2 datum symbolic, far enough to reach r = 7/2.
  RecursionRun probe = run_recursion(f, std::max(l_max, 4));
  std::string forced;
  if (probe.obstruction) {
    const ParamPoly& cond = probe.obstruction->condition;
    bool linear_in_d0 = cond.total_degree() == 1 && cond.degree_in("D0") == 1 && cond.constant_term().is_zero();
    for (const auto& [e, c] : cond.terms())
      for (size_t k = 0; k < e.size(); ++k)
        if (e[k] != 0 && cond.names()[k] != "D0") linear_in_d0 = false;
    if (!linear_in_d0) throw ObstructionError(probe.obstruction->message);
    forced = "r=3/2 datum D0 (y coefficient of t^(-1/2)) forced to 0 by the compatibility condition " +
             cond.to_string() + " = 0 at label " + std::to_string(probe.obstruction->label) + " (r = " +
             to_string(probe.obstruction->resonance) + ")";
    f.bindings["D0"] = AlgScalar(0);
  }
  RecursionRun run = run_recursion(f, l_max);
  if (run.obstruction) throw ObstructionError(run.obstruction->message);
  SeriesSolution s = to_solution(f, run, "puiseux", sign > 0 ? "plus" : "minus");
  if (!forced.empty()) s.notes.push_back(forced);
  return s;
}

GenericResult generate_generic(const SystemParams& p, CaseLabel which, const std::string& branch, int order) {
  auto bs = dominant_balances(p);
  const Balance& b = find_balance(bs, which);
  FamilySpec f = family_for(p, b, branch);
  GenericResult out;
  RecursionRun run = run_recursion(f, order * f.q);
  if (run.obstruction) {
    out.obstruction = run.obstruction;
    out.message = run.obstruction->message;
    return out;
  }
  out.solution = to_solution(f, run, which == CaseLabel::Case1 ? "case1" : "case2-generic", branch);
  out.message = "compatible through label " + std::to_string(run.last_label);
  return out;
}

}  // namespace hh
