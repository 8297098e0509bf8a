#include "hh/alg_root.hpp"
#include "hh/errors.hpp"
#include "hh/recursion.hpp"

namespace hh {

FamilySpec family_for(const SystemParams& p, const Balance& b, const std::string& branch, std::optional<AlgScalar> c1) {
  check_params(p);
  if (b.logarithmic) throw PreconditionError("logarithmic balance admits no power series");
  ResonanceReport rr = resonances(b, p);
  if (!b.alpha.is_rational()) throw PreconditionError("irrational exponent alpha = " + b.alpha.to_string());
  for (size_t k = 0; k < rr.values.size(); ++k)
    if (!rr.rational[k]) throw PreconditionError("irrational resonance " + rr.values[k].to_string());
  auto q = grid_denominator(b, rr);
  if (!q) throw PreconditionError("resonances do not fit a half-integer grid");

  FamilySpec f;
  f.params = p;
  f.q = *q;
  f.shift = *b.alpha.value() + 2;
  f.b_lead = ParamPoly(AlgScalar(b.b));
  if (b.label == CaseLabel::Case1) {
    if (branch != "case1-plus" && branch != "case1-minus")
      throw PreconditionError("unknown Case 1 branch " + branch);
    RootResult r = alg_root(AlgScalar(Rat(9) * (2 + p.C)), 2);
    AlgScalar a = branch == "case1-minus" ? -r.root : r.root;
    f.a_lead = ParamPoly(a);
  } else {
    if (branch != "case2") throw PreconditionError("unknown Case 2 branch " + branch);
    if (c1) {
      f.a_lead = ParamPoly(*c1);
    } else {
      f.base_names = {"c1"};
      f.a_lead = ParamPoly::variable(f.base_names, "c1");
    }
  }
  return f;
}

SeriesSolution to_solution(const FamilySpec& f, const RecursionRun& run, const std::string& family,
                           const std::string& branch) {
  SeriesSolution s;
  s.params = f.params;
  s.family = family;
  s.branch = branch;
  s.q = f.q;
  s.shift = f.shift;
  const int L0 = f.L0();
  const int n = run.last_label - L0 + 1;
  std::vector<ParamPoly> a(run.a.begin(), run.a.begin() + n), b(run.b.begin(), run.b.begin() + n);
  s.x = PSeries(f.x_exponent(L0), f.q, std::move(a), f.x_exponent(run.last_label + 1));
  s.y = PSeries(f.y_exponent(L0), f.q, std::move(b), f.y_exponent(run.last_label + 1));
  s.parameters = run.names;
  s.registry = run.free;
  s.notes.push_back("label L: y coefficient of t^(L/" + std::to_string(f.q) + "), x coefficient of t^(L/" +
                    std::to_string(f.q) + " + " + to_string(f.shift) + ")");
  return s;
}

}  // namespace hh
