#include "hh/errors.hpp"
#include "hh/verify.hpp"

namespace hh {

namespace {

const std::vector<std::string> kWork = {"x", "x1", "y", "y1", "y2", "H", "lam", "C"};
enum { X, X1, Y, Y1, Y2, HH, LAM, CC };

ParamPoly var(int k) { return ParamPoly::variable(kWork, kWork[static_cast<size_t>(k)]); }

ParamPoly power(const ParamPoly& p, int n) {
  ParamPoly r = ParamPoly::constant(p.names(), AlgScalar(1));
  for (int k = 0; k < n; ++k) r *= p;
  return r;
}

ParamPoly monomial(const ParamPoly::Exponents& e, const AlgScalar& c) {
  ParamPoly r = ParamPoly::constant(kWork, c);
  for (size_t k = 0; k < e.size(); ++k)
    if (e[k] > 0) r *= power(var(static_cast<int>(k)), e[k]);
  return r;
}

// Time derivative along the flow; y2 is a placeholder name and never appears
// before the final substitution.
ParamPoly flow(const ParamPoly& p) {
  const ParamPoly x = var(X), y = var(Y), lam = var(LAM), C = var(CC);
  const ParamPoly dx = var(X1);
  const ParamPoly dx1 = -(lam * x) - ParamPoly(AlgScalar(2)) * x * y;
  const ParamPoly dy = var(Y1);
  const ParamPoly dy1 = -y - x * x + C * y * y;
  return p.derivative("x") * dx + p.derivative("x1") * dx1 + p.derivative("y") * dy + p.derivative("y1") * dy1;
}

// Rewrites every even power of variable v as a power of `square`.
ParamPoly replace_square(const ParamPoly& p, int v, const ParamPoly& square) {
  ParamPoly out(kWork);
  for (const auto& [e, c] : p.terms()) {
    auto rest = e;
    int k = rest[static_cast<size_t>(v)];
    rest[static_cast<size_t>(v)] = k % 2;
    out += monomial(rest, c) * power(square, k / 2);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& FourthOrderEquation::names() {
  static const std::vector<std::string> n = {"y", "y1", "y2", "H", "lam", "C"};
  return n;
}

FourthOrderEquation derive_fourth_order() {
  const ParamPoly x = var(X), y = var(Y), y1 = var(Y1), lam = var(LAM), C = var(CC), H = var(HH);
  ParamPoly y4 = flow(flow(flow(y1)));
  // Energy: x1² = 2H - y1² - λx² - y² - 2x²y + (2C/3)y³.
  ParamPoly x1sq = ParamPoly(AlgScalar(2)) * H - y1 * y1 - lam * x * x - y * y - ParamPoly(AlgScalar(2)) * x * x * y +
                   ParamPoly(AlgScalar(Rat(2, 3))) * C * y * y * y;
  ParamPoly r = replace_square(y4, X1, x1sq);
  // y-equation: x² = Cy² - y - y2.
  r = replace_square(r, X, C * y * y - y - var(Y2));
  for (const auto& [e, c] : r.terms())
    if (e[X] != 0 || e[X1] != 0) throw VerificationFailure("elimination left x in the fourth-order equation");
  std::map<std::string, ParamPoly> sub;
  const auto& n = FourthOrderEquation::names();
  for (const auto& name : n) sub[name] = ParamPoly::variable(n, name);
  sub["x"] = ParamPoly(n);
  sub["x1"] = ParamPoly(n);
  return {r.substitute(sub, n)};
}

ParamPoly FourthOrderEquation::coefficient(int i, int j, int k, int h) const {
  const std::vector<std::string> lc = {"lam", "C"};
  ParamPoly out(lc);
  for (const auto& [e, c] : rhs.terms()) {
    if (e[0] != i || e[1] != j || e[2] != k || e[3] != h) continue;
    out += ParamPoly::constant(lc, c) * power(ParamPoly::variable(lc, "lam"), e[4]) *
           power(ParamPoly::variable(lc, "C"), e[5]);
  }
  return out;
}

std::string FourthOrderEquation::to_string() const { return "y'''' = " + rhs.to_string(); }

PSeries residual_fourth_order(const SeriesSolution& sol, const EnergyValue& H) {
  FourthOrderEquation eq = derive_fourth_order();
  const PSeries& y = sol.y;
  const PSeries y1 = ps_diff(y), y2 = ps_diff(y, 2);
  PSeries r = ps_diff(y, 4);
  for (const auto& [e, c] : eq.rhs.terms()) {
    AlgScalar s = c * AlgScalar(sol.params.lambda).pow(e[4]) * AlgScalar(sol.params.C).pow(e[5]);
    ParamPoly k(s);
    for (int j = 0; j < e[3]; ++j) k *= H.H;
    std::optional<PSeries> t;
    auto mul = [&](const PSeries& f, int n) {
      for (int j = 0; j < n; ++j) t = t ? *t * f : f;
    };
    mul(y, e[0]);
    mul(y1, e[1]);
    mul(y2, e[2]);
    if (t) r = r - *t * k;
    else r = r - PSeries::monomial(k, Rat(0), r.order(), r.q());
  }
  return r;
}

}  // namespace hh
