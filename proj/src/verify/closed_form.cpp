#include "hh/alg_root.hpp"
#include "hh/errors.hpp"
#include "hh/verify.hpp"

namespace hh {

std::string to_string(ClosedForm w) { return w == ClosedForm::Minus ? "minus" : "plus"; }

ClosedForm parse_closed_form(const std::string& s) {
  if (s == "minus") return ClosedForm::Minus;
  if (s == "plus") return ClosedForm::Plus;
  throw PreconditionError("unknown closed form " + s + " (expected minus or plus)");
}

namespace {

const Rat kLambda(1, 9);
const Rat kC(-16, 5);

// sin(τ/3) (odd = true) or cos(τ/3) below τ^n, rational coefficients.
std::vector<Rat> trig_third(bool odd, int n) {
  std::vector<Rat> c(static_cast<size_t>(n));
  Rat term = 1;  // (1/3)^k / k!
  for (int k = 0; k < n; ++k) {
    if (k > 0) term /= Rat(3 * k);
    if ((k % 2 == 1) == odd) c[static_cast<size_t>(k)] = ((k / 2) % 2 == 0) ? term : Rat(-term);
  }
  return c;
}

CBig default_branch(ClosedForm which) {
  // 5·2^(1/4)/4, times i for the second form.
  CBig r = principal_root(CBig::from_rat(Rat(625, 128), 256), 4);
  return which == ClosedForm::Minus ? r : r * CBig::from_qi(QI(0, 1), 256);
}

}  // namespace

SeriesSolution closed_form_series(ClosedForm which, int N, std::optional<CBig> branch) {
  if (N < -2) throw PreconditionError("order below the leading exponent");
  const int sgn_s = which == ClosedForm::Minus ? -1 : 1;  // u = 1 + sgn_s·3s
  FieldPtr base = alg_root(AlgScalar(2), 2).field;
  if (which == ClosedForm::Plus) base = with_i(base);
  const AlgScalar sqrt2 = AlgScalar::generator(base);
  const AlgScalar sin_phi = AlgScalar(rat(-sgn_s, 3)).lifted(base);  // pole at 1 + sgn_s·3 sin φ = 0
  const AlgScalar cos_phi = sqrt2 * AlgScalar(Rat(-2, 3));

  const int n = N + 4;
  auto sn = trig_third(true, n), cs = trig_third(false, n);
  std::vector<ParamPoly> s(static_cast<size_t>(n));
  for (size_t k = 0; k < s.size(); ++k) s[k] = ParamPoly(sin_phi * AlgScalar(cs[k]) + cos_phi * AlgScalar(sn[k]));
  PSeries S(Rat(0), 1, s, Rat(n));
  PSeries one = PSeries::monomial(ParamPoly(AlgScalar(1)), Rat(0), Rat(n));
  PSeries u = one + S * ParamPoly(AlgScalar(3 * sgn_s));
  PSeries inv = ps_inv(u);
  PSeries inv2 = inv * inv;
  PSeries y = inv2 * ParamPoly(AlgScalar(Rat(-5, 3)));
  PSeries x2 = (one + S * ParamPoly(AlgScalar(sgn_s))) * inv2 * inv * ParamPoly(AlgScalar(Rat(25, 9)));

  // Move everything into the field of the square root of x²'s leading term.
  CBig br = branch ? *branch : default_branch(which);
  RootResult rr = alg_root(x2.leading().constant_term().lifted(base), 2, br);
  auto move = [&](const PSeries& p) {
    return p.map_coeffs([&](const ParamPoly& c) {
      return c.map_coeffs([&](const AlgScalar& v) { return map_to_field(v.lifted(base), rr); });
    });
  };
  x2 = move(x2);
  y = move(y);
  PSeries x = ps_sqrt(x2, rr.root.embed(256));

  SeriesSolution sol;
  sol.params = {kLambda, kC};
  sol.family = "closed-form";
  sol.branch = to_string(which);
  sol.x = x.truncated(rat(2 * N + 3, 2));
  sol.y = y.truncated(Rat(N + 1));
  sol.q = 1;
  sol.shift = Rat(1, 2);
  sol.notes.push_back(std::string("y = -5/(3(1 ") + (sgn_s < 0 ? "-" : "+") + " 3s)^2), s = sin((t - t0)/3), around s = " +
                      (sgn_s < 0 ? "1/3" : "-1/3") + ", cos = -2*sqrt(2)/3");
  return sol;
}

ClosedFormValue closed_form_value(ClosedForm which, const CBig& tau, mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 32;
  const int sgn_s = which == ClosedForm::Minus ? -1 : 1;
  CBig t3 = tau.with_prec(wp) * CBig::from_rat(Rat(1, 3), wp);
  Real r2 = sqrt(Real::from_rat(2, wp));
  CBig cos_phi(r2 * Real::from_rat(Rat(-2, 3), wp), Real(0, wp));
  CBig sin_phi = CBig::from_rat(rat(-sgn_s, 3), wp);
  CBig s = sin_phi * cos(t3) + cos_phi * sin(t3);
  CBig one = CBig::from_rat(1, wp);
  CBig u = one + s * CBig::from_rat(3 * sgn_s, wp);
  CBig u2 = u * u;
  CBig y = CBig::from_rat(Rat(-5, 3), wp) / u2;
  CBig x2 = CBig::from_rat(Rat(25, 9), wp) * (one + s * CBig::from_rat(sgn_s, wp)) / (u2 * u);
  return {y.with_prec(prec), x2.with_prec(prec)};
}

std::pair<CBig, CBig> closed_form_residual(ClosedForm which, const CBig& tau, const CBig& x_hint, mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 64;
  auto nearest = [](const CBig& r, const CBig& hint) { return abs(r - hint) <= abs(r + hint) ? r : -r; };
  ClosedFormValue c0 = closed_form_value(which, tau.with_prec(wp), wp);
  const CBig x0 = nearest(sqrt(c0.x2), x_hint.with_prec(wp));
  CBig h(Real::pow2(-static_cast<long>(wp) / 6, wp), Real(0, wp));
  CBig xs[5], ys[5];
  for (int k = -2; k <= 2; ++k) {
    ClosedFormValue c = closed_form_value(which, tau.with_prec(wp) + h * CBig::from_rat(k, wp), wp);
    ys[k + 2] = c.y;
    xs[k + 2] = nearest(sqrt(c.x2), x0);
  }
  auto d2 = [&](const CBig* f) {
    CBig num = (f[1] + f[3]) * CBig::from_rat(16, wp) - (f[0] + f[4]) - f[2] * CBig::from_rat(30, wp);
    return num / (h * h * CBig::from_rat(12, wp));
  };
  const CBig& x = xs[2];
  const CBig& y = ys[2];
  CBig e1 = d2(xs) + x * CBig::from_rat(kLambda, wp) + x * y * CBig::from_rat(2, wp);
  CBig e2 = d2(ys) + y + x * x - y * y * CBig::from_rat(kC, wp);
  return {e1.with_prec(prec), e2.with_prec(prec)};
}

}  // namespace hh
