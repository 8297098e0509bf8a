#include "hh/errors.hpp"
#include "hh/verify.hpp"

namespace hh {

std::pair<PSeries, PSeries> residual_system(const SeriesSolution& sol) {
  const PSeries& x = sol.x;
  const PSeries& y = sol.y;
  const ParamPoly lam(sol.params.lambda), two(2), C(sol.params.C);
  PSeries e1 = ps_diff(x, 2) + x * lam + (x * y) * two;
  PSeries e2 = ps_diff(y, 2) + y + x * x - (y * y) * C;
  return {e1, e2};
}

std::optional<Rat> first_nonzero(const PSeries& s) {
  if (s.is_zero()) return std::nullopt;
  return s.base();
}

std::string ResidualCheck::message() const {
  if (ok) return "residuals vanish below t^" + to_string(order_x) + " (x) and t^" + to_string(order_y) + " (y)";
  return "nonzero " + component + "-equation residual at t^" + to_string(*exponent);
}

ResidualCheck check_system(const SeriesSolution& sol) {
  auto [e1, e2] = residual_system(sol);
  ResidualCheck r;
  r.order_x = e1.order();
  r.order_y = e2.order();
  auto f1 = first_nonzero(e1), f2 = first_nonzero(e2);
  if (f1 && (!f2 || *f1 <= *f2)) {
    r.ok = false;
    r.component = "x";
    r.exponent = f1;
  } else if (f2) {
    r.ok = false;
    r.component = "y";
    r.exponent = f2;
  }
  return r;
}

void verify_system(const SeriesSolution& sol) {
  ResidualCheck r = check_system(sol);
  if (!r.ok) throw VerificationFailure(r.message());
}

SeriesSolution negate_x(const SeriesSolution& sol) {
  SeriesSolution s = sol;
  s.x = -sol.x;
  return s;
}

PSeries hamiltonian_series(const SeriesSolution& sol) {
  const PSeries& x = sol.x;
  const PSeries& y = sol.y;
  PSeries dx = ps_diff(x), dy = ps_diff(y);
  PSeries x2 = x * x;
  PSeries kin = dx * dx + dy * dy + x2 * ParamPoly(sol.params.lambda) + y * y;
  return kin * ParamPoly(Rat(1, 2)) + x2 * y - (y * y * y) * ParamPoly(sol.params.C / 3);
}

EnergyValue energy_series(const SeriesSolution& sol) {
  PSeries h = hamiltonian_series(sol);
  if (h.order() <= 0) throw PreconditionError("truncation too low to reach the constant term of the energy");
  for (const Rat& e : h.support())
    if (e != 0) throw VerificationFailure("energy series has a nonzero coefficient at t^" + to_string(e));
  return {h.coeff(Rat(0)), h.order()};
}

}  // namespace hh
