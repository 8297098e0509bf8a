#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hh/recursion.hpp"

namespace hh {

// ---------------------------------------------------------------------------
// Residuals of the motion equations

/// (x'' + λx + 2xy, y'' + y + x² - Cy²); each truncated at its guaranteed order.
std::pair<PSeries, PSeries> residual_system(const SeriesSolution& sol);

/// First exponent with a nonzero coefficient, if any.
std::optional<Rat> first_nonzero(const PSeries& s);

struct ResidualCheck {
  bool ok = true;
  /// Guaranteed orders of the two residuals.
  Rat order_x, order_y;
  /// "x" or "y" and the exponent of the first nonzero coefficient.
  std::string component;
  std::optional<Rat> exponent;
  std::string message() const;
};
ResidualCheck check_system(const SeriesSolution& sol);
/// Throws VerificationFailure naming the offending exponent.
void verify_system(const SeriesSolution& sol);

/// Same solution with x replaced by -x.
SeriesSolution negate_x(const SeriesSolution& sol);

// ---------------------------------------------------------------------------
// Energy

struct EnergyValue {
  ParamPoly H;
  /// The Hamiltonian series is known (and constant) below this exponent.
  Rat checked_below;
};

/// Hamiltonian series ½(x'² + y'² + λx² + y²) + x²y - (C/3)y³.
PSeries hamiltonian_series(const SeriesSolution& sol);
/// Constant term of the Hamiltonian series; throws VerificationFailure when a
/// nonconstant coefficient survives, PreconditionError when the constant term
/// is not reached.
EnergyValue energy_series(const SeriesSolution& sol);

// ---------------------------------------------------------------------------
// Fourth-order equation for y

/// y'''' as a polynomial over the names {y, y1, y2, H, lam, C} (y1 = y',
/// y2 = y''), obtained by eliminating x from the motion equations with the
/// energy integral.
struct FourthOrderEquation {
  ParamPoly rhs;
  static const std::vector<std::string>& names();
  /// Coefficient of y^i y1^j y2^k H^h as a polynomial in {lam, C}.
  ParamPoly coefficient(int i, int j, int k, int h) const;
  std::string to_string() const;
};
FourthOrderEquation derive_fourth_order();

/// y'''' - rhs(y, y', y'', H) on a solution.
PSeries residual_fourth_order(const SeriesSolution& sol, const EnergyValue& H);

// ---------------------------------------------------------------------------
// First-order reductions y'² = Ãy³ + B̃y² + C̃y + D̃ + G̃y^(5/2) + Ẽy^(3/2)

enum class Reduction { A, B, BPrime };
std::string to_string(Reduction r);
Reduction parse_reduction(const std::string& s);

struct FirstOrderCoeffs {
  AlgScalar A, B, C, D, G, E;
};

/// Printed coefficient formulas: A is the x ≡ 0 family, B the general
/// two-parameter family, BPrime its C = -9/8 specialisation.
FirstOrderCoeffs first_order_coeffs(const SystemParams& p, const Rat& H, Reduction variant);

struct FirstOrderResidual {
  PSeries residual;
  bool ok = true;
  /// Set when D̃ was fitted from the (constant) residual.
  std::optional<ParamPoly> fitted_D;
  std::optional<Rat> first_bad;
};

/// Residual of the reduction on a y-series. Half powers use the square root
/// of y nearest `branch` (times the leading τ power). With `fit_D` the given
/// D̃ is ignored and the residual must be a constant series, returned as D̃.
FirstOrderResidual residual_first_order(const PSeries& y, const FirstOrderCoeffs& c,
                                        std::optional<CBig> branch = std::nullopt, bool fit_D = false);

struct ConsistencyPoint {
  Rat lambda, C, H;
  bool holds = false;
  /// Which identity failed ("x-equation" / "energy") and at which power of y.
  std::string mismatch;
};

/// Whether a reduction is compatible with the motion equations at (λ, C, H):
/// with y'' = P'(y)/2 and x² = Cy² - y - y'', the x-equation and the energy
/// integral must hold identically in y (and y' via y'² = P(y)).
ConsistencyPoint consistency_check(Reduction variant, const Rat& lambda, const Rat& C, const Rat& H);

struct ConsistencyReport {
  Reduction variant = Reduction::B;
  std::vector<ConsistencyPoint> points;
  bool all_hold() const;
};

/// Samples rational (λ, C, H) deterministically from `seed`. For the general
/// family the samples cycle over its three validity loci (λ = 1, C = -2,
/// C(λ + 1) = -2), skipping denominator roots; A samples any (λ, C);
/// BPrime samples λ = 1, C = -9/8.
ConsistencyReport consistency_sample(Reduction variant, int count, std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Closed forms at C = -16/5, λ = 1/9:
//   y = -5 / (3(1 ∓ 3s)²),  x² = 25(1 ∓ s) / (9(1 ∓ 3s)³),  s = sin((t - t0)/3)

enum class ClosedForm { Minus, Plus };  // 1 - 3s (first form), 1 + 3s (second form)
std::string to_string(ClosedForm w);
ClosedForm parse_closed_form(const std::string& s);

/// Laurent expansion around the movable pole, τ = t - t_s; y through τ^N,
/// x through τ^(N + 1/2). The x branch follows the leading coefficient of the
/// matching series family (real for the first form, times i for the second)
/// unless `branch` is given.
SeriesSolution closed_form_series(ClosedForm which, int N, std::optional<CBig> branch = std::nullopt);

struct ClosedFormValue {
  CBig y;
  CBig x2;
};
/// Direct evaluation at τ (relative to the same pole).
ClosedFormValue closed_form_value(ClosedForm which, const CBig& tau, mpfr_prec_t prec);
/// Residuals of the motion equations of the closed form at τ, with derivatives
/// by a fourth-order central stencil; x is the root of x² nearest `x_hint`.
std::pair<CBig, CBig> closed_form_residual(ClosedForm which, const CBig& tau, const CBig& x_hint, mpfr_prec_t prec);

// ---------------------------------------------------------------------------
// Matching

struct MatchResult {
  std::map<std::string, AlgScalar> bindings;
  bool agree = false;
  Rat checked_below;
  std::optional<Rat> first_disagreement;
  std::string component;
};

/// Solves for the family's free parameters from the target's coefficients at
/// the resonance positions and checks agreement through the common order.
/// Throws VerificationFailure when the equations have no solution.
MatchResult match_parameters(const SeriesSolution& family, const SeriesSolution& target);

// ---------------------------------------------------------------------------
// Convergence

struct IndexBound {
  int index = 0;
  Real a_bound;
  Real b_bound;
};

struct BoundException {
  int index = 0;
  char component = 'a';
  Real bound;
  std::string coefficient;  // exact form when available
};

struct ConvergenceCert {
  std::string family;
  Rat lambda;
  /// Outward-rounded upper bound of |c1|, as an exact rational.
  Rat c1_bound;
  int N = 0;
  int horizon = 0;
  int first_index = -1;
  std::vector<IndexBound> bounds;
  std::vector<BoundException> exceptions;
  /// The tail inequality holds for every k > N (checked exactly).
  bool tail_ok = false;
  bool granted = false;
  Rat epsilon;
  /// Geometric-series comparison constant 1/ε.
  Rat comparison_constant;
  std::string message;
};

struct ConvergenceOptions {
  int horizon = 200;
  Rat epsilon = Rat(1, 100);
  /// Coefficients beyond the solution's exact range are Taylor models of
  /// this total degree in the parameters.
  int tm_degree = 4;
  mpfr_prec_t prec = 128;
};

/// Threshold max(8, ⌈1 + √(|λ| + 2|c1| + 7)⌉) from an upper bound of |c1|.
int convergence_threshold(const Rat& lambda, const Rat& c1_upper);
/// Right sides of the coefficient bounds at index k (exact).
std::pair<Rat, Rat> tail_bounds(int k, const Rat& lambda, const Rat& c1_upper);

/// Certifies |a_n|, |b_n| <= 1 for n in [first, horizon] over the polydisk
/// |p| <= 1 of every symbolic parameter, with rigorous enclosures. For the
/// C = -16/5 family the tail k > N is covered by the inductive bound.
ConvergenceCert convergence_certificate(const SeriesSolution& sol, const ConvergenceOptions& opt = {});

}  // namespace hh
