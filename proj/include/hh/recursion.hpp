#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hh/painleve.hpp"
#include "hh/param_poly.hpp"
#include "hh/pseries.hpp"

namespace hh {

/// One series family of system (x'' + λx + 2xy = 0, y'' + y + x² - Cy² = 0)
/// around a movable singularity. Grid label L indexes
///   y: b_L τ^(L/q),   x: a_L τ^(L/q + shift),
/// starting at the leading label L0 = -2q with shift = α + 2.
struct FamilySpec {
  SystemParams params;
  int q = 1;
  Rat shift;
  ParamPoly a_lead;
  ParamPoly b_lead;
  /// Parameters present before any resonance (e.g. an arbitrary c1).
  std::vector<std::string> base_names;
  /// Default free-parameter names ("a2", "b-1") mapped to family names.
  std::map<std::string, std::string> rename;
  /// Values for free parameters (by family name); unbound ones stay symbolic.
  std::map<std::string, AlgScalar> bindings;

  int L0() const { return -2 * q; }
  Rat x_exponent(int L) const { return rat(L, q) + shift; }
  Rat y_exponent(int L) const { return rat(L, q); }
  Rat resonance_of(int L) const { return rat(L - L0(), q); }
};

using Mat2 = std::array<std::array<ParamPoly, 2>, 2>;

/// Coefficient matrix of (a_L, b_L) in the label-L equations.
Mat2 recursion_matrix(const FamilySpec& f, int L);
ParamPoly det(const Mat2& m);

/// Right-hand side of M·(a_L, b_L) = rhs: minus every term built from
/// labels below L. `a`, `b` are indexed by L - L0.
std::array<ParamPoly, 2> rhs_convolution(const FamilySpec& f, const std::vector<ParamPoly>& a,
                                         const std::vector<ParamPoly>& b, int L);

struct FreeParam {
  std::string name;
  int label = 0;
  char component = 'a';  // 'a' for x, 'b' for y
  Rat resonance;
  std::optional<AlgScalar> bound;
};

struct Obstruction {
  int label = 0;
  Rat resonance;
  /// Compatibility expression that must vanish.
  ParamPoly condition;
  std::string message;
};

struct RecursionRun {
  std::vector<ParamPoly> a;  // by L - L0
  std::vector<ParamPoly> b;
  std::vector<FreeParam> free;
  std::vector<std::string> names;  // symbolic parameters of the result
  int last_label = 0;              // last label fully solved
  std::optional<Obstruction> obstruction;
  /// Labels where the determinant vanished.
  std::vector<int> singular_labels;
};

/// Solves labels L0+1 .. L_max. Stops at the first inconsistent step.
RecursionRun run_recursion(const FamilySpec& f, int L_max);

/// Parameter names the run will introduce (free resonance data), computed
/// from the rank of the recursion matrix only.
std::vector<std::string> planned_names(const FamilySpec& f, int L_max);

/// Series solution with provenance.
struct SeriesSolution {
  SystemParams params;
  std::string family;
  std::string branch;
  PSeries x;
  PSeries y;
  std::vector<std::string> parameters;  // symbolic
  std::vector<FreeParam> registry;
  int q = 1;
  Rat shift;
  std::vector<std::string> notes;
};

SeriesSolution to_solution(const FamilySpec& f, const RecursionRun& run, const std::string& family,
                           const std::string& branch);

// Builders for the families studied here.

/// Family spec for a balance. Case 1: branch "case1-plus"/"case1-minus"
/// (sign of a = ±3√(2+C)); Case 2: the leading coefficient is symbolic "c1"
/// unless `c1` is given.
FamilySpec family_for(const SystemParams& p, const Balance& b, const std::string& branch,
                      std::optional<AlgScalar> c1 = std::nullopt);

struct ResonancePair {
  AlgScalar c_tilde;  // c1^4
  AlgScalar b2;
  bool eq1_zero = false;
  bool eq2_zero = false;
};

/// Solves the label-2 compatibility system of the C = -16/5 family for
/// (c1^4, b2), discarding c1 = 0; pairs ordered by decreasing real part.
std::vector<ResonancePair> resonance_solve(const Rat& lambda);
/// The two printed polynomial conditions evaluated at a pair.
std::array<AlgScalar, 2> resonance_equations(const Rat& lambda, const AlgScalar& c_tilde, const AlgScalar& b2);

/// C = -16/5 family. Branch: real-plus, real-i, c2-plus, c2-i. `order` is the
/// highest y exponent kept (x goes to order + 1/2).
SeriesSolution generate_case2_series(const Rat& lambda, const std::string& branch,
                                     const std::map<std::string, AlgScalar>& bindings, int order);

/// C = -9/8 family, x ~ ±(3√14/4) τ^-2. Keeps exponents up to `order`.
/// The r = 3/2 datum is probed symbolically; its forced value is reported.
SeriesSolution generate_puiseux_series(const Rat& lambda, int sign, const std::map<std::string, AlgScalar>& bindings,
                                       int order);

struct GenericResult {
  std::optional<SeriesSolution> solution;
  std::optional<Obstruction> obstruction;
  std::string message;
};

/// Any (λ, C) and balance with rational resonances; branch case1-plus,
/// case1-minus, or case2. Up to label range covering exponent `order`.
GenericResult generate_generic(const SystemParams& p, CaseLabel which, const std::string& branch, int order);

}  // namespace hh
