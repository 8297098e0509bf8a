#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hh/alg_scalar.hpp"

namespace hh {

/// Parameters of x'' = -λx - 2xy, y'' = -y - x² + Cy².
struct SystemParams {
  Rat lambda;
  Rat C;
};

void check_params(const SystemParams& p);

/// Exact value p + q·√d (d may be negative, q == 0 when rational).
struct QuadIrr {
  Rat p;
  Rat q;
  Rat d;

  static QuadIrr make(Rat p, Rat q, Rat d);
  static QuadIrr rational(Rat v) { return {std::move(v), 0, 0}; }
  bool is_rational() const { return sgn(q) == 0; }
  bool is_real() const { return is_rational() || sgn(d) >= 0; }
  std::optional<Rat> value() const;
  double approx_re() const;
  double approx_im() const;
  std::string to_string() const;
  friend bool operator==(const QuadIrr& a, const QuadIrr& b) {
    return a.p == b.p && a.q == b.q && (a.is_rational() || a.d == b.d);
  }
};

enum class CaseLabel { Case1, Case2 };
std::string to_string(CaseLabel c);

/// Dominant behaviour x ~ a τ^α, y ~ b τ^β.
struct Balance {
  CaseLabel label = CaseLabel::Case1;
  QuadIrr alpha;
  Rat beta = -2;
  /// Case 1: the two values ±3√(2+C); Case 2: empty (a_α is arbitrary).
  std::vector<QuadIrr> a_values;
  bool a_arbitrary = false;
  Rat b;
  bool logarithmic = false;
  std::string note;
};

struct ResonanceReport {
  CaseLabel label = CaseLabel::Case1;
  std::vector<QuadIrr> values;
  std::vector<bool> rational;
  std::vector<int> multiplicity;
  std::vector<std::string> notes;
  bool all_rational() const;
  /// Positive resonances, all rational (checked by caller).
  std::vector<Rat> positive() const;
};

std::vector<Balance> dominant_balances(const SystemParams& p);
ResonanceReport resonances(const Balance& b, const SystemParams& p);

enum class ClassKind {
  IntegrableCandidate,
  NonintegrableRationalCase1,
  NonintegrableRationalCase2,
  NonintegrableIrrational,
  LogarithmicBranch
};
std::string to_string(ClassKind k);

struct BalanceVerdict {
  CaseLabel label = CaseLabel::Case1;
  bool rational = false;
  /// Grid denominator needed by the series (1 Laurent, 2 Puiseux), if any.
  std::optional<int> q;
  /// Set for rational balances: whether every resonance step is consistent
  /// with all free data symbolic.
  std::optional<bool> compatible;
  std::string obstruction;
};

struct Classification {
  ClassKind kind = ClassKind::NonintegrableIrrational;
  /// "i", "ii", "iii" for the known integrable cases, else empty.
  std::string integrable_case;
  bool puiseux_eligible = false;
  std::vector<BalanceVerdict> balances;
  std::string summary() const;
};

Classification classify(const SystemParams& p);

/// Smallest grid denominator q in {1, 2} with q·2α and q·r integral for every
/// positive resonance r; empty when none works.
std::optional<int> grid_denominator(const Balance& b, const ResonanceReport& r);

}  // namespace hh
