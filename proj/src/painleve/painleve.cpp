#include "hh/painleve.hpp"

#include <cmath>

#include "hh/errors.hpp"
#include "hh/recursion.hpp"

namespace hh {

void check_params(const SystemParams& p) {
  if (sgn(p.C) == 0) throw PreconditionError("C must be nonzero");
}

QuadIrr QuadIrr::make(Rat p, Rat q, Rat d) {
  if (sgn(q) == 0 || sgn(d) == 0) return rational(std::move(p));
  // √(n/m) = √(n m) / m, then pull squares out of n m.
  const int sign = sgn(d);
  BigInt nm = abs(d.get_num()) * d.get_den();
  auto [s, rest] = extract_power(nm, 2);
  q = q * Rat(s, d.get_den());
  q.canonicalize();
  if (rest == 1 && sign > 0) return rational(p + q);
  return {std::move(p), std::move(q), Rat(sign < 0 ? BigInt(-rest) : rest)};
}

std::optional<Rat> QuadIrr::value() const {
  if (!is_rational()) return std::nullopt;
  return p;
}

double QuadIrr::approx_re() const {
  if (is_rational()) return p.get_d();
  if (sgn(d) < 0) return p.get_d();
  return p.get_d() + q.get_d() * std::sqrt(d.get_d());
}

double QuadIrr::approx_im() const {
  if (is_rational() || sgn(d) > 0) return 0;
  return q.get_d() * std::sqrt(-d.get_d());
}

std::string QuadIrr::to_string() const {
  if (is_rational()) return hh::to_string(p);
  std::string s;
  if (sgn(p) != 0) s = hh::to_string(p) + (sgn(q) > 0 ? "+" : "");
  return s + hh::to_string(q) + "*sqrt(" + hh::to_string(d) + ")";
}

std::string to_string(CaseLabel c) { return c == CaseLabel::Case1 ? "Case1" : "Case2"; }

bool ResonanceReport::all_rational() const {
  for (bool r : rational)
    if (!r) return false;
  return true;
}

std::vector<Rat> ResonanceReport::positive() const {
  std::vector<Rat> out;
  for (size_t k = 0; k < values.size(); ++k)
    if (rational[k] && sgn(values[k].p) > 0) out.push_back(values[k].p);
  return out;
}

std::vector<Balance> dominant_balances(const SystemParams& p) {
  check_params(p);
  std::vector<Balance> out;
  Balance b1;
  b1.label = CaseLabel::Case1;
  b1.alpha = QuadIrr::rational(-2);
  b1.b = -3;
  b1.a_values = {QuadIrr::make(0, 3, 2 + p.C), QuadIrr::make(0, -3, 2 + p.C)};
  if (p.C == -2) {
    b1.logarithmic = true;
    b1.note = "a_alpha = 0: the dominant term includes a logarithm";
  }
  out.push_back(b1);
  if (p.C < -2) {
    // α(α-1) = -12/C with -2 < α < 0 keeps only α = (1 - √(1-48/C))/2.
    Balance b2;
    b2.label = CaseLabel::Case2;
    b2.alpha = QuadIrr::make(Rat(1, 2), Rat(-1, 2), 1 - 48 / p.C);
    b2.b = 6 / p.C;
    b2.a_arbitrary = true;
    b2.note = "a_alpha arbitrary (resonance r = 0)";
    out.push_back(b2);
  }
  return out;
}

ResonanceReport resonances(const Balance& b, const SystemParams& p) {
  check_params(p);
  if (b.logarithmic) throw PreconditionError("logarithmic balance has no resonance structure");
  ResonanceReport r;
  r.label = b.label;
  if (b.label == CaseLabel::Case1) {
    Rat disc = 1 - 24 * (1 + p.C);
    r.values = {QuadIrr::rational(-1), QuadIrr::rational(6), QuadIrr::make(Rat(5, 2), Rat(1, 2), disc),
                QuadIrr::make(Rat(5, 2), Rat(-1, 2), disc)};
    r.notes = {"r=-1: arbitrary t0"};
  } else {
    // Kovalevskaya determinant r(r-s)(r-6)(r+1) for α = (1-s)/2.
    r.values = {QuadIrr::rational(-1), QuadIrr::rational(0), QuadIrr::rational(6),
                QuadIrr::make(0, 1, 1 - 48 / p.C)};
    r.notes = {"r=-1: arbitrary t0", "r=0: arbitrary leading coefficient c1"};
  }
  for (const auto& v : r.values) {
    r.rational.push_back(v.is_rational());
    int m = 0;
    for (const auto& w : r.values)
      if (w == v) ++m;
    r.multiplicity.push_back(m);
  }
  return r;
}

std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::IntegrableCandidate: return "IntegrableCandidate";
    case ClassKind::NonintegrableRationalCase1: return "NonintegrableRationalCase1";
    case ClassKind::NonintegrableRationalCase2: return "NonintegrableRationalCase2";
    case ClassKind::NonintegrableIrrational: return "NonintegrableIrrational";
    case ClassKind::LogarithmicBranch: return "LogarithmicBranch";
  }
  return "?";
}

std::string Classification::summary() const {
  std::string s = to_string(kind);
  if (!integrable_case.empty()) s += "(" + integrable_case + ")";
  return s;
}

std::optional<int> grid_denominator(const Balance& b, const ResonanceReport& r) {
  if (!b.alpha.is_rational() || !r.all_rational()) return std::nullopt;
  for (int q : {1, 2}) {
    bool ok = Rat(b.alpha.p * 2 * q).get_den() == 1;
    for (const auto& v : r.positive()) ok = ok && Rat(v * q).get_den() == 1;
    if (ok) return q;
  }
  return std::nullopt;
}

Classification classify(const SystemParams& p) {
  check_params(p);
  Classification c;
  auto balances = dominant_balances(p);
  if (p.C == -2) {
    c.kind = ClassKind::LogarithmicBranch;
    BalanceVerdict v;
    v.label = CaseLabel::Case1;
    v.obstruction = "leading coefficient vanishes; logarithmic branch";
    c.balances.push_back(v);
    return c;
  }
  for (const auto& b : balances) {
    BalanceVerdict v;
    v.label = b.label;
    auto rr = resonances(b, p);
    v.rational = b.alpha.is_rational() && rr.all_rational();
    if (v.rational) {
      v.q = grid_denominator(b, rr);
      if (!v.q) {
        v.compatible = false;
        v.obstruction = "resonances do not fit a half-integer grid";
      } else {
        const std::string branch = b.label == CaseLabel::Case1 ? "case1-plus" : "case2";
        FamilySpec f = family_for(p, b, branch);
        Rat rmax = 0;
        for (const auto& r : rr.positive()) rmax = std::max(rmax, r);
        int lmax = f.L0() + static_cast<int>(Rat(rmax * f.q).get_num().get_si());
        RecursionRun run = run_recursion(f, lmax);
        v.compatible = !run.obstruction.has_value();
        if (run.obstruction) v.obstruction = run.obstruction->message;
      }
    }
    c.balances.push_back(v);
  }
  int n_rational = 0, n_compatible = 0;
  for (const auto& v : c.balances) {
    if (v.rational) ++n_rational;
    if (v.compatible.value_or(false)) ++n_compatible;
    if (v.rational && v.q == 2) c.puiseux_eligible = true;
  }
  auto kind_of = [](CaseLabel l) {
    return l == CaseLabel::Case1 ? ClassKind::NonintegrableRationalCase1 : ClassKind::NonintegrableRationalCase2;
  };
  const int n = static_cast<int>(c.balances.size());
  if (n_rational == 0) {
    c.kind = ClassKind::NonintegrableIrrational;
  } else if (n_rational == n && n_compatible == n) {
    c.kind = ClassKind::IntegrableCandidate;
    if (p.C == -1 && p.lambda == 1) c.integrable_case = "i";
    else if (p.C == -6) c.integrable_case = "ii";
    else if (p.C == -16 && p.lambda == Rat(1, 16)) c.integrable_case = "iii";
  } else if (n_rational == 1) {
    for (const auto& v : c.balances)
      if (v.rational) c.kind = kind_of(v.label);
  } else {
    c.kind = ClassKind::NonintegrableRationalCase1;
    if (n_compatible == 1)
      for (const auto& v : c.balances)
        if (v.compatible.value_or(false)) c.kind = kind_of(v.label);
  }
  return c;
}

}  // namespace hh
