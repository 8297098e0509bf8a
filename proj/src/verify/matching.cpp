#include <algorithm>

#include "hh/errors.hpp"
#include "hh/verify.hpp"

namespace hh {

namespace {

Rat slot_exponent(const SeriesSolution& s, const FreeParam& fp) {
  Rat e(fp.label, s.q);
  return fp.component == 'a' ? e + s.shift : e;
}

const PSeries& component(const SeriesSolution& s, char c) { return c == 'a' ? s.x : s.y; }

}  // namespace

MatchResult match_parameters(const SeriesSolution& family, const SeriesSolution& target) {
  if (family.x.is_zero() || family.y.is_zero() || target.x.is_zero() || target.y.is_zero())
    throw PreconditionError("matching needs nonzero x and y series");
  if (family.x.base() != target.x.base() || family.y.base() != target.y.base())
    throw VerificationFailure("families have different leading exponents");
  if (family.x.leading() != target.x.leading() || family.y.leading() != target.y.leading())
    throw VerificationFailure("families have different leading coefficients");

  std::vector<FreeParam> free;
  for (const auto& fp : family.registry)
    if (!fp.bound) free.push_back(fp);
  std::sort(free.begin(), free.end(), [](const FreeParam& a, const FreeParam& b) { return a.label < b.label; });

  MatchResult res;
  for (const auto& fp : free) {
    const Rat e = slot_exponent(family, fp);
    const PSeries& fs = component(family, fp.component);
    const PSeries& ts = component(target, fp.component);
    if (e >= ts.order() || e >= fs.order())
      throw PreconditionError("target truncated before the resonance position t^" + to_string(e));
    auto t = ts.coeff(e).as_constant();
    if (!t) throw PreconditionError("target coefficients must be parameter-free");
    ParamPoly c = fs.coeff(e).bind(res.bindings);
    // c = α·p + β with α, β constants.
    AlgScalar alpha, beta;
    for (const auto& [ex, v] : c.terms()) {
      int deg = 0;
      bool other = false;
      for (size_t k = 0; k < ex.size(); ++k) {
        if (ex[k] == 0) continue;
        if (c.names()[k] == fp.name) deg = ex[k];
        else other = true;
      }
      if (other || deg > 1) throw VerificationFailure("matching equation at t^" + to_string(e) + " is not linear in " + fp.name);
      (deg == 1 ? alpha : beta) += v;
    }
    if (alpha.is_zero()) throw VerificationFailure("matching equation at t^" + to_string(e) + " does not determine " + fp.name);
    res.bindings[fp.name] = (*t - beta) / alpha;
  }

  PSeries fx = family.x.bind(res.bindings), fy = family.y.bind(res.bindings);
  res.checked_below = std::min({Rat(fx.order() - family.shift), fy.order(), Rat(target.x.order() - target.shift), target.y.order()});
  res.agree = true;
  for (Rat e = std::min(fy.base(), target.y.base()); e < res.checked_below; e += Rat(1, 2)) {
    for (char comp : {'b', 'a'}) {
      const Rat ex = comp == 'a' ? e + family.shift : e;
      const PSeries& a = comp == 'a' ? fx : fy;
      const PSeries& b = component(target, comp);
      if (a.coeff(ex) != b.coeff(ex)) {
        res.agree = false;
        res.first_disagreement = ex;
        res.component = comp == 'a' ? "x" : "y";
        return res;
      }
    }
  }
  return res;
}

}  // namespace hh
