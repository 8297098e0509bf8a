#include <algorithm>

#include "hh/alg_root.hpp"
#include "hh/errors.hpp"
#include "hh/qi_poly.hpp"
#include "hh/verify.hpp"

namespace hh {

std::string to_string(Reduction r) {
  switch (r) {
    case Reduction::A: return "4a";
    case Reduction::B: return "4b";
    case Reduction::BPrime: return "4b'";
  }
  return "?";
}

Reduction parse_reduction(const std::string& s) {
  if (s == "4a") return Reduction::A;
  if (s == "4b") return Reduction::B;
  if (s == "4b'" || s == "4bp" || s == "4b-prime") return Reduction::BPrime;
  throw PreconditionError("unknown reduction " + s + " (expected 4a, 4b, 4b')");
}

namespace {

struct RatCoeffs {
  Rat A, B, C, D;
};

RatCoeffs rat_coeffs(const Rat& l, const Rat& C, const Rat& H, Reduction v) {
  switch (v) {
    case Reduction::A: return {C * 2 / 3, -1, 0, 2 * H};
    case Reduction::BPrime: return {Rat(-4, 3), -1, 0, H * 16 / 15};
    case Reduction::B: break;
  }
  const Rat d1 = C + 1;
  const Rat d2 = 3 * C * C * C + 10 * C * C + 11 * C + 4;
  const Rat C2 = C * C, C3 = C2 * C, C4 = C3 * C, C5 = C4 * C;
  const Rat d3 = 3 * C5 + 22 * C4 + 60 * C3 + 78 * C2 + 49 * C + 12;
  if (sgn(d1) == 0) throw PreconditionError("denominator C + 1 vanishes");
  if (sgn(d2) == 0) throw PreconditionError("denominator 3C^3 + 10C^2 + 11C + 4 vanishes");
  if (sgn(d3) == 0) throw PreconditionError("denominator 3C^5 + 22C^4 + 60C^3 + 78C^2 + 49C + 12 vanishes");
  const Rat l2 = l * l, l3 = l2 * l;
  RatCoeffs r;
  r.A = Rat(-4, 3);
  r.B = (1 - (C + 2) * l) / d1;
  r.C = -(3 * C2 * l2 - 3 * C2 * l + 8 * C * l2 - 7 * C * l - C + 4 * l2 - 2 * l - 2) / d2;
  Rat num = 24 * C4 * H + 104 * C3 * H - 9 * C3 * l3 + 6 * C3 * l2 + 3 * C3 * l;
  num += 168 * C2 * H - 30 * C2 * l3 + 13 * C2 * l2 + 16 * C2 * l + C2;
  num += 120 * C * H - 28 * C * l3 + 24 * C * l + 4 * C + 32 * H - 8 * l3 - 4 * l2 + 8 * l + 4;
  r.D = num / (4 * d3);
  return r;
}

QIPoly rp(std::initializer_list<Rat> c) {
  QIPoly p;
  for (const auto& v : c) p.push_back(QI(v));
  trim(p);
  return p;
}

std::string first_mismatch(const QIPoly& d) {
  for (size_t k = 0; k < d.size(); ++k)
    if (!d[k].is_zero()) return "y^" + std::to_string(k) + " coefficient " + to_string(d[k]);
  return {};
}

}  // namespace

FirstOrderCoeffs first_order_coeffs(const SystemParams& p, const Rat& H, Reduction variant) {
  check_params(p);
  RatCoeffs r = rat_coeffs(p.lambda, p.C, H, variant);
  return {r.A, r.B, r.C, r.D, AlgScalar(0), AlgScalar(0)};
}

FirstOrderResidual residual_first_order(const PSeries& y_in, const FirstOrderCoeffs& c, std::optional<CBig> branch,
                                        bool fit_D) {
  PSeries y = y_in;
  FirstOrderCoeffs k = c;
  std::optional<PSeries> rho;
  if (!c.G.is_zero() || !c.E.is_zero()) {
    if (y.is_zero()) throw PreconditionError("half powers of the zero series");
    auto lead = y.leading().as_constant();
    if (!lead) throw ParameterError("leading coefficient of y must be parameter-free");
    FieldPtr f = lead->field();
    for (const auto& p : y.coeffs())
      for (const auto& [e, s] : p.terms()) f = common_field(f, s.field());
    RootResult rr = alg_root(lead->lifted(f), 2, branch);
    y = y.map_coeffs([&](const ParamPoly& p) {
      return p.map_coeffs([&](const AlgScalar& s) { return map_to_field(s.lifted(f), rr); });
    });
    // Coefficients must live in the root's field, possibly after adjoining i.
    FieldPtr target = rr.field;
    for (int attempt = 0; attempt < 2; ++attempt) {
      bool fits = true;
      for (AlgScalar* s : {&k.A, &k.B, &k.C, &k.D, &k.G, &k.E}) fits = fits && embed_into(*s, target).has_value();
      if (fits || target->has_i()) break;
      target = with_i(target);
    }
    for (AlgScalar* s : {&k.A, &k.B, &k.C, &k.D, &k.G, &k.E}) {
      auto v = embed_into(*s, target);
      if (!v) throw FieldError("coefficient " + s->to_string() + " does not embed in " + target->describe());
      *s = *v;
    }
    y = y.map_coeffs([&](const ParamPoly& p) {
      return p.map_coeffs([&](const AlgScalar& s) { return s.lifted(target); });
    });
    rho = ps_sqrt(y, rr.root.embed(256));
  }
  PSeries dy = ps_diff(y);
  PSeries y2 = y * y;
  PSeries r = dy * dy - (y2 * y) * ParamPoly(k.A) - y2 * ParamPoly(k.B) - y * ParamPoly(k.C);
  if (rho) {
    PSeries r3 = *rho * *rho * *rho;
    PSeries r5 = r3 * *rho * *rho;
    r = r - r5 * ParamPoly(k.G) - r3 * ParamPoly(k.E);
  }
  FirstOrderResidual out;
  if (fit_D) {
    out.fitted_D = r.coeff(Rat(0));
    if (r.order() <= 0) throw PreconditionError("truncation too low to fit the constant");
  }
  const ParamPoly D = fit_D ? *out.fitted_D : ParamPoly(k.D);
  r = r - PSeries::monomial(D, Rat(0), r.order(), r.q());
  out.residual = r;
  out.first_bad = first_nonzero(r);
  out.ok = !out.first_bad.has_value();
  return out;
}

ConsistencyPoint consistency_check(Reduction variant, const Rat& lambda, const Rat& C, const Rat& H) {
  check_params({lambda, C});
  RatCoeffs k = rat_coeffs(lambda, C, H, variant);
  ConsistencyPoint pt{lambda, C, H, false, {}};
  const QIPoly P = rp({k.D, k.C, k.B, k.A});  // y'² = P(y)
  const QIPoly Y2 = poly_scale(poly_derivative(P), QI(Rat(1, 2)));
  const QIPoly X = poly_sub(rp({0, -1, C}), Y2);  // x² = Cy² - y - y''
  const QIPoly dX = poly_derivative(X);
  const QIPoly X1sq = poly_mul(poly_mul(dX, dX), P);
  const QIPoly X2 = poly_add(poly_mul(poly_derivative(dX), P), poly_mul(dX, Y2));
  const QIPoly yv = rp({0, 1});
  const QIPoly XX = poly_mul(X, X);
  // 2X·X'' = X'² - 4λX² - 8X²y  (x-equation, with x'² = X'²/(4X))
  QIPoly lhs = poly_scale(poly_mul(X, X2), QI(2));
  QIPoly rhs = poly_sub(poly_sub(X1sq, poly_scale(XX, QI(4 * lambda))), poly_scale(poly_mul(XX, yv), QI(8)));
  std::string m = first_mismatch(poly_sub(lhs, rhs));
  if (!m.empty()) {
    pt.mismatch = "x-equation: " + m;
    return pt;
  }
  // X'² = 4X(2H - y'² - λX - y² - 2Xy + (2C/3)y³)  (energy)
  QIPoly inner = poly_sub(rp({2 * H, 0, -1, C * 2 / 3}), P);
  inner = poly_sub(inner, poly_scale(X, QI(lambda)));
  inner = poly_sub(inner, poly_scale(poly_mul(X, yv), QI(2)));
  m = first_mismatch(poly_sub(X1sq, poly_scale(poly_mul(X, inner), QI(4))));
  if (!m.empty()) {
    pt.mismatch = "energy: " + m;
    return pt;
  }
  pt.holds = true;
  return pt;
}

bool ConsistencyReport::all_hold() const {
  return std::all_of(points.begin(), points.end(), [](const ConsistencyPoint& p) { return p.holds; });
}

ConsistencyReport consistency_sample(Reduction variant, int count, std::uint64_t seed) {
  if (count < 0) throw PreconditionError("negative sample count");
  std::mt19937_64 rng(seed);
  auto draw = [&](long lo, long hi, long den_max) {
    std::uniform_int_distribution<long> num(lo, hi), den(1, den_max);
    return rat(num(rng), den(rng));
  };
  auto bad_C = [](const Rat& C) {
    return sgn(C) == 0 || C == -1 || C == Rat(-4, 3) || C == -3;
  };
  ConsistencyReport rep;
  rep.variant = variant;
  int attempts = 0;
  while (static_cast<int>(rep.points.size()) < count) {
    if (++attempts > 100 * (count + 1)) throw PreconditionError("could not draw admissible samples");
    Rat l, C, H = draw(-20, 20, 7);
    switch (variant) {
      case Reduction::A:
        l = draw(-20, 20, 9);
        C = draw(-20, 20, 9);
        break;
      case Reduction::BPrime:
        l = 1;
        C = Rat(-9, 8);
        break;
      case Reduction::B:
        switch (rep.points.size() % 3) {
          case 0:
            l = 1;
            C = draw(-40, 40, 9);
            break;
          case 1:
            l = draw(-20, 20, 9);
            C = -2;
            break;
          default:
            l = draw(-20, 20, 9);
            if (l == -1) continue;
            C = Rat(-2) / (l + 1);
            break;
        }
        break;
    }
    if (bad_C(C)) continue;
    rep.points.push_back(consistency_check(variant, l, C, H));
  }
  return rep;
}

}  // namespace hh
