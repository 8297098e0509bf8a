#include "support.hpp"

#include "hh/errors.hpp"

using namespace hh;

namespace {

std::vector<SeriesSolution> verified_families() {
  std::vector<SeriesSolution> v;
  for (const char* br : {"real-plus", "real-i", "c2-plus", "c2-i"}) v.push_back(generate_case2_series(Rat(1, 9), br, {}, 8));
  v.push_back(generate_puiseux_series(Rat(1), 1, {}, 6));
  v.push_back(generate_puiseux_series(Rat(1), -1, {}, 6));
  v.push_back(*generate_generic({Rat(1), Rat(-1)}, CaseLabel::Case1, "case1-plus", 6).solution);
  v.push_back(*generate_generic({Rat(1, 16), Rat(-16)}, CaseLabel::Case1, "case1-minus", 6).solution);
  v.push_back(*generate_generic({Rat(-2, 3), Rat(-6)}, CaseLabel::Case1, "case1-plus", 9).solution);
  return v;
}

ParamPoly lc_poly(std::initializer_list<std::pair<std::pair<int, int>, Rat>> terms) {
  const std::vector<std::string> n = {"lam", "C"};
  ParamPoly p(n);
  for (const auto& [e, c] : terms) {
    ParamPoly m = ParamPoly::constant(n, AlgScalar(c));
    for (int k = 0; k < e.first; ++k) m *= ParamPoly::variable(n, "lam");
    for (int k = 0; k < e.second; ++k) m *= ParamPoly::variable(n, "C");
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("property: every generated family solves the motion equations exactly") {
  for (const auto& s : verified_families()) {
    INFO(s.family << "/" << s.branch);
    ResidualCheck rc = check_system(s);
    CHECK_MESSAGE(rc.ok, rc.message());
    CHECK_NOTHROW(verify_system(s));
    CHECK(check_system(negate_x(s)).ok);
  }
}

TEST_CASE("a corrupted coefficient is located") {
  SeriesSolution s = generate_case2_series(Rat(1, 9), "real-plus", {}, 6);
  std::vector<ParamPoly> c = s.y.coeffs();
  c[3] += ParamPoly(AlgScalar(Rat(1, 1000))).with_names(c[3].names());
  s.y = PSeries(s.y.base(), s.y.q(), c, s.y.order());
  ResidualCheck rc = check_system(s);
  CHECK_FALSE(rc.ok);
  REQUIRE(rc.exponent.has_value());
  CHECK(*rc.exponent == Rat(-1));
  CHECK_THROWS_AS(verify_system(s), VerificationFailure);
}

TEST_CASE("property: the energy is constant on every family") {
  for (const auto& s : verified_families()) {
    INFO(s.family << "/" << s.branch);
    CHECK_NOTHROW(energy_series(s));
  }
}

TEST_CASE("energy values match the oracle") {
  SeriesSolution s = generate_case2_series(Rat(1, 9), "real-plus", {}, 8);
  auto rows = test::load_oracle("energy_case2_real-plus.txt");
  ParamPoly want = test::oracle_coeff(rows, 'H', Rat(0), test::quartic_two(), {"a2", "b4"}, s.parameters);
  CHECK(energy_series(s).H == want);
  SeriesSolution p = generate_puiseux_series(Rat(1), 1, {}, 6);
  auto prow = test::load_oracle("energy_puiseux_plus.txt");
  CHECK(energy_series(p).H == test::oracle_coeff(prow, 'H', Rat(0), test::sqrt_field(14), {"D0", "D1", "D2"},
                                                 p.parameters));
}

TEST_CASE("fourth-order equation coefficients") {
  FourthOrderEquation eq = derive_fourth_order();
  // y^i y1^j y2^k H^h.
  CHECK(eq.coefficient(1, 0, 1, 0) == lc_poly({{{0, 1}, 2}, {{0, 0}, -8}}));
  CHECK(eq.coefficient(0, 0, 1, 0) == lc_poly({{{1, 0}, -4}, {{0, 0}, -1}}));
  CHECK(eq.coefficient(0, 2, 0, 0) == lc_poly({{{0, 1}, 2}, {{0, 0}, 2}}));
  CHECK(eq.coefficient(0, 0, 0, 1) == lc_poly({{{0, 0}, -4}}));
  CHECK(eq.coefficient(3, 0, 0, 0) == lc_poly({{{0, 1}, Rat(20, 3)}}));
  CHECK(eq.coefficient(2, 0, 0, 0) == lc_poly({{{1, 1}, 4}, {{0, 0}, -6}}));
  CHECK(eq.coefficient(1, 0, 0, 0) == lc_poly({{{1, 0}, -4}}));
  CHECK(eq.rhs.terms().size() == 11);
}

TEST_CASE("property: the fourth-order equation holds on every family") {
  for (const auto& s : verified_families()) {
    INFO(s.family << "/" << s.branch);
    EnergyValue H = energy_series(s);
    CHECK_FALSE(first_nonzero(residual_fourth_order(s, H)).has_value());
  }
}

TEST_CASE("closed-form expansions match the oracle and solve the system") {
  for (ClosedForm w : {ClosedForm::Minus, ClosedForm::Plus}) {
    SeriesSolution s = closed_form_series(w, 20);
    auto rows = test::load_oracle("closed_" + to_string(w) + "_y.txt");
    for (const Rat& e : test::oracle_exponents(rows, 'y')) {
      // The oracle lives in Q(√2); the expansion may sit in a larger field.
      auto want = test::oracle_coeff(rows, 'y', e, test::sqrt_field(2), {}, {}).as_constant();
      auto got = s.y.coeff(e).as_constant();
      REQUIRE(want.has_value());
      REQUIRE(got.has_value());
      auto mapped = embed_into(*want, got->field());
      REQUIRE(mapped.has_value());
      CHECK(*got == *mapped);
    }
    CHECK(check_system(s).ok);
    CHECK(energy_series(s).H.is_constant());
  }
}

TEST_CASE("closed forms satisfy the motion equations numerically") {
  const mpfr_prec_t prec = 256;
  SeriesSolution s = closed_form_series(ClosedForm::Minus, 40);
  std::map<std::string, CBig> none;
  for (int k = 0; k < 20; ++k) {
    double ang = 0.31 + 2 * 3.14159265358979 * k / 20;
    CBig tau = CBig::from_complex(std::polar(0.5, ang), prec);
    CBig hint = ps_eval(s.x, tau, none, prec).value;
    auto [e1, e2] = closed_form_residual(ClosedForm::Minus, tau, hint, prec);
    CHECK(abs(e1).to_double() < 1e-40);
    CHECK(abs(e2).to_double() < 1e-40);
  }
}

TEST_CASE("the y^(5/2) reduction holds on the first closed form") {
  SeriesSolution s = closed_form_series(ClosedForm::Minus, 16);
  RootResult r135 = alg_root(AlgScalar(135), 2);
  FirstOrderCoeffs c{AlgScalar(Rat(-32, 15)), AlgScalar(Rat(-4, 9)), AlgScalar(0), AlgScalar(0),
                     AlgScalar(QI(0, -8)) / r135.root.lifted(with_i(r135.field)), AlgScalar(0)};
  FirstOrderResidual res = residual_first_order(s.y, c);
  CHECK(res.ok);
  // The opposite sign fails.
  c.G = -c.G;
  CHECK_FALSE(residual_first_order(s.y, c).ok);
}

TEST_CASE("the C = -9/8 reduction with D1 = 0 has a constant residual 16H/15") {
  SeriesSolution s = generate_puiseux_series(Rat(1), 1, {{"D1", AlgScalar(0)}}, 6);
  EnergyValue H = energy_series(s);
  FirstOrderCoeffs c = first_order_coeffs(s.params, Rat(0), Reduction::BPrime);
  FirstOrderResidual r = residual_first_order(s.y, c, std::nullopt, true);
  CHECK(r.ok);
  REQUIRE(r.fitted_D.has_value());
  CHECK(*r.fitted_D == H.H * AlgScalar(Rat(16, 15)));
  // With D1 free the residual is not constant.
  SeriesSolution g = generate_puiseux_series(Rat(1), 1, {}, 6);
  CHECK_FALSE(residual_first_order(g.y, c, std::nullopt, true).ok);
}

TEST_CASE("property: sampled consistency of the reductions") {
  for (Reduction v : {Reduction::A, Reduction::B, Reduction::BPrime}) {
    ConsistencyReport r = consistency_sample(v, 12, 3);
    CHECK(r.points.size() == 12);
    for (const auto& p : r.points) {
      INFO(to_string(v) << " at lambda=" << to_string(p.lambda) << " C=" << to_string(p.C) << " H=" << to_string(p.H)
                        << ": " << p.mismatch);
      CHECK(p.holds);
    }
  }
}

TEST_CASE("the general reduction fails off its validity loci") {
  ConsistencyPoint p = consistency_check(Reduction::B, Rat(2), Rat(-6), Rat(1));
  CHECK_FALSE(p.holds);
  CHECK(p.mismatch.find("x-equation") != std::string::npos);
  // C = -2 lies on a validity locus, so lambda = 1/2 there is consistent.
  CHECK(consistency_check(Reduction::B, Rat(1, 2), Rat(-2), Rat(3, 7)).holds);
  CHECK(consistency_check(Reduction::B, Rat(1), Rat(5, 2), Rat(-1, 3)).holds);
  CHECK(consistency_check(Reduction::B, Rat(-3, 5), Rat(-5), Rat(2)).holds);
  CHECK_THROWS_AS(first_order_coeffs({Rat(1), Rat(-1)}, Rat(0), Reduction::B), PreconditionError);
  CHECK_THROWS_AS(first_order_coeffs({Rat(1), Rat(-4, 3)}, Rat(0), Reduction::B), PreconditionError);
}

TEST_CASE("matching against the closed forms") {
  FieldPtr f = with_i(test::quartic_two());
  AlgScalar th = AlgScalar::generator(f);
  SeriesSolution fam = generate_case2_series(Rat(1, 9), "real-plus", {}, 20);
  MatchResult m = match_parameters(fam, closed_form_series(ClosedForm::Minus, 20));
  CHECK(m.agree);
  CHECK(m.bindings.at("a2") == th * AlgScalar(Rat(-21497, 42467328)));
  CHECK(m.bindings.at("b4") == AlgScalar(parse_rat("-858455/12039487488")));
  SeriesSolution fam_i = generate_case2_series(Rat(1, 9), "real-i", {}, 20);
  MatchResult mi = match_parameters(fam_i, closed_form_series(ClosedForm::Plus, 20));
  CHECK(mi.agree);
  CHECK(mi.bindings.at("a2") == th * AlgScalar(QI(0, Rat(-21497, 42467328))));
  CHECK(mi.bindings.at("b4") == AlgScalar(parse_rat("-858455/12039487488")));
  // A family matched against itself with bound parameters gives those values back.
  std::map<std::string, AlgScalar> b = {{"a2", AlgScalar(Rat(1, 3))}, {"b4", AlgScalar(Rat(-2, 5))}};
  MatchResult self = match_parameters(fam, generate_case2_series(Rat(1, 9), "real-plus", b, 20));
  CHECK(self.agree);
  CHECK(self.bindings.at("a2") == AlgScalar(Rat(1, 3)));
  CHECK(self.bindings.at("b4") == AlgScalar(Rat(-2, 5)));
  // The second resonance root gives a disjoint family.
  CHECK_THROWS_AS(match_parameters(generate_case2_series(Rat(1, 9), "c2-plus", {}, 12),
                                   closed_form_series(ClosedForm::Minus, 12)),
                  VerificationFailure);
}

TEST_CASE("convergence threshold and exact tail bounds") {
  Rat c1_upper = rat(14865, 10000);  // ≥ 5·2^(1/4)/4 ≈ 1.48651
  CHECK(convergence_threshold(Rat(1, 9), c1_upper) == 8);
  CHECK(convergence_threshold(Rat(100), Rat(0)) == 12);
  for (int k = 9; k <= 400; ++k) {
    auto [a, b] = tail_bounds(k, Rat(1, 9), c1_upper);
    CHECK(a <= 1);
    CHECK(b <= 1);
  }
}

TEST_CASE("convergence certificate for the first family") {
  SeriesSolution s = generate_case2_series(Rat(1, 9), "real-plus", {}, 12);
  ConvergenceOptions o;
  o.horizon = 60;
  ConvergenceCert c = convergence_certificate(s, o);
  CHECK(c.N == 8);
  CHECK(c.granted);
  CHECK(c.tail_ok);
  CHECK(c.exceptions.empty());
  CHECK(c.comparison_constant == Rat(100));
}

TEST_CASE("the Puiseux family has exactly one bound exception") {
  SeriesSolution s = generate_puiseux_series(Rat(1), 1, {}, 8);
  ConvergenceOptions o;
  o.horizon = 50;
  ConvergenceCert c = convergence_certificate(s, o);
  REQUIRE(c.exceptions.size() == 1);
  CHECK(c.exceptions[0].index == 3);
  CHECK(c.exceptions[0].component == 'a');
  CHECK(c.exceptions[0].coefficient == "(2/7*th)*D1");
  CHECK_FALSE(c.granted);
}
