#include "support.hpp"

#include "hh/errors.hpp"

using namespace hh;

namespace {

void check_against_oracle(const SeriesSolution& s, const std::string& table, const FieldPtr& field,
                          const std::vector<std::string>& table_names) {
  auto rows = test::load_oracle(table);
  for (char comp : {'x', 'y'}) {
    const PSeries& ps = comp == 'x' ? s.x : s.y;
    for (const Rat& e : test::oracle_exponents(rows, comp)) {
      if (e >= ps.order()) continue;
      ParamPoly want = test::oracle_coeff(rows, comp, e, field, table_names, s.parameters);
      INFO(comp << " t^" << to_string(e) << ": engine " << ps.coeff(e).to_string() << ", oracle " << want.to_string());
      CHECK(ps.coeff(e) == want);
    }
  }
}

}  // namespace

TEST_CASE("resonance system at lambda = 1/9") {
  auto pairs = resonance_solve(Rat(1, 9));
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].c_tilde == AlgScalar(Rat(625, 128)));
  CHECK(pairs[0].b2 == AlgScalar(Rat(-1819, 663552)));
  CHECK(pairs[1].c_tilde == AlgScalar(Rat(-8125, 23936)));
  CHECK(pairs[1].b2 == AlgScalar(Rat(-8700683, 1364926464)));
  for (const auto& p : pairs) {
    auto eq = resonance_equations(Rat(1, 9), p.c_tilde, p.b2);
    CHECK(eq[0].is_zero());
    CHECK(eq[1].is_zero());
  }
}

TEST_CASE("C = -16/5 series match the independent oracle") {
  FieldPtr f = with_i(test::quartic_two());
  for (const char* br : {"real-plus", "real-i"}) {
    SeriesSolution s = generate_case2_series(Rat(1, 9), br, {}, 8);
    CHECK(s.parameters == std::vector<std::string>{"a2", "b4"});
    check_against_oracle(s, std::string("case2_") + br + ".txt", f, {"a2", "b4"});
  }
}

TEST_CASE("C = -9/8 Puiseux series match the independent oracle") {
  SeriesSolution s = generate_puiseux_series(Rat(1), 1, {}, 6);
  CHECK(s.q == 2);
  CHECK(s.parameters == std::vector<std::string>{"D1", "D2"});
  check_against_oracle(s, "puiseux_plus.txt", test::sqrt_field(14), {"D0", "D1", "D2"});
  // The r = 3/2 datum is forced to zero and reported.
  bool reported = false;
  for (const auto& n : s.notes) reported = reported || n.find("D0") != std::string::npos;
  CHECK(reported);
}

TEST_CASE("x -> -x maps the plus branch to the minus branch") {
  SeriesSolution p = generate_puiseux_series(Rat(1), 1, {}, 4);
  SeriesSolution m = generate_puiseux_series(Rat(1), -1, {}, 4);
  CHECK(agree(m.x, -p.x));
  CHECK(agree(m.y, p.y));
}

TEST_CASE("bindings substitute free parameters") {
  std::map<std::string, AlgScalar> b = {{"a2", AlgScalar(0)}, {"b4", AlgScalar(Rat(1, 2))}};
  SeriesSolution s = generate_case2_series(Rat(1, 9), "real-plus", b, 6);
  CHECK(s.parameters.empty());
  CHECK(s.y.coeff(Rat(4)) == ParamPoly(Rat(1, 2)));
  CHECK_THROWS_AS(generate_case2_series(Rat(1, 9), "real-plus", {{"zz", AlgScalar(1)}}, 4), ParameterError);
  CHECK_THROWS_AS(generate_case2_series(Rat(1, 9), "nope", {}, 4), PreconditionError);
}

TEST_CASE("determinant zeros coincide with resonances up to index 200") {
  struct Case {
    SystemParams p;
    CaseLabel label;
    const char* branch;
  };
  std::vector<Case> cases = {{{Rat(1), Rat(-1)}, CaseLabel::Case1, "case1-plus"},
                             {{Rat(1, 16), Rat(-16)}, CaseLabel::Case1, "case1-plus"},
                             {{Rat(1), Rat(-9, 8)}, CaseLabel::Case1, "case1-plus"},
                             {{Rat(1, 9), Rat(-16, 5)}, CaseLabel::Case2, "case2"}};
  for (const auto& c : cases) {
    auto bs = dominant_balances(c.p);
    const Balance* b = nullptr;
    for (const auto& x : bs)
      if (x.label == c.label) b = &x;
    REQUIRE(b);
    ResonanceReport r = resonances(*b, c.p);
    std::vector<Rat> pos = r.positive();
    std::optional<AlgScalar> c1;
    if (c.label == CaseLabel::Case2) c1 = AlgScalar(1);
    FamilySpec f = family_for(c.p, *b, c.branch, c1);
    for (int L = f.L0() + 1; L <= f.L0() + 200 * f.q; ++L) {
      bool singular = det(recursion_matrix(f, L)).is_zero();
      bool predicted = std::find(pos.begin(), pos.end(), f.resonance_of(L)) != pos.end();
      INFO("C = " << to_string(c.p.C) << ", L = " << L);
      CHECK(singular == predicted);
    }
  }
}

TEST_CASE("a generic c1 at C = -16/5 is obstructed at the resonance r = 4") {
  GenericResult g = generate_generic({Rat(1, 9), Rat(-16, 5)}, CaseLabel::Case2, "case2", 6);
  REQUIRE_FALSE(g.solution.has_value());
  REQUIRE(g.obstruction.has_value());
  CHECK(g.obstruction->resonance == Rat(4));
  CHECK(g.obstruction->condition.degree_in("c1") > 0);
}

TEST_CASE("integrable case (i) expands without obstruction") {
  GenericResult g = generate_generic({Rat(1), Rat(-1)}, CaseLabel::Case1, "case1-plus", 8);
  REQUIRE(g.solution.has_value());
  CHECK(g.solution->parameters.size() == 3);  // r = 2, 3, 6
}
