#include <cstdio>
#include <filesystem>

#include "support.hpp"

#include "hh/errors.hpp"
#include "hh/json_io.hpp"

using namespace hh;

namespace {

template <class T, class F>
void check_round_trip(const T& value, F parse) {
  std::string first = dump(to_json(value));
  std::string second = dump(to_json(parse(parse_json(first))));
  CHECK(first == second);
}

}  // namespace

TEST_CASE("scalars serialise as exact strings") {
  CHECK(to_json(Rat(-15, 8)) == "-15/8");
  CHECK(rat_from_json(Json("3/4")) == Rat(3, 4));
  CHECK_THROWS_AS(rat_from_json(Json(0.75)), PreconditionError);
  Real r = Real::from_rat(Rat(1, 3), 64);
  CHECK(real_from_json(real_to_json(r)).to_rat() == r.to_rat());
}

TEST_CASE("fields are rebuilt to the interned pointer") {
  FieldPtr f = with_i(test::quartic_two());
  CHECK(field_from_json(field_to_json(f)) == f);
  CHECK(field_from_json(Json("Q")) == NumberField::rationals());
  CHECK(field_from_json(Json("Q(i)")) == NumberField::gaussian());
}

TEST_CASE("property: round trips are byte-identical") {
  for (const char* br : {"real-plus", "real-i", "c2-plus"})
    check_round_trip(generate_case2_series(Rat(1, 9), br, {}, 6), solution_from_json);
  check_round_trip(generate_puiseux_series(Rat(1), -1, {}, 6), solution_from_json);
  check_round_trip(closed_form_series(ClosedForm::Plus, 8), solution_from_json);

  SeriesSolution fam = generate_case2_series(Rat(1, 9), "real-plus", {}, 12);
  check_round_trip(match_parameters(fam, closed_form_series(ClosedForm::Minus, 12)), match_from_json);

  ConvergenceOptions o;
  o.horizon = 20;
  check_round_trip(convergence_certificate(fam, o), cert_from_json);

  auto pairs = resonance_solve(Rat(1, 9));
  std::string a = dump(to_json(pairs, Rat(1, 9)));
  CHECK(a == dump(to_json(resonance_pairs_from_json(parse_json(a)), Rat(1, 9))));

  Report r;
  r.kind = "verification";
  r.subject = "x";
  r.checks.push_back({"residual", false, "detail", "t^3"});
  r.data = {{"z", 1}, {"a", "b"}};
  check_round_trip(r, report_from_json);
}

TEST_CASE("parsed solutions keep their algebra") {
  SeriesSolution s = generate_case2_series(Rat(1, 9), "real-plus", {}, 8);
  SeriesSolution t = solution_from_json(parse_json(dump(to_json(s))));
  CHECK(agree(s.x, t.x));
  CHECK(agree(s.y, t.y));
  CHECK(check_system(t).ok);
  CHECK(t.registry.size() == s.registry.size());
}

TEST_CASE("schema and kind are enforced") {
  Json j = to_json(generate_case2_series(Rat(1, 9), "real-plus", {}, 2));
  j["schema_version"] = 99;
  CHECK_THROWS_AS(solution_from_json(j), PreconditionError);
  CHECK_THROWS_AS(cert_from_json(to_json(generate_case2_series(Rat(1, 9), "real-plus", {}, 2))), PreconditionError);
  CHECK_THROWS_AS(parse_json("{not json"), PreconditionError);
}

TEST_CASE("keys are emitted in sorted order") {
  std::string text = dump(Json{{"zeta", 1}, {"alpha", 2}});
  CHECK(text.find("alpha") < text.find("zeta"));
  CHECK(text.back() == '\n');
}

TEST_CASE("atomic writes replace the file and leave no temporaries") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "hh_io_test";
  fs::create_directories(dir);
  std::string path = (dir / "out.json").string();
  write_file_atomic(path, "one\n");
  write_file_atomic(path, "two\n");
  CHECK(read_file(path) == "two\n");
  int n = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++n;
  CHECK(n == 1);
  fs::remove_all(dir);
  CHECK_THROWS_AS(read_file((dir / "missing").string()), PreconditionError);
}
