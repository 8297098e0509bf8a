#include <algorithm>

#include "support.hpp"

#include "hh/errors.hpp"

using namespace hh;

namespace {

const Balance& balance(const std::vector<Balance>& bs, CaseLabel l) {
  auto it = std::find_if(bs.begin(), bs.end(), [&](const Balance& b) { return b.label == l; });
  REQUIRE(it != bs.end());
  return *it;
}

std::vector<Rat> sorted_values(const ResonanceReport& r) {
  std::vector<Rat> v;
  for (const auto& q : r.values) {
    REQUIRE(q.value().has_value());
    v.push_back(*q.value());
  }
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("integrable case (i): lambda = 1, C = -1") {
  SystemParams p{Rat(1), Rat(-1)};
  auto bs = dominant_balances(p);
  const Balance& b = balance(bs, CaseLabel::Case1);
  CHECK(b.alpha == QuadIrr::rational(-2));
  CHECK(sorted_values(resonances(b, p)) == std::vector<Rat>{-1, 2, 3, 6});
  Classification c = classify(p);
  CHECK(c.kind == ClassKind::IntegrableCandidate);
  CHECK(c.integrable_case == "i");
}

TEST_CASE("integrable case (ii): C = -6 for several lambda") {
  for (Rat lambda : {Rat(1, 5), Rat(1), Rat(-3, 7), Rat(16)}) {
    SystemParams p{lambda, Rat(-6)};
    auto bs = dominant_balances(p);
    CHECK(sorted_values(resonances(balance(bs, CaseLabel::Case1), p)) == std::vector<Rat>{-3, -1, 6, 8});
    Classification c = classify(p);
    CHECK(c.kind == ClassKind::IntegrableCandidate);
    CHECK(c.integrable_case == "ii");
  }
}

TEST_CASE("integrable case (iii): lambda = 1/16, C = -16") {
  SystemParams p{Rat(1, 16), Rat(-16)};
  auto bs = dominant_balances(p);
  CHECK(sorted_values(resonances(balance(bs, CaseLabel::Case1), p)) == std::vector<Rat>{-7, -1, 6, 12});
  Classification c = classify(p);
  CHECK(c.kind == ClassKind::IntegrableCandidate);
  CHECK(c.integrable_case == "iii");
}

TEST_CASE("C = -16/5: the x-dominated balance has alpha = -3/2 and r = -1, 0, 4, 6") {
  SystemParams p{Rat(1, 9), Rat(-16, 5)};
  auto bs = dominant_balances(p);
  const Balance& b = balance(bs, CaseLabel::Case2);
  CHECK(b.alpha == QuadIrr::rational(Rat(-3, 2)));
  CHECK(b.a_arbitrary);
  CHECK(b.b == Rat(-15, 8));
  ResonanceReport r = resonances(b, p);
  CHECK(sorted_values(r) == std::vector<Rat>{-1, 0, 4, 6});
  CHECK(grid_denominator(b, r) == 1);
  // The y-dominated balance has irrational resonances 5/2 ± √1345/10.
  ResonanceReport r1 = resonances(balance(bs, CaseLabel::Case1), p);
  CHECK_FALSE(r1.all_rational());
  Classification c = classify(p);
  CHECK(c.kind == ClassKind::NonintegrableRationalCase2);
}

TEST_CASE("C = -9/8 needs a half-integer grid") {
  SystemParams p{Rat(1), Rat(-9, 8)};
  auto bs = dominant_balances(p);
  const Balance& b = balance(bs, CaseLabel::Case1);
  ResonanceReport r = resonances(b, p);
  CHECK(sorted_values(r) == std::vector<Rat>{-1, Rat(3, 2), Rat(7, 2), 6});
  CHECK(grid_denominator(b, r) == 2);
  CHECK(b.a_values.front() == QuadIrr::make(0, Rat(3, 4), 14));
  CHECK(classify(p).puiseux_eligible);
}

TEST_CASE("property: r = -1 and r = 6 are resonances of the y-dominated balance") {
  for (Rat C : {Rat(-1, 2), Rat(-2), Rat(-5), Rat(-7, 3), Rat(3), Rat(-16)}) {
    SystemParams p{Rat(2, 3), C};
    auto bs = dominant_balances(p);
    const Balance& b = balance(bs, CaseLabel::Case1);
    if (b.logarithmic) continue;
    ResonanceReport r = resonances(b, p);
    bool minus_one = false, six = false;
    for (const auto& v : r.values) {
      minus_one = minus_one || v == QuadIrr::rational(-1);
      six = six || v == QuadIrr::rational(6);
    }
    CHECK(minus_one);
    CHECK(six);
  }
}

TEST_CASE("C = 0 is rejected") { CHECK_THROWS_AS(check_params({Rat(1), Rat(0)}), PreconditionError); }
