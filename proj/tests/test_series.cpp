#include <random>

#include "support.hpp"

#include "hh/errors.hpp"

using namespace hh;

namespace {

PSeries series_of(std::vector<long> c, const Rat& base, int q, const Rat& order) {
  std::vector<ParamPoly> p;
  for (long v : c) p.emplace_back(v);
  return PSeries(base, q, p, order);
}

}  // namespace

TEST_CASE("zero series and normalisation") {
  PSeries z = PSeries::zero(Rat(5));
  CHECK(z.is_zero());
  CHECK(z.valuation() == Rat(5));
  PSeries s = series_of({0, 0, 3, 4}, Rat(-2), 1, Rat(2));
  CHECK(s.valuation() == Rat(0));
  CHECK(s.leading() == ParamPoly(3));
}

TEST_CASE("products and inverses through the guaranteed order") {
  PSeries one_minus = series_of({1, -1}, Rat(0), 1, Rat(12));
  PSeries geo = ps_inv(one_minus);
  for (int k = 0; k < 12; ++k) CHECK(geo.coeff(Rat(k)) == ParamPoly(1));
  PSeries prod = geo * one_minus;
  CHECK(prod.coeff(Rat(0)) == ParamPoly(1));
  for (int k = 1; k < 12; ++k) CHECK(prod.coeff(Rat(k)).is_zero());
  CHECK(prod.order() == Rat(12));
}

TEST_CASE("Laurent orders propagate through multiplication") {
  // (τ^-2 + O(τ^3)) (τ^-2 + O(τ^3)) is known below τ^1.
  PSeries a = series_of({1}, Rat(-2), 1, Rat(3));
  PSeries p = a * a;
  CHECK(p.order() == Rat(1));
  CHECK(p.coeff(Rat(-4)) == ParamPoly(1));
}

TEST_CASE("derivatives and square roots") {
  PSeries a = series_of({1, 2, 3}, Rat(-2), 1, Rat(6));
  PSeries d = ps_diff(a);
  CHECK(d.coeff(Rat(-3)) == ParamPoly(-2));
  CHECK(d.coeff(Rat(-2)) == ParamPoly(-2));
  CHECK(d.coeff(Rat(-1)).is_zero());
  PSeries sq = series_of({1, 2, 1}, Rat(0), 1, Rat(10));
  PSeries r = ps_sqrt(sq);
  CHECK(r.coeff(Rat(0)) == ParamPoly(1));
  CHECK(r.coeff(Rat(1)) == ParamPoly(1));
  for (int k = 2; k < 10; ++k) CHECK(r.coeff(Rat(k)).is_zero());
  // Half-integer grid: √(τ^-3) = τ^(-3/2).
  PSeries h = ps_sqrt(series_of({4}, Rat(-3), 1, Rat(4)));
  CHECK(h.valuation() == Rat(-3, 2));
  CHECK(h.coeff(Rat(-3, 2)) == ParamPoly(2));
}

TEST_CASE("leading coefficients with parameters cannot be inverted") {
  std::vector<std::string> n = {"a"};
  PSeries s(Rat(0), 1, {ParamPoly::variable(n, "a")}, Rat(3));
  CHECK_THROWS(ps_inv(s));
}

TEST_CASE("evaluation: zero series and geometric series") {
  std::map<std::string, CBig> none;
  SeriesValue z = ps_eval(PSeries::zero(Rat(10)), CBig::from_rat(Rat(1, 2), 128), none, 128);
  CHECK(z.value.is_zero());
  std::vector<long> ones(60, 1);
  SeriesValue g = ps_eval(series_of(ones, Rat(0), 1, Rat(60)), CBig::from_rat(Rat(1, 2), 128), none, 128);
  CHECK(std::abs(g.value.to_complex().real() - 2.0) < 1e-15);
  CHECK(g.tail_estimate.to_double() < 1e-16);
}

TEST_CASE("property: ring identities on random truncated series") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-5, 5);
  auto rnd = [&](int base) {
    std::vector<long> c(8);
    for (auto& v : c) v = d(rng);
    c[0] = 1 + (d(rng) + 5);
    return series_of(c, Rat(base), 2, Rat(base) + 4);
  };
  for (int it = 0; it < 20; ++it) {
    PSeries a = rnd(-1), b = rnd(0), c = rnd(1);
    CHECK(agree((a * b) * c, a * (b * c)));
    CHECK(agree(a * (b + c), a * b + a * c));
    CHECK(agree(ps_diff(a * b), ps_diff(a) * b + a * ps_diff(b)));
    CHECK(agree(ps_inv(a) * a, PSeries::monomial(ParamPoly(1), Rat(0), Rat(3), 2)));
  }
}
