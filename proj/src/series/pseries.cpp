#include "hh/pseries.hpp"

#include <algorithm>

#include "hh/alg_root.hpp"
#include "hh/errors.hpp"

namespace hh {

namespace {

bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Number of grid slots base + k/q below `order`.
size_t slots(const Rat& base, int q, const Rat& order) {
  if (order <= base) return 0;
  Rat span = (order - base) * q;
  BigInt n;
  mpz_cdiv_q(n.get_mpz_t(), span.get_num_mpz_t(), span.get_den_mpz_t());
  return n.get_ui();
}

void check_half(const Rat& r, const char* what) {
  if (!is_integer(r * 2)) throw PreconditionError(std::string(what) + " must lie on the half-integer grid");
}

}  // namespace

PSeries::PSeries(Rat base, int q, std::vector<ParamPoly> coeffs, Rat order)
    : base_(std::move(base)), q_(q), coeffs_(std::move(coeffs)), order_(std::move(order)) {
  normalize();
}

void PSeries::normalize() {
  if (q_ != 1 && q_ != 2) throw PreconditionError("grid denominator must be 1 or 2");
  size_t n = slots(base_, q_, order_);
  if (coeffs_.size() > n) coeffs_.resize(n);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    base_ = order_;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    base_ += rat(static_cast<long>(lead), q_);
  }
  check_half(base_, "series exponents");
}

PSeries PSeries::zero(const Rat& order, int q) { return PSeries(order, q, {}, order); }

PSeries PSeries::monomial(const ParamPoly& c, const Rat& e, const Rat& order, int q) {
  return PSeries(e, q, {c}, order);
}

ParamPoly PSeries::coeff(const Rat& e) const {
  if (is_zero() || e < base_) return ParamPoly();
  Rat k = (e - base_) * q_;
  if (!is_integer(k)) return ParamPoly();
  unsigned long idx = k.get_num().get_ui();
  if (idx >= coeffs_.size()) return ParamPoly();
  return coeffs_[idx];
}

const ParamPoly& PSeries::leading() const {
  if (is_zero()) throw PreconditionError("zero series has no leading coefficient");
  return coeffs_.front();
}

PSeries PSeries::refined(int q) const {
  if (q == q_ || is_zero()) {
    PSeries r(*this);
    r.q_ = std::max(q, q_);
    return r;
  }
  if (q != 2 || q_ != 1) throw PreconditionError("grid can only be refined from 1 to 2");
  std::vector<ParamPoly> c(coeffs_.size() * 2);
  for (size_t k = 0; k < coeffs_.size(); ++k) c[2 * k] = coeffs_[k];
  PSeries r(base_, 2, std::move(c), order_);
  r.t0_ = t0_;
  return r;
}

PSeries PSeries::truncated(const Rat& order) const {
  PSeries r(base_, q_, coeffs_, std::min(order, order_));
  r.t0_ = t0_;
  return r;
}

PSeries PSeries::map_coeffs(const std::function<ParamPoly(const ParamPoly&)>& f) const {
  std::vector<ParamPoly> c;
  c.reserve(coeffs_.size());
  for (const auto& v : coeffs_) c.push_back(f(v));
  PSeries r(base_, q_, std::move(c), order_);
  r.t0_ = t0_;
  return r;
}

PSeries PSeries::bind(const std::map<std::string, AlgScalar>& values) const {
  return map_coeffs([&](const ParamPoly& p) { return p.bind(values); });
}

PSeries PSeries::operator-() const {
  return map_coeffs([](const ParamPoly& p) { return -p; });
}

PSeries operator+(const PSeries& a, const PSeries& b) {
  Rat order = std::min(a.order_, b.order_);
  int q = std::max(a.q_, b.q_);
  if (a.is_zero() && b.is_zero()) return PSeries::zero(order, q);
  if (!a.is_zero() && !b.is_zero() && q == 1 && !is_integer(a.base_ - b.base_)) q = 2;
  Rat base = a.is_zero() ? b.base_ : b.is_zero() ? a.base_ : std::min(a.base_, b.base_);
  if (base >= order) return PSeries::zero(order, q);
  std::vector<ParamPoly> c(slots(base, q, order));
  for (const PSeries* s : {&a, &b}) {
    for (size_t k = 0; k < s->coeffs_.size(); ++k) {
      Rat e = s->exponent(k);
      if (e >= order) break;
      Rat idx = (e - base) * q;
      c[idx.get_num().get_ui()] += s->coeffs_[k];
    }
  }
  PSeries r(base, q, std::move(c), order);
  r.t0_ = a.t0_ ? a.t0_ : b.t0_;
  return r;
}

PSeries operator-(const PSeries& a, const PSeries& b) { return a + (-b); }

PSeries operator*(const PSeries& a_in, const PSeries& b_in) {
  Rat order = std::min(a_in.order_ + b_in.base_, b_in.order_ + a_in.base_);
  int q = std::max(a_in.q_, b_in.q_);
  if (a_in.is_zero() || b_in.is_zero()) return PSeries::zero(order, q);
  PSeries a = a_in.refined(q), b = b_in.refined(q);
  Rat base = a.base_ + b.base_;
  size_t n = slots(base, q, order);
  std::vector<ParamPoly> c(n);
  for (size_t i = 0; i < a.coeffs_.size() && i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size() && i + j < n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  PSeries r(base, q, std::move(c), order);
  r.t0_ = a.t0_ ? a.t0_ : b.t0_;
  return r;
}

PSeries operator*(const PSeries& a, const ParamPoly& c) {
  return a.map_coeffs([&](const ParamPoly& p) { return p * c; });
}

bool agree(const PSeries& a, const PSeries& b) {
  Rat order = std::min(a.order_, b.order_);
  Rat start = std::min(a.base_, b.base_);
  for (Rat e = start; e < order; e += Rat(1, 2))
    if (a.coeff(e) != b.coeff(e)) return false;
  return true;
}

std::vector<Rat> PSeries::support() const {
  std::vector<Rat> out;
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) out.push_back(exponent(k));
  return out;
}

std::string PSeries::to_string() const {
  std::string out;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].to_string() + ")*t^(" + hh::to_string(exponent(k)) + ")";
  }
  if (out.empty()) out = "0";
  return out + " + O(t^(" + hh::to_string(order_) + "))";
}

PSeries ps_add(const PSeries& a, const PSeries& b) { return a + b; }
PSeries ps_mul(const PSeries& a, const PSeries& b) { return a * b; }
PSeries ps_scale(const PSeries& a, const ParamPoly& c) { return a * c; }

PSeries ps_diff(const PSeries& a, int n) {
  if (n < 0) throw PreconditionError("negative derivative order");
  if (a.is_zero()) return PSeries::zero(a.order() - n, a.q());
  std::vector<ParamPoly> c;
  c.reserve(a.coeffs().size());
  for (size_t k = 0; k < a.coeffs().size(); ++k) {
    Rat e = a.exponent(k);
    Rat f = 1;
    for (int j = 0; j < n; ++j) f *= e - j;
    c.push_back(a.coeffs()[k] * AlgScalar(f));
  }
  PSeries r(a.base() - n, a.q(), std::move(c), a.order() - n);
  r.set_t0(a.t0());
  return r;
}

PSeries ps_inv(const PSeries& a) {
  if (a.is_zero()) throw ArithmeticError("inverse of the zero series");
  auto lead = a.leading().as_constant();
  if (!lead) throw ParameterError("leading coefficient of an inverted series must be parameter-free");
  const Rat v = a.base();
  const Rat rho = a.order() - v;
  const int q = a.q();
  const size_t n = slots(Rat(0), q, rho);
  AlgScalar linv = lead->inverse();
  std::vector<ParamPoly> b(n);
  if (n > 0) b[0] = ParamPoly(linv);
  for (size_t k = 1; k < n; ++k) {
    ParamPoly acc;
    for (size_t j = 1; j <= k && j < a.coeffs().size(); ++j) acc += a.coeffs()[j] * b[k - j];
    b[k] = -(acc * linv);
  }
  PSeries r(-v, q, std::move(b), -v + rho);
  r.set_t0(a.t0());
  return r;
}

PSeries ps_sqrt(const PSeries& a, std::optional<CBig> branch) {
  if (a.is_zero()) throw ArithmeticError("square root of the zero series");
  auto lead = a.leading().as_constant();
  if (!lead) throw ParameterError("leading coefficient of a square-rooted series must be parameter-free");
  const Rat v = a.base();
  const Rat half = v / 2;
  check_half(half, "square-root leading exponent");
  // Common field of every coefficient, so the root's field can absorb them.
  FieldPtr f = lead->field();
  for (const auto& c : a.coeffs())
    for (const auto& [e, s] : c.terms()) f = common_field(f, s.field());
  RootResult rr = alg_root(lead->lifted(f), 2, branch);
  auto move_in = [&](const ParamPoly& p) {
    return p.map_coeffs([&](const AlgScalar& s) { return map_to_field(s.lifted(f), rr); });
  };
  std::vector<ParamPoly> ac;
  for (const auto& c : a.coeffs()) ac.push_back(move_in(c));

  const Rat rho = a.order() - v;
  const int q = a.q();
  const size_t n = slots(Rat(0), q, rho);
  AlgScalar inv2r = (rr.root * AlgScalar(2)).inverse();
  std::vector<ParamPoly> s(n);
  if (n > 0) s[0] = ParamPoly(rr.root);
  for (size_t k = 1; k < n; ++k) {
    ParamPoly acc = k < ac.size() ? ac[k] : ParamPoly();
    for (size_t j = 1; j < k; ++j) acc -= s[j] * s[k - j];
    s[k] = acc * inv2r;
  }
  PSeries r(half, q, std::move(s), half + rho);
  r.set_t0(a.t0());
  return r;
}

PSeries ps_compose_halfpower(const PSeries& y, const Rat& exponent, std::optional<CBig> branch) {
  Rat twice = exponent * 2;
  if (!is_integer(twice) || twice <= 0) throw PreconditionError("half-power exponent must be a positive half-integer");
  PSeries rho = ps_sqrt(y, branch);
  long m = twice.get_num().get_si();
  PSeries out = rho;
  for (long k = 1; k < m; ++k) out = out * rho;
  return out;
}

SeriesValue ps_eval(const PSeries& a, const CBig& tau, const std::map<std::string, CBig>& bindings,
                    mpfr_prec_t prec) {
  if (tau.is_zero()) throw PreconditionError("evaluation at the singular point");
  const mpfr_prec_t wp = prec + 32;
  CBig t = tau.with_prec(wp);
  CBig root = sqrt(t);
  CBig sum(wp);
  Real last(0, wp), prev(0, wp);
  for (size_t k = 0; k < a.coeffs().size(); ++k) {
    if (a.coeffs()[k].is_zero()) continue;
    Rat e2 = a.exponent(k) * 2;
    CBig term = a.coeffs()[k].evaluate(bindings, wp) * pow(root, e2.get_num().get_si());
    sum += term;
    prev = last;
    last = abs(term);
  }
  Real tail = last > prev ? last : prev;
  return {sum.with_prec(prec), tail.with_prec(prec)};
}

}  // namespace hh
