#include "hh/alg_scalar.hpp"

#include "hh/errors.hpp"

namespace hh {

AlgScalar::AlgScalar() : field_(NumberField::rationals()), coords_{QI(0)} {}

AlgScalar::AlgScalar(const Rat& q) : field_(NumberField::rationals()), coords_{QI(q)} {}

AlgScalar::AlgScalar(long q) : field_(NumberField::rationals()), coords_{QI(q)} {}

AlgScalar::AlgScalar(const QI& z)
    : field_(z.is_real() ? NumberField::rationals() : NumberField::gaussian()), coords_{z} {}

AlgScalar::AlgScalar(FieldPtr field, std::vector<QI> coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_->has_i())
    for (const auto& c : coords_)
      if (!c.is_real()) throw FieldError("imaginary coordinate in a field without i");
  reduce();
}

AlgScalar AlgScalar::generator(const FieldPtr& field) {
  if (field->is_base()) return AlgScalar(field, {-field->minpoly()[0]});
  std::vector<QI> c(static_cast<size_t>(field->degree()));
  c[1] = QI(1);
  return AlgScalar(field, std::move(c));
}

void AlgScalar::reduce() {
  const QIPoly& m = field_->minpoly();
  const size_t d = static_cast<size_t>(field_->degree());
  if (d == 1) {
    // Base field: θ is the rational root, fold everything onto it.
    QI root = -m[0];
    QI acc;
    for (size_t k = coords_.size(); k-- > 0;) acc = acc * root + coords_[k];
    coords_.assign(1, acc);
    return;
  }
  for (size_t k = coords_.size(); k-- > d;) {
    if (coords_[k].is_zero()) continue;
    QI c = coords_[k];
    for (size_t j = 0; j < d; ++j)
      if (!m[j].is_zero()) coords_[k - d + j] -= c * m[j];
    coords_[k] = QI(0);
  }
  coords_.resize(d);
}

bool AlgScalar::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool AlgScalar::is_one() const {
  if (!(coords_[0] == QI(1))) return false;
  for (size_t k = 1; k < coords_.size(); ++k)
    if (!coords_[k].is_zero()) return false;
  return true;
}

std::optional<QI> AlgScalar::as_qi() const {
  for (size_t k = 1; k < coords_.size(); ++k)
    if (!coords_[k].is_zero()) return std::nullopt;
  return coords_[0];
}

std::optional<Rat> AlgScalar::as_rat() const {
  auto z = as_qi();
  if (!z || !z->is_real()) return std::nullopt;
  return z->re;
}

AlgScalar AlgScalar::lifted(const FieldPtr& target) const {
  if (target == field_) return *this;
  if (field_->is_base()) {
    if (field_->has_i() && !target->has_i() && !coords_[0].is_real())
      throw FieldError("cannot place a non-real Gaussian rational in " + target->describe());
    std::vector<QI> c(static_cast<size_t>(target->degree()));
    c[0] = coords_[0];
    if (target->is_base()) return AlgScalar(target, std::vector<QI>{coords_[0]});
    return AlgScalar(target, std::move(c));
  }
  if (common_field(field_, target) != target)
    throw FieldError("cannot lift from " + field_->describe() + " to " + target->describe());
  return AlgScalar(target, coords_);
}

AlgScalar AlgScalar::operator-() const {
  AlgScalar r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

namespace {

void unify(AlgScalar& a, const AlgScalar& b, AlgScalar& b_out) {
  if (a.field() == b.field()) {
    b_out = b;
    return;
  }
  FieldPtr f = common_field(a.field(), b.field());
  a = a.lifted(f);
  b_out = b.lifted(f);
}

}  // namespace

AlgScalar& AlgScalar::operator+=(const AlgScalar& b) {
  if (b.is_zero()) return *this;
  AlgScalar bb;
  unify(*this, b, bb);
  for (size_t k = 0; k < coords_.size(); ++k) coords_[k] += bb.coords_[k];
  return *this;
}

AlgScalar& AlgScalar::operator-=(const AlgScalar& b) {
  if (b.is_zero()) return *this;
  AlgScalar bb;
  unify(*this, b, bb);
  for (size_t k = 0; k < coords_.size(); ++k) coords_[k] -= bb.coords_[k];
  return *this;
}

AlgScalar& AlgScalar::operator*=(const AlgScalar& b) {
  AlgScalar bb;
  unify(*this, b, bb);
  const size_t d = coords_.size();
  if (d == 1) {
    coords_[0] *= bb.coords_[0];
    return *this;
  }
  std::vector<QI> prod(2 * d - 1);
  for (size_t i = 0; i < d; ++i) {
    if (coords_[i].is_zero()) continue;
    for (size_t j = 0; j < d; ++j)
      if (!bb.coords_[j].is_zero()) prod[i + j] += coords_[i] * bb.coords_[j];
  }
  coords_ = std::move(prod);
  reduce();
  return *this;
}

AlgScalar AlgScalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in " + field_->describe());
  if (coords_.size() == 1) return AlgScalar(field_, {QI(1) / coords_[0]});
  // Extended Euclid: s*a + t*m = g with g a nonzero constant.
  QIPoly r0 = field_->minpoly(), r1 = coords_;
  trim(r1);
  QIPoly s0, s1{QI(1)};
  while (degree(r1) > 0) {
    auto [q, r] = poly_divmod(r0, r1);
    QIPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw ArithmeticError("element shares a factor with the minimal polynomial");
  QIPoly inv = poly_scale(s1, QI(1) / r1[0]);
  inv.resize(coords_.size());
  return AlgScalar(field_, std::move(inv));
}

AlgScalar& AlgScalar::operator/=(const AlgScalar& b) { return *this *= b.inverse(); }

bool operator==(const AlgScalar& a, const AlgScalar& b) {
  if (a.field_ == b.field_) return a.coords_ == b.coords_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  FieldPtr f;
  try {
    f = common_field(a.field_, b.field_);
  } catch (const FieldError&) {
    return false;
  }
  return a.lifted(f).coords_ == b.lifted(f).coords_;
}

AlgScalar AlgScalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  AlgScalar result = AlgScalar(1).lifted(field_);
  AlgScalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

AlgScalar pow(const AlgScalar& a, long n) { return a.pow(n); }

CBall AlgScalar::enclose(mpfr_prec_t prec) const {
  bool rational = true;
  for (size_t k = 1; k < coords_.size(); ++k) rational = rational && coords_[k].is_zero();
  if (rational) return CBall::exact_qi(coords_.empty() ? QI() : coords_[0], prec);
  CBall theta = field_->generator(prec);
  CBall acc(prec + 32);
  for (size_t k = coords_.size(); k-- > 0;) acc = acc * theta + CBall::exact_qi(coords_[k], prec + 32);
  return acc;
}

CBig AlgScalar::embed(mpfr_prec_t prec) const {
  if (is_zero()) return CBig(prec);
  for (mpfr_prec_t wp = prec + 16;; wp *= 2) {
    CBall b = enclose(wp);
    Real lim = up_mul(b.mag_lower(), Real::pow2(-static_cast<long>(prec)));
    if (b.rad() <= lim) return b.mid().with_prec(prec);
    if (wp > 64 * prec + 100000) throw ArithmeticError("embedding failed to converge");
  }
}

std::string AlgScalar::to_string() const {
  if (coords_.size() == 1) return hh::to_string(coords_[0]);
  std::string out;
  for (size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = hh::to_string(coords_[k]);
    bool compound = !coords_[k].is_real() && sgn(coords_[k].re) != 0;
    if (compound) c = "(" + c + ")";
    if (k == 0) {
      out += c;
    } else {
      out += c + "*th";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace hh
