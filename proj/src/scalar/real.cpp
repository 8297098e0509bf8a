#include "hh/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "hh/errors.hpp"

namespace hh {

namespace {

mpfr_prec_t clamp_prec(mpfr_prec_t p) { return std::max<mpfr_prec_t>(p, MPFR_PREC_MIN); }

}  // namespace

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, clamp_prec(prec));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t prec) {
  mpfr_init2(value_, clamp_prec(prec));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.prec());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, other.prec());
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.prec());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_rat(const Rat& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_q(r.value_, q.get_mpq_t(), rnd);
  return r;
}

Real Real::from_double(double v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.value_, v, MPFR_RNDN);
  return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
  Real r(1, prec);
  mpfr_mul_2si(r.value_, r.value_, e, MPFR_RNDN);
  return r;
}

Real Real::with_prec(mpfr_prec_t prec, mpfr_rnd_t rnd) const {
  Real r(prec);
  mpfr_set(r.value_, value_, rnd);
  return r;
}

Rat Real::to_rat() const {
  if (!mpfr_number_p(value_)) throw ArithmeticError("non-finite value has no rational form");
  Rat q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

std::string Real::to_string(int digits) const {
  if (mpfr_zero_p(value_)) return "0";
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  const std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
  int n = mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), value_);
  if (n >= static_cast<int>(buf.size())) {
    buf.resize(static_cast<size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), value_);
  }
  return std::string(buf.data());
}

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero");
  Real r(std::max(a.prec(), b.prec()));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.prec());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.prec());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

// Radii live at 64 bits; every operation rounds toward +inf.

Real up_add(const Real& a, const Real& b) {
  Real r(64);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real up_mul(const Real& a, const Real& b) {
  Real r(64);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real up_div(const Real& a, const Real& b) {
  if (b.sign() <= 0) throw ArithmeticError("upper bound division by non-positive value");
  Real r(64);
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real up_from_rat(const Rat& q) { return Real::from_rat(q, 64, MPFR_RNDU); }

Real down_sub(const Real& a, const Real& b) {
  Real r(64);
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDD);
  return r;
}

CBig::CBig(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

CBig CBig::from_qi(const QI& z, mpfr_prec_t prec) {
  return CBig(Real::from_rat(z.re, prec), Real::from_rat(z.im, prec));
}

CBig CBig::from_complex(std::complex<double> z, mpfr_prec_t prec) {
  return CBig(Real::from_double(z.real(), prec), Real::from_double(z.imag(), prec));
}

CBig CBig::with_prec(mpfr_prec_t prec) const { return CBig(re_.with_prec(prec), im_.with_prec(prec)); }

std::string CBig::to_string(int digits) const {
  std::string s = re_.to_string(digits);
  std::string t = im_.to_string(digits);
  if (t.empty() || t[0] != '-') t = "+" + t;
  return s + t + "i";
}

CBig operator+(const CBig& a, const CBig& b) { return CBig(a.re_ + b.re_, a.im_ + b.im_); }
CBig operator-(const CBig& a, const CBig& b) { return CBig(a.re_ - b.re_, a.im_ - b.im_); }

CBig operator*(const CBig& a, const CBig& b) {
  return CBig(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

CBig operator/(const CBig& a, const CBig& b) {
  if (b.is_zero()) throw ArithmeticError("complex division by zero");
  Real d = b.re_ * b.re_ + b.im_ * b.im_;
  return CBig((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
}

Real abs(const CBig& z) {
  Real r(z.prec());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  return r;
}

CBig sqrt(const CBig& z) {
  mpfr_prec_t p = z.prec();
  if (z.is_zero()) return CBig(p);
  Real r = abs(z);
  Real two(2, p);
  if (z.re().sign() >= 0) {
    Real u = sqrt((r + z.re()) / two);
    return CBig(u, z.im() / (two * u));
  }
  Real v = sqrt((r - z.re()) / two);
  if (z.im().sign() < 0) v = -v;
  return CBig(z.im() / (two * v), v);
}

CBig pow(const CBig& z, long n) {
  mpfr_prec_t p = z.prec();
  if (n < 0) return CBig::from_rat(1, p) / pow(z, -n);
  CBig result = CBig::from_rat(1, p);
  CBig base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

CBig sin(const CBig& z) {
  // sin(a+bi) = sin a cosh b + i cos a sinh b
  mpfr_prec_t p = z.prec();
  Real s(p), c(p), sh(p), ch(p);
  mpfr_sin_cos(s.get(), c.get(), z.re().get(), MPFR_RNDN);
  mpfr_sinh_cosh(sh.get(), ch.get(), z.im().get(), MPFR_RNDN);
  return CBig(s * ch, c * sh);
}

CBig cos(const CBig& z) {
  // cos(a+bi) = cos a cosh b - i sin a sinh b
  mpfr_prec_t p = z.prec();
  Real s(p), c(p), sh(p), ch(p);
  mpfr_sin_cos(s.get(), c.get(), z.re().get(), MPFR_RNDN);
  mpfr_sinh_cosh(sh.get(), ch.get(), z.im().get(), MPFR_RNDN);
  return CBig(c * ch, -(s * sh));
}

CBig principal_root(const CBig& z, unsigned n) {
  mpfr_prec_t p = z.prec();
  if (n == 0) throw PreconditionError("zeroth root");
  if (z.is_zero()) return CBig(p);
  Real r = abs(z);
  Real arg(p);
  mpfr_atan2(arg.get(), z.im().get(), z.re().get(), MPFR_RNDN);
  Real rn(p);
  mpfr_rootn_ui(rn.get(), r.get(), n, MPFR_RNDN);
  Real a = arg / Real(static_cast<long>(n), p);
  Real s(p), c(p);
  mpfr_sin_cos(s.get(), c.get(), a.get(), MPFR_RNDN);
  return CBig(rn * c, rn * s);
}

namespace {

// Upper bound of |re| + |im| at 64 bits.
Real l1_up(const CBig& z) {
  Real a(64), b(64);
  mpfr_abs(a.get(), z.re().get(), MPFR_RNDU);
  mpfr_abs(b.get(), z.im().get(), MPFR_RNDU);
  return up_add(a, b);
}

Real hypot_up(const CBig& z) {
  Real r(64);
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDU);
  return r;
}

Real hypot_down(const CBig& z) {
  Real r(64);
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDD);
  return r;
}

// Rounding slack 2^(k - prec) * m for a computed midpoint.
Real slack(const Real& m, mpfr_prec_t prec, long k) {
  Real r = m.with_prec(64, MPFR_RNDU);
  mpfr_mul_2si(r.get(), r.get(), k - static_cast<long>(prec), MPFR_RNDU);
  return r;
}

}  // namespace

CBall CBall::exact_qi(const QI& z, mpfr_prec_t prec) {
  CBig mid(prec);
  int tr = mpfr_set_q(mid.re().get(), z.re.get_mpq_t(), MPFR_RNDN);
  int ti = mpfr_set_q(mid.im().get(), z.im.get_mpq_t(), MPFR_RNDN);
  Real err = (tr == 0 && ti == 0) ? Real(0, 64) : slack(l1_up(mid), prec, 1);
  return CBall(std::move(mid), std::move(err));
}

Real CBall::mag_upper() const { return up_add(hypot_up(mid_), rad_); }

Real CBall::mag_lower() const {
  Real m = down_sub(hypot_down(mid_), rad_);
  if (m.sign() < 0) return Real(0, 64);
  return m;
}

bool CBall::contains_zero() const { return mag_lower().sign() <= 0; }

CBall operator+(const CBall& a, const CBall& b) {
  CBig mid = a.mid_ + b.mid_;
  Real rad = up_add(up_add(a.rad_, b.rad_), slack(l1_up(mid), mid.prec(), 1));
  return CBall(std::move(mid), std::move(rad));
}

CBall operator-(const CBall& a, const CBall& b) { return a + (-b); }

CBall operator*(const CBall& a, const CBall& b) {
  CBig mid = a.mid_ * b.mid_;
  Real ma = hypot_up(a.mid_);
  Real mb = hypot_up(b.mid_);
  Real rad = up_add(up_mul(ma, b.rad_), up_mul(mb, a.rad_));
  rad = up_add(rad, up_mul(a.rad_, b.rad_));
  rad = up_add(rad, slack(up_mul(l1_up(a.mid_), l1_up(b.mid_)), mid.prec(), 3));
  return CBall(std::move(mid), std::move(rad));
}

CBall CBall::inverse() const {
  Real lo = mag_lower();
  if (lo.sign() <= 0) throw ArithmeticError("inverse of a ball containing zero");
  mpfr_prec_t p = prec();
  CBig one = CBig::from_rat(1, p);
  CBig inv = one / mid_;
  // |1/z - 1/m| <= r / (|m| (|m| - r))
  Real m_lo = hypot_down(mid_);
  Real denom(64);
  mpfr_mul(denom.get(), m_lo.get(), lo.get(), MPFR_RNDD);
  Real rad = rad_.is_zero() ? Real(0, 64) : up_div(rad_, denom);
  rad = up_add(rad, slack(l1_up(inv), p, 4));
  return CBall(std::move(inv), std::move(rad));
}

CBall operator/(const CBall& a, const CBall& b) { return a * b.inverse(); }

CBall CBall::scaled(const Rat& q) const { return *this * exact_rat(q, prec()); }

}  // namespace hh
