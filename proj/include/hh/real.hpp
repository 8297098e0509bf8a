#pragma once

#include <mpfr.h>

#include <complex>
#include <string>

#include "hh/rat.hpp"

namespace hh {

/// RAII wrapper around an MPFR value. Binary operations produce a result
/// at the larger of the operand precisions, rounded to nearest.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64);
  Real(long value, mpfr_prec_t prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_rat(const Rat& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real from_double(double v, mpfr_prec_t prec);
  /// 2^e at the given precision.
  static Real pow2(long e, mpfr_prec_t prec = 64);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(value_); }
  Real with_prec(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Exact rational value of the binary float.
  Rat to_rat() const;
  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits) const;

  Real operator-() const;
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator>=(const Real& a, const Real& b) { return b <= a; }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);

// Upward-rounded helpers on non-negative magnitudes, used for ball radii.
Real up_add(const Real& a, const Real& b);
Real up_mul(const Real& a, const Real& b);
Real up_div(const Real& a, const Real& b);
Real up_from_rat(const Rat& q);
/// Lower bound of a - b (rounded down).
Real down_sub(const Real& a, const Real& b);

/// Complex number with MPFR parts.
class CBig {
 public:
  explicit CBig(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
  CBig(Real re, Real im);

  static CBig from_qi(const QI& z, mpfr_prec_t prec);
  static CBig from_rat(const Rat& q, mpfr_prec_t prec) { return from_qi(QI(q), prec); }
  static CBig from_complex(std::complex<double> z, mpfr_prec_t prec);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }
  mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }
  CBig with_prec(mpfr_prec_t prec) const;

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  std::string to_string(int digits) const;

  CBig operator-() const { return CBig(-re_, -im_); }
  CBig conj() const { return CBig(re_, -im_); }
  friend CBig operator+(const CBig& a, const CBig& b);
  friend CBig operator-(const CBig& a, const CBig& b);
  friend CBig operator*(const CBig& a, const CBig& b);
  friend CBig operator/(const CBig& a, const CBig& b);
  CBig& operator+=(const CBig& b) { return *this = *this + b; }
  CBig& operator-=(const CBig& b) { return *this = *this - b; }
  CBig& operator*=(const CBig& b) { return *this = *this * b; }

 private:
  Real re_;
  Real im_;
};

Real abs(const CBig& z);
/// Principal square root (branch cut on the negative real axis).
CBig sqrt(const CBig& z);
CBig pow(const CBig& z, long n);
CBig sin(const CBig& z);
CBig cos(const CBig& z);
/// Principal n-th root.
CBig principal_root(const CBig& z, unsigned n);

/// Complex ball: every value within `rad` of `mid` (rad is an upper bound,
/// rounded outward). Operations propagate radii rigorously.
class CBall {
 public:
  explicit CBall(mpfr_prec_t prec = 64) : mid_(prec), rad_(0, 64) {}
  CBall(CBig mid, Real rad) : mid_(std::move(mid)), rad_(std::move(rad)) {}

  static CBall exact_qi(const QI& z, mpfr_prec_t prec);
  static CBall exact_rat(const Rat& q, mpfr_prec_t prec) { return exact_qi(QI(q), prec); }

  const CBig& mid() const { return mid_; }
  const Real& rad() const { return rad_; }
  mpfr_prec_t prec() const { return mid_.prec(); }

  /// Rigorous upper bound on |z| over the ball.
  Real mag_upper() const;
  /// Rigorous lower bound on |z| over the ball (0 if the ball touches 0).
  Real mag_lower() const;
  bool contains_zero() const;

  CBall operator-() const { return CBall(-mid_, rad_); }
  friend CBall operator+(const CBall& a, const CBall& b);
  friend CBall operator-(const CBall& a, const CBall& b);
  friend CBall operator*(const CBall& a, const CBall& b);
  friend CBall operator/(const CBall& a, const CBall& b);
  CBall& operator+=(const CBall& b) { return *this = *this + b; }
  CBall& operator*=(const CBall& b) { return *this = *this * b; }
  CBall inverse() const;
  CBall scaled(const Rat& q) const;
  CBall widened(const Real& extra) const { return CBall(mid_, up_add(rad_, extra)); }

 private:
  CBig mid_;
  Real rad_;
};

}  // namespace hh
