#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hh {

using BigInt = mpz_class;
using Rat = mpq_class;

/// Parses "p/q", "p", or an exact decimal such as "-1.25" or "3e-4".
Rat parse_rat(std::string_view text);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);
std::string to_string(const BigInt& z);

Rat rat(long num, long den = 1);

/// Exact n-th root of a non-negative integer, if it exists.
std::optional<BigInt> exact_root(const BigInt& z, unsigned n);
std::optional<Rat> exact_root(const Rat& r, unsigned n);

/// Writes |z| = s^n * m with m free of n-th powers (trial division up to
/// `trial_limit`; any leftover cofactor is kept in m).
std::pair<BigInt, BigInt> extract_power(const BigInt& z, unsigned n,
                                        unsigned long trial_limit = 1000000);

/// Gaussian rational re + i*im.
struct QI {
  Rat re;
  Rat im;

  QI() = default;
  QI(Rat r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  QI(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  QI(long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  QI conj() const { return QI(re, -im); }
  Rat norm() const { return re * re + im * im; }

  QI& operator+=(const QI& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  QI& operator-=(const QI& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  QI& operator*=(const QI& o);
  QI& operator/=(const QI& o);

  friend QI operator+(QI a, const QI& b) { return a += b; }
  friend QI operator-(QI a, const QI& b) { return a -= b; }
  friend QI operator*(QI a, const QI& b) { return a *= b; }
  friend QI operator/(QI a, const QI& b) { return a /= b; }
  friend QI operator-(const QI& a) { return QI(-a.re, -a.im); }
  friend bool operator==(const QI& a, const QI& b) { return a.re == b.re && a.im == b.im; }
};

std::string to_string(const QI& z);
/// Accepts "p/q", "p/q+r/s*i", "r/s*i", "i", "-i" and decimal parts.
QI parse_qi(std::string_view text);

}  // namespace hh
