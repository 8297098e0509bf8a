#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hh/number_field.hpp"

namespace hh {

/// Exact element of a number field, stored on the power basis 1, θ, θ², ...
/// with Gaussian-rational coordinates (purely real when i is not adjoined).
/// Mixed-field operands are lifted to their common field.
class AlgScalar {
 public:
  AlgScalar();
  AlgScalar(const Rat& q);  // NOLINT(google-explicit-constructor)
  AlgScalar(long q);        // NOLINT(google-explicit-constructor)
  AlgScalar(const QI& z);   // NOLINT(google-explicit-constructor)
  AlgScalar(FieldPtr field, std::vector<QI> coords);

  static AlgScalar generator(const FieldPtr& field);
  static AlgScalar imag_unit() { return AlgScalar(QI(0, 1)); }

  const FieldPtr& field() const { return field_; }
  const std::vector<QI>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  /// The element as a Gaussian rational, when it lies in Q(i).
  std::optional<QI> as_qi() const;
  std::optional<Rat> as_rat() const;

  /// Same element viewed in a field that contains this one.
  AlgScalar lifted(const FieldPtr& target) const;

  AlgScalar operator-() const;
  AlgScalar& operator+=(const AlgScalar& b);
  AlgScalar& operator-=(const AlgScalar& b);
  AlgScalar& operator*=(const AlgScalar& b);
  AlgScalar& operator/=(const AlgScalar& b);
  friend AlgScalar operator+(AlgScalar a, const AlgScalar& b) { return a += b; }
  friend AlgScalar operator-(AlgScalar a, const AlgScalar& b) { return a -= b; }
  friend AlgScalar operator*(AlgScalar a, const AlgScalar& b) { return a *= b; }
  friend AlgScalar operator/(AlgScalar a, const AlgScalar& b) { return a /= b; }
  friend bool operator==(const AlgScalar& a, const AlgScalar& b);
  friend bool operator!=(const AlgScalar& a, const AlgScalar& b) { return !(a == b); }

  AlgScalar inverse() const;
  AlgScalar pow(long n) const;

  /// Correctly scaled approximation with relative error <= 2^(1-prec).
  CBig embed(mpfr_prec_t prec) const;
  /// Rigorous enclosure of the embedding.
  CBall enclose(mpfr_prec_t prec) const;

  std::string to_string() const;

 private:
  void reduce();
  FieldPtr field_;
  std::vector<QI> coords_;
};

AlgScalar pow(const AlgScalar& a, long n);

}  // namespace hh
