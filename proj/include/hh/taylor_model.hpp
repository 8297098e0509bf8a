#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hh/param_poly.hpp"

namespace hh {

/// Monomials of total degree <= dmax in n variables, with a product table.
class TMSpace {
 public:
  TMSpace(std::vector<std::string> names, int dmax, mpfr_prec_t prec);

  const std::vector<std::string>& names() const { return names_; }
  int dmax() const { return dmax_; }
  mpfr_prec_t prec() const { return prec_; }
  size_t size() const { return monos_.size(); }
  const std::vector<int>& monomial(size_t k) const { return monos_[k]; }
  /// Index of the product monomial, or -1 beyond dmax.
  int product(size_t i, size_t j) const { return prod_[i * monos_.size() + j]; }
  int index_of(const std::vector<int>& e) const;

 private:
  std::vector<std::string> names_;
  int dmax_;
  mpfr_prec_t prec_;
  std::vector<std::vector<int>> monos_;
  std::vector<int> prod_;
};

/// Polynomial in the space's variables with ball coefficients plus a
/// remainder radius: it encloses a function on the unit polydisk
/// |p_k| <= 1 whose values differ from the polynomial by at most `rem`.
class TaylorModel {
 public:
  explicit TaylorModel(std::shared_ptr<const TMSpace> space);

  static TaylorModel constant(std::shared_ptr<const TMSpace> space, const CBall& c);
  /// Encloses an exact polynomial; parameters absent from the space are an
  /// error, terms above dmax go to the remainder.
  static TaylorModel from_poly(std::shared_ptr<const TMSpace> space, const ParamPoly& p);

  const Real& rem() const { return rem_; }
  bool is_zero() const;
  /// Rigorous upper bound of |value| over the polydisk.
  Real mag_upper() const;
  /// Turns the whole model into remainder when its bound is below `tiny`.
  void squash(const Real& tiny);

  TaylorModel operator-() const;
  friend TaylorModel operator+(const TaylorModel& a, const TaylorModel& b);
  friend TaylorModel operator-(const TaylorModel& a, const TaylorModel& b);
  friend TaylorModel operator*(const TaylorModel& a, const TaylorModel& b);
  friend TaylorModel operator*(const TaylorModel& a, const CBall& c);
  TaylorModel& operator+=(const TaylorModel& b);

 private:
  std::shared_ptr<const TMSpace> space_;
  std::vector<CBall> c_;
  std::vector<char> nz_;
  Real rem_;
  bool dense_ = false;  // false when only the remainder is populated
};

}  // namespace hh
