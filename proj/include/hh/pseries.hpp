#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hh/param_poly.hpp"

namespace hh {

/// Truncated series sum_k c_k τ^(base + k/q), τ = t - t0, known for all
/// exponents below `order` (exclusive). The leading stored coefficient is
/// nonzero unless the series is zero; a zero series has base == order.
class PSeries {
 public:
  PSeries() : base_(0), q_(1), order_(0) {}
  PSeries(Rat base, int q, std::vector<ParamPoly> coeffs, Rat order);

  static PSeries zero(const Rat& order, int q = 1);
  /// c τ^e, truncated at `order`.
  static PSeries monomial(const ParamPoly& c, const Rat& e, const Rat& order, int q = 1);

  const Rat& base() const { return base_; }
  int q() const { return q_; }
  const Rat& order() const { return order_; }
  const std::vector<ParamPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Leading exponent; equals order() for the zero series.
  const Rat& valuation() const { return base_; }
  Rat exponent(size_t k) const { return base_ + rat(static_cast<long>(k), q_); }
  /// Coefficient of τ^e (zero off-grid or beyond the stored range).
  ParamPoly coeff(const Rat& e) const;
  const ParamPoly& leading() const;

  const std::optional<AlgScalar>& t0() const { return t0_; }
  void set_t0(std::optional<AlgScalar> t0) { t0_ = std::move(t0); }

  PSeries refined(int q) const;
  PSeries truncated(const Rat& order) const;
  PSeries map_coeffs(const std::function<ParamPoly(const ParamPoly&)>& f) const;
  PSeries bind(const std::map<std::string, AlgScalar>& values) const;

  PSeries operator-() const;
  friend PSeries operator+(const PSeries& a, const PSeries& b);
  friend PSeries operator-(const PSeries& a, const PSeries& b);
  friend PSeries operator*(const PSeries& a, const PSeries& b);
  friend PSeries operator*(const PSeries& a, const ParamPoly& c);
  friend PSeries operator*(const ParamPoly& c, const PSeries& a) { return a * c; }
  /// Exact comparison of all coefficients below the smaller order.
  friend bool agree(const PSeries& a, const PSeries& b);

  /// Exponents with nonzero coefficient (for reports).
  std::vector<Rat> support() const;
  std::string to_string() const;

 private:
  void normalize();
  Rat base_;
  int q_;
  std::vector<ParamPoly> coeffs_;
  Rat order_;
  std::optional<AlgScalar> t0_;
};

PSeries ps_add(const PSeries& a, const PSeries& b);
PSeries ps_mul(const PSeries& a, const PSeries& b);
PSeries ps_scale(const PSeries& a, const ParamPoly& c);
/// n-th derivative in τ.
PSeries ps_diff(const PSeries& a, int n = 1);
/// Multiplicative inverse; the leading coefficient must be parameter-free.
PSeries ps_inv(const PSeries& a);
/// Square root; the leading coefficient must be parameter-free. Its root is
/// taken by alg_root (nearest `branch`, principal when absent), and every
/// coefficient is mapped into the resulting field.
PSeries ps_sqrt(const PSeries& a, std::optional<CBig> branch = std::nullopt);
/// sqrt(y)^(2 * exponent) for exponent in {3/2, 5/2}.
PSeries ps_compose_halfpower(const PSeries& y, const Rat& exponent, std::optional<CBig> branch = std::nullopt);

struct SeriesValue {
  CBig value;
  /// Magnitude of the largest of the last two nonzero terms.
  Real tail_estimate;
};
/// Evaluates at τ (principal branch of τ^(1/2)); all parameters must be bound.
SeriesValue ps_eval(const PSeries& a, const CBig& tau, const std::map<std::string, CBig>& bindings,
                    mpfr_prec_t prec);

}  // namespace hh
