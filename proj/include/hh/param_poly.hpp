#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hh/alg_scalar.hpp"

namespace hh {

/// Polynomial in named free parameters with AlgScalar coefficients.
/// A parameter-free value is compatible with any name list; otherwise both
/// operands of a binary operation must carry the same list.
class ParamPoly {
 public:
  using Exponents = std::vector<int>;

  ParamPoly() = default;
  ParamPoly(const AlgScalar& c);  // NOLINT(google-explicit-constructor)
  ParamPoly(const Rat& c) : ParamPoly(AlgScalar(c)) {}  // NOLINT(google-explicit-constructor)
  ParamPoly(long c) : ParamPoly(AlgScalar(c)) {}        // NOLINT(google-explicit-constructor)
  explicit ParamPoly(std::vector<std::string> names);

  static ParamPoly variable(const std::vector<std::string>& names, const std::string& name);
  static ParamPoly constant(const std::vector<std::string>& names, const AlgScalar& c);

  const std::vector<std::string>& names() const { return names_; }
  const std::map<Exponents, AlgScalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// No parameter appears with a positive exponent.
  bool is_constant() const;
  AlgScalar constant_term() const;
  std::optional<AlgScalar> as_constant() const;
  int total_degree() const;
  int degree_in(const std::string& name) const;
  /// The same polynomial over a superset list of names.
  ParamPoly with_names(const std::vector<std::string>& names) const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& b);
  ParamPoly& operator-=(const ParamPoly& b);
  ParamPoly& operator*=(const ParamPoly& b);
  ParamPoly& operator*=(const AlgScalar& c);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }
  friend ParamPoly operator*(ParamPoly a, const AlgScalar& c) { return a *= c; }
  friend ParamPoly operator*(const AlgScalar& c, ParamPoly a) { return a *= c; }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  /// Replaces the named parameters; the result lives over `result_names`.
  ParamPoly substitute(const std::map<std::string, ParamPoly>& values,
                       const std::vector<std::string>& result_names) const;
  /// Binds some parameters to exact values and drops them from the list.
  ParamPoly bind(const std::map<std::string, AlgScalar>& values) const;
  AlgScalar evaluate(const std::map<std::string, AlgScalar>& values) const;
  CBig evaluate(const std::map<std::string, CBig>& values, mpfr_prec_t prec) const;
  ParamPoly derivative(const std::string& name) const;
  ParamPoly map_coeffs(const std::function<AlgScalar(const AlgScalar&)>& f) const;

  std::string to_string() const;

 private:
  friend void align(ParamPoly& a, ParamPoly& b);
  int index_of(const std::string& name) const;
  std::vector<std::string> names_;
  std::map<Exponents, AlgScalar> terms_;
};

}  // namespace hh
