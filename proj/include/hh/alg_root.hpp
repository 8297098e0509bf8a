#pragma once

#include <optional>

#include "hh/alg_scalar.hpp"

namespace hh {

struct RootResult {
  AlgScalar root;
  FieldPtr field;
  /// Image of the input field's generator in `field`.
  AlgScalar theta_image;
};

/// n-th root of a nonzero element. The branch is the root whose embedding is
/// nearest `approx` (principal root when absent). The root is recognised in
/// the current field when possible; otherwise a generator is adjoined, with
/// binomial minimal polynomials normalised to x^e ∓ m, m free of e-th powers.
RootResult alg_root(const AlgScalar& a, unsigned n, std::optional<CBig> approx = std::nullopt);

/// Maps an element of the input field of `r` into the new field.
AlgScalar map_to_field(const AlgScalar& x, const RootResult& r);

/// The same complex number inside `target`, when the generator of x's field
/// (binomial minimal polynomial) has a root in `target` with equal embedding.
std::optional<AlgScalar> embed_into(const AlgScalar& x, const FieldPtr& target);

/// Best rational approximation (continued fractions) within 2^-bits relative.
std::optional<Rat> rationalize(const Real& x, long bits);

}  // namespace hh
