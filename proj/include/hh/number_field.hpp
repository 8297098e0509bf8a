#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hh/qi_poly.hpp"

namespace hh {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q(θ) or Q(i)(θ) with θ a root of a monic irreducible polynomial over the
/// base (Q, or Q(i) when `has_i`). The designated root is the unique root of
/// the minimal polynomial inside the disc |z - center| <= radius.
/// Degree-1 fields stand for Q and Q(i) themselves (θ = 0).
///
/// Fields are interned: structurally equal fields share one pointer, so
/// pointer comparison decides field identity.
class NumberField {
 public:
  static FieldPtr rationals();
  static FieldPtr gaussian();

  int degree() const { return hh::degree(minpoly_); }
  const QIPoly& minpoly() const { return minpoly_; }
  bool has_i() const { return has_i_; }
  const QI& center() const { return center_; }
  const Rat& radius() const { return radius_; }
  /// True for Q and Q(i).
  bool is_base() const { return degree() == 1; }

  /// Rigorous enclosure of θ with radius at most about 2^-prec * |θ|.
  CBall generator(mpfr_prec_t prec) const;
  /// All roots of the minimal polynomial at `prec` bits; index 0 is θ.
  std::vector<CBig> conjugates(mpfr_prec_t prec) const;

  std::string describe() const;

  NumberField(QIPoly minpoly, bool has_i, QI center, Rat radius);

 private:
  QIPoly minpoly_;
  bool has_i_;
  QI center_;
  Rat radius_;
  mutable std::mutex cache_mu_;
  mutable std::optional<CBig> cache_;
};

/// Adjoins a root of `poly` to `base` (Q or Q(i)). The root is the one in the
/// disc around `approx`; with no radius given the disc is chosen to isolate
/// the nearest root. Throws FieldError on reducible input, PreconditionError
/// on non-monic, non-squarefree, or non-isolating input.
FieldPtr field_adjoin(const FieldPtr& base, const QIPoly& poly, const QI& approx,
                      std::optional<Rat> radius = std::nullopt);

/// The same generator with i adjoined (identity when already present).
FieldPtr with_i(const FieldPtr& f);

/// Smallest field containing both, when one embeds in the other by the
/// standard inclusions (Q ⊂ Q(i) ⊂ Q(i)(θ), Q(θ) ⊂ Q(i)(θ)); else FieldError.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace hh
